#pragma once

#include <vector>

#include "mahler/dfa.hpp"

namespace mahler {

// Accepts w over C iff [w]_Z = c. Total: a rejecting sink "dead" absorbs
// every prefix that can no longer reach value c.
Recognizer constant_recognizer(const std::vector<int>& digits, std::int64_t c);
Recognizer zero_recognizer(const std::vector<int>& digits);

// The five-state machine reading (m)_Z - (n)_Z digitwise and emitting
// delta(m - n, n). Partial: q0 has no -1 transition.
DfaWithOutput<int> defect_automaton();

// The same function obtained from three guessed-word recognizers X_{-1},
// X_0, X_1, each determinized and merged into one output automaton.
DfaWithOutput<int> defect_automaton_constructed();

}  // namespace mahler
