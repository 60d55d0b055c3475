#pragma once

#include "mahler/automaton.hpp"

namespace mahler {

// Two states; mu(0) = identity, mu(1) = [[1,1],[0,1]], I = (1,0), F = (0,1)^T.
// Counts the 1-digits of the input: parity of ones over F_2, the number of
// ones over Z.
WeightedAutomaton thue_morse_automaton(RingSpec ring);

// Three-state 0/1 automaton reading (n)_Z; the weight is the number of ways
// to write n as a sum of distinct Fibonacci numbers.
WeightedAutomaton fibonacci_representation_automaton(RingSpec ring);

// Weight 1 on every word.
WeightedAutomaton all_ones_automaton(const Numeration& kind, RingSpec ring);

// Weight 0 on every word.
WeightedAutomaton zero_automaton(const Numeration& kind, RingSpec ring);

}  // namespace mahler
