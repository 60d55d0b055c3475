#pragma once

#include <vector>

#include "mahler/automaton.hpp"
#include "mahler/recognizers.hpp"

namespace mahler {

// Letters of three-track words (summand, summand, sum) are packed as
// a * base^2 + b * base + c.
int pack_triple(int a, int b, int c, int base);
void unpack_triple(int letter, int base, int& a, int& b, int& c);
// Packs three equal-length digit words letter by letter.
DigitWord pack_tracks(const DigitWord& a, const DigitWord& b, const DigitWord& c, int base);
// Three words left-padded to a common length, packed.
DigitWord addition_word(std::int64_t m, std::int64_t n, std::int64_t sum, const Numeration& kind);

// Two-state carry automaton over {0,1}^3.
WeightedAutomaton addition_automaton_base2();
// Carry automaton for base q; coincides with addition_automaton_base2 for q = 2.
WeightedAutomaton addition_automaton_base(int q);
// Canonicality of each track times the zero recognizer on u + v - w.
WeightedAutomaton addition_automaton_zeckendorf();
WeightedAutomaton addition_automaton(const Numeration& kind);

// Automaton of the convolution of the series of a1 and a2. Both factors
// must be invariant under leading zeros.
WeightedAutomaton cauchy_product(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                                 const WeightedAutomaton& add);

// Weight p_n on (n)_U and on 0^k (n)_U, zero elsewhere among canonical words.
WeightedAutomaton polynomial_automaton(const std::vector<RingValue>& coeffs, const Numeration& kind, RingSpec ring);

// Zeckendorf only: eval(result, n) = eval(a, n - j) for n >= j, 0 otherwise.
// a must be invariant under leading zeros.
WeightedAutomaton shift_regular(const WeightedAutomaton& a, std::int64_t j);

}  // namespace mahler
