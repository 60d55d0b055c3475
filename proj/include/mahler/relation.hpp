#pragma once

#include <optional>
#include <vector>

#include "mahler/automaton.hpp"
#include "mahler/equation.hpp"

namespace mahler {

// Searches for A_0 y = sum_{i=1}^{d_max} A_i Phi^i(y) with deg A_i <= h_max
// annihilating the series of `a`: the residual coefficients 0..N give a
// homogeneous linear system whose exact nullspace is scanned in order of
// free column; the first candidate whose residual also vanishes up to
// N_check is returned, scaled so that its first nonzero alpha is 1, with d
// and h trimmed to the support. The returned d may be 0. Field rings only.
std::optional<MahlerEquation> find_relation(const WeightedAutomaton& a, const Numeration& kind, int d_max, int h_max,
                                            std::int64_t N, std::int64_t N_check);

// Polynomials over F_p, lowest degree first.
using Poly = std::vector<RingValue>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, std::uint64_t e, RingSpec ring);

struct ChristolResult {
  // Isolating base-p equation for g = f / A_0 (g0 = 1 unless A_0 is the only
  // nonzero coefficient, never the case here).
  MahlerEquation isolated;
  Poly multiplier;  // A_0
};

// For sum_{i=0}^d A_i Phi^i(f) = 0 over F_p with q = p and A_0(0) != 0:
// B_i = A_i A_0^{p^i - 2} and g = -sum_{i>=1} B_i Phi^i(g), returned in the
// isolating convention (alpha(i, .) = -B_i). f0 of the result is g0.
ChristolResult christol_isolate(const std::vector<Poly>& ore, std::uint64_t p, const RingValue& g0);

// The original relation sum_{i=0}^d A_i Phi^i(y) = 0 as a MahlerEquation in
// this library's convention (alpha(0,.) = A_0, alpha(i,.) = -A_i).
MahlerEquation ore_equation(const std::vector<Poly>& ore, std::uint64_t p);

}  // namespace mahler
