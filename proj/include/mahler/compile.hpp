#pragma once

#include <cstdint>
#include <vector>

#include "mahler/automaton.hpp"
#include "mahler/equation.hpp"

namespace mahler {

struct BuildOptions {
  // Extra offsets j beyond the truncation bound.
  int extra_j = 0;
  // Allocate layer i = d as well (never useful; kept for the truncation check).
  bool include_layer_d = false;
  bool trim = true;
};

// s_{i,j,q,u}: layer, offset, defect-automaton state, window of g digits
// (most significant bit first).
struct ZStateIndex {
  int i = 0;
  std::int64_t j = 0;
  std::size_t q = 0;
  std::uint32_t u = 0;
};

struct CompiledAutomaton {
  WeightedAutomaton automaton;
  // States allocated before trimming (dead Zeckendorf states excluded).
  std::size_t grid_size = 0;
  // Largest offset allocated.
  std::int64_t j_max = 0;
  // Window length (Zeckendorf).
  int g = 0;
  // Per state of `automaton`: (i, j) in base q; (i, j, q, u) in Zeckendorf.
  std::vector<std::pair<int, std::int64_t>> q_index;
  std::vector<ZStateIndex> z_index;
};

// max(0, ceil(h/(q-1)) - 1).
std::int64_t h_tilde_q(int h, int q);

CompiledAutomaton build_automaton_q(const MahlerEquation& p, const BuildOptions& opts = {});
CompiledAutomaton build_automaton_z(const MahlerEquation& p, const BuildOptions& opts = {});
// Solution of f = sum_i A_i Phi^i(f) + g where g is the series of `g_automaton`
// (Zeckendorf, invariant under leading zeros). Any polynomial g stored in p
// is ignored in favour of g_automaton.
CompiledAutomaton build_automaton_dumas(const MahlerEquation& p, const WeightedAutomaton& g_automaton,
                                        const BuildOptions& opts = {});

// Dispatch on numeration kind; a polynomial g in p goes through the Dumas builder.
CompiledAutomaton compile_equation(const MahlerEquation& p, const BuildOptions& opts = {});

// Weight of a Zeckendorf input; rejects words containing "11".
RingValue evaluate_z(const WeightedAutomaton& a, const DigitWord& w);

}  // namespace mahler
