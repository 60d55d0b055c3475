#include "mahler/compile.hpp"

#include <deque>
#include <map>
#include <tuple>

#include "mahler/products.hpp"
#include "mahler/recognizers.hpp"

namespace mahler {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void check_buildable(const MahlerEquation& p, bool zeckendorf) {
  validate(p);
  if (p.kind.is_zeckendorf() != zeckendorf)
    throw EquationError(std::string("expected a ") + (zeckendorf ? "Zeckendorf" : "base-q") + " equation");
  if (!is_isolating(p)) throw EquationError("equation is not isolating (A_0 != 1)");
}

std::string window_string(std::uint32_t u, int g) {
  std::string s;
  for (int t = g - 1; t >= 0; --t) s.push_back(((u >> t) & 1U) ? '1' : '0');
  return s;
}

DigitWord window_word(std::uint32_t u, int g) {
  DigitWord w;
  for (int t = g - 1; t >= 0; --t) w.push_back(static_cast<int>((u >> t) & 1U));
  return w;
}

// The raw Zeckendorf grid, added to an existing builder.
struct ZGrid {
  int layers = 0;
  std::int64_t j_max = 0;
  int g = 0;
  std::size_t count = 0;
  std::vector<std::size_t> id;
  std::vector<ZStateIndex> index;  // by builder state id, for states of this grid

  std::size_t at(int i, std::int64_t j, std::size_t q, std::uint32_t u) const {
    if (i < 0 || i >= layers || j < 0 || j > j_max) return kNone;
    return id[((static_cast<std::size_t>(i) * static_cast<std::size_t>(j_max + 1) + static_cast<std::size_t>(j)) * 5 + q)
                  << g | u];
  }
};

ZGrid add_z_grid(const MahlerEquation& p, const BuildOptions& opts, WeightedAutomaton::Builder& b) {
  const auto defect = defect_automaton();
  ZGrid grid;
  grid.layers = p.d + (opts.include_layer_d ? 1 : 0);
  grid.j_max = h_tilde(p.h) + opts.extra_j;
  grid.g = static_cast<int>(canonical(grid.j_max, Numeration::zeckendorf()).size());
  if (grid.g > 24) throw EquationError("height too large for the Zeckendorf builder");
  const std::uint32_t windows = 1U << grid.g;
  const std::uint32_t mask = windows - 1;
  const auto jn = static_cast<std::size_t>(grid.j_max + 1);
  grid.id.assign(static_cast<std::size_t>(grid.layers) * jn * 5 * windows, kNone);

  // dhat[(j*5+q)*windows+u]: delta-hat, or 2 when the defect automaton is undefined.
  std::vector<int> dhat(jn * 5 * windows, 2);
  for (std::int64_t j = 0; j <= grid.j_max; ++j) {
    auto jw = canonical(j, Numeration::zeckendorf());
    for (std::size_t q = 0; q < 5; ++q) {
      for (std::uint32_t u = 0; u < windows; ++u) {
        auto s = defect.try_state_from(q, digit_sub(window_word(u, grid.g), jw));
        if (s) dhat[(static_cast<std::size_t>(j) * 5 + q) * windows + u] = defect.output(*s);
      }
    }
  }
  auto dhat_at = [&](std::int64_t j, std::size_t q, std::uint32_t u) {
    return dhat[(static_cast<std::size_t>(j) * 5 + q) * windows + u];
  };

  for (int i = 0; i < grid.layers; ++i) {
    for (std::int64_t j = 0; j <= grid.j_max; ++j) {
      for (std::size_t q = 0; q < 5; ++q) {
        for (std::uint32_t u = 0; u < windows; ++u) {
          if (dhat_at(j, q, u) == 2) continue;
          std::size_t s = b.add_state("s(" + std::to_string(i) + "," + std::to_string(j) + ",q" + std::to_string(q) +
                                      "," + window_string(u, grid.g) + ")");
          grid.id[((static_cast<std::size_t>(i) * jn + static_cast<std::size_t>(j)) * 5 + q) << grid.g | u] = s;
          if (grid.index.size() <= s) grid.index.resize(s + 1);
          grid.index[s] = {i, j, q, u};
          ++grid.count;
          if (i == 0 && j == 0) b.set_final(s, RingValue::one(p.ring));
        }
      }
    }
  }
  for (int i = 0; i < grid.layers; ++i) {
    std::size_t s = grid.at(i, 0, defect.start(), 0);
    if (s != kNone) b.set_initial(s, p.f0);
  }

  for (int i = 0; i < grid.layers; ++i) {
    for (std::int64_t j = 0; j <= grid.j_max; ++j) {
      const std::int64_t pj = phi(j);
      for (std::size_t q = 0; q < 5; ++q) {
        for (std::uint32_t u = 0; u < windows; ++u) {
          std::size_t from = grid.at(i, j, q, u);
          if (from == kNone) continue;
          const int dh = dhat_at(j, q, u);
          const int a = static_cast<int>((u >> (grid.g - 1)) & 1U);
          const std::size_t q2 = defect.next(q, a);
          if (q2 == DfaWithOutput<int>::kNone) continue;
          for (int bit = 0; bit <= 1; ++bit) {
            const std::uint32_t u2 = ((u << 1) | static_cast<std::uint32_t>(bit)) & mask;
            const std::int64_t ell = pj + dh + bit;
            if (ell < 0) continue;
            if (i + 1 < grid.layers && ell <= grid.j_max) {
              std::size_t to = grid.at(i + 1, ell, q2, u2);
              if (to != kNone) b.add_transition(from, bit, to, RingValue::one(p.ring));
            }
            if (i + 1 > p.d) continue;
            for (std::int64_t k = std::max<std::int64_t>(0, ell - p.h); k <= std::min(ell, grid.j_max); ++k) {
              const RingValue w = p.coeff(i + 1, static_cast<int>(ell - k));
              if (w.is_zero()) continue;
              std::size_t to = grid.at(0, k, q2, u2);
              if (to != kNone) b.add_transition(from, bit, to, w);
            }
          }
        }
      }
    }
  }
  return grid;
}

CompiledAutomaton finish(const WeightedAutomaton& raw, std::size_t grid_size, std::int64_t j_max, int g,
                         const std::vector<ZStateIndex>& z_index, bool do_trim) {
  CompiledAutomaton out;
  out.grid_size = grid_size;
  out.j_max = j_max;
  out.g = g;
  out.automaton = do_trim ? trim(raw) : raw;
  std::map<std::string, std::size_t> by_name;
  for (std::size_t s = 0; s < raw.num_states(); ++s) by_name[raw.state_name(s)] = s;
  for (std::size_t s = 0; s < out.automaton.num_states(); ++s) {
    std::size_t r = by_name.at(out.automaton.state_name(s));
    out.z_index.push_back(r < z_index.size() ? z_index[r] : ZStateIndex{-1, -1, 0, 0});
  }
  return out;
}

}  // namespace

std::int64_t h_tilde_q(int h, int q) {
  if (h <= 0) return 0;
  std::int64_t c = (h + q - 2) / (q - 1);
  return std::max<std::int64_t>(0, c - 1);
}

CompiledAutomaton build_automaton_q(const MahlerEquation& p, const BuildOptions& opts) {
  check_buildable(p, false);
  if (p.has_inhomogeneous_term()) throw EquationError("inhomogeneous term not supported in base q");
  if (!compatible_f0(p)) throw EquationError("f0 = " + p.f0.to_string() + " is not compatible with the equation");
  const int q = p.kind.q();
  const int layers = p.d + (opts.include_layer_d ? 1 : 0);
  const std::int64_t j_max = h_tilde_q(p.h, q) + opts.extra_j;
  WeightedAutomaton::Builder b(p.ring, p.kind.digits());
  auto id = [&](int i, std::int64_t j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(j_max + 1) + static_cast<std::size_t>(j); };
  std::vector<std::pair<int, std::int64_t>> index;
  for (int i = 0; i < layers; ++i) {
    for (std::int64_t j = 0; j <= j_max; ++j) {
      b.add_state("s(" + std::to_string(i) + "," + std::to_string(j) + ")");
      index.emplace_back(i, j);
    }
  }
  for (int i = 0; i < layers; ++i) b.set_initial(id(i, 0), p.f0);
  b.set_final(id(0, 0), RingValue::one(p.ring));
  for (int i = 0; i < layers; ++i) {
    for (std::int64_t j = 0; j <= j_max; ++j) {
      for (int bit = 0; bit < q; ++bit) {
        const std::int64_t m = q * j + bit;
        if (i + 1 < layers && m <= j_max) b.add_transition(id(i, j), bit, id(i + 1, m), RingValue::one(p.ring));
        if (i + 1 > p.d) continue;
        for (std::int64_t k = std::max<std::int64_t>(0, m - p.h); k <= std::min(m, j_max); ++k) {
          b.add_transition(id(i, j), bit, id(0, k), p.coeff(i + 1, static_cast<int>(m - k)));
        }
      }
    }
  }
  const auto raw = b.build();
  CompiledAutomaton out;
  out.grid_size = raw.num_states();
  out.j_max = j_max;
  out.automaton = opts.trim ? trim(raw) : raw;
  std::map<std::string, std::size_t> by_name;
  for (std::size_t s = 0; s < raw.num_states(); ++s) by_name[raw.state_name(s)] = s;
  for (std::size_t s = 0; s < out.automaton.num_states(); ++s) out.q_index.push_back(index[by_name.at(out.automaton.state_name(s))]);
  return out;
}

CompiledAutomaton build_automaton_z(const MahlerEquation& p, const BuildOptions& opts) {
  check_buildable(p, true);
  if (p.has_inhomogeneous_term()) throw EquationError("inhomogeneous term: use the Dumas builder");
  if (!compatible_f0(p)) throw EquationError("f0 = " + p.f0.to_string() + " is not compatible with the equation");
  WeightedAutomaton::Builder b(p.ring, {0, 1});
  ZGrid grid = add_z_grid(p, opts, b);
  return finish(b.build(), grid.count, grid.j_max, grid.g, grid.index, opts.trim);
}

CompiledAutomaton build_automaton_dumas(const MahlerEquation& p, const WeightedAutomaton& g_automaton,
                                        const BuildOptions& opts) {
  auto hom = p;
  hom.g.clear();
  check_buildable(hom, true);
  if (!(g_automaton.ring() == p.ring)) throw RingError("Dumas builder: ring mismatch between equation and g");
  const RingValue g0 = weight(g_automaton, {0});
  {
    auto probe = hom;
    probe.g = {g0};
    if (!compatible_f0(probe))
      throw EquationError("f0 = " + p.f0.to_string() + " is not compatible: (sum alpha(i,0)) f0 + g_0 != f0");
  }

  WeightedAutomaton::Builder b(p.ring, {0, 1});
  ZGrid grid = add_z_grid(hom, opts, b);
  const auto defect = defect_automaton();
  const std::uint32_t mask = (1U << grid.g) - 1;

  for (std::int64_t j = 0; j <= grid.j_max; ++j) {
    const auto bj = normalize(shift_regular(g_automaton, j));
    const std::size_t t = bj.num_states() - 1;
    using Key = std::tuple<std::size_t, std::size_t, std::uint32_t>;
    std::map<Key, std::size_t> id;
    std::deque<Key> queue;
    auto intern = [&](const Key& k) {
      auto it = id.find(k);
      if (it != id.end()) return it->second;
      auto [s, q, u] = k;
      std::size_t st = b.add_state("B" + std::to_string(j) + "(" + bj.state_name(s) + ",q" + std::to_string(q) + "," +
                                   window_string(u, grid.g) + ")");
      id.emplace(k, st);
      queue.push_back(k);
      return st;
    };
    for (std::size_t s = 0; s < bj.num_states(); ++s) {
      if (s == t || bj.initial(s).is_zero()) continue;
      b.add_initial(intern({s, defect.start(), 0}), bj.initial(s));
    }
    while (!queue.empty()) {
      Key k = queue.front();
      queue.pop_front();
      auto [s, q, u] = k;
      const std::size_t from = id.at(k);
      const int a = static_cast<int>((u >> (grid.g - 1)) & 1U);
      const std::size_t q2 = defect.next(q, a);
      if (q2 == DfaWithOutput<int>::kNone) continue;
      for (int bit = 0; bit <= 1; ++bit) {
        int l = bj.letter_index(bit);
        if (l < 0) continue;
        const std::uint32_t u2 = ((u << 1) | static_cast<std::uint32_t>(bit)) & mask;
        for (const auto& arc : bj.arcs(s, static_cast<std::size_t>(l))) {
          if (arc.to == t) {
            std::size_t target = grid.at(0, j, q2, u2);
            if (target != kNone) b.add_transition(from, bit, target, arc.weight);
          } else {
            b.add_transition(from, bit, intern({arc.to, q2, u2}), arc.weight);
          }
        }
      }
    }
  }
  return finish(b.build(), grid.count, grid.j_max, grid.g, grid.index, opts.trim);
}

CompiledAutomaton compile_equation(const MahlerEquation& p, const BuildOptions& opts) {
  if (!p.kind.is_zeckendorf()) return build_automaton_q(p, opts);
  if (p.has_inhomogeneous_term()) return build_automaton_dumas(p, polynomial_automaton(p.g, p.kind, p.ring), opts);
  return build_automaton_z(p, opts);
}

RingValue evaluate_z(const WeightedAutomaton& a, const DigitWord& w) {
  if (has_11(w)) throw AutomatonError("input " + word_to_string(w) + " contains 11; not a Zeckendorf word");
  return weight(a, w);
}

}  // namespace mahler
