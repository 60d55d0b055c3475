#include "mahler/relation.hpp"

#include <algorithm>

#include "mahler/matrix.hpp"

namespace mahler {

std::optional<MahlerEquation> find_relation(const WeightedAutomaton& a, const Numeration& kind, int d_max, int h_max,
                                            std::int64_t N, std::int64_t N_check) {
  const RingSpec ring = a.ring();
  if (!ring.is_field()) throw RingError("find_relation needs a field, got " + ring.to_string());
  if (d_max < 0 || h_max < 0 || N < 0) throw std::invalid_argument("find_relation: negative bound");
  if (N_check <= N) throw std::invalid_argument("find_relation: N_check must exceed N");

  SeriesPrefix s{ring, sequence_prefix(a, kind, N_check)};
  SeriesPrefix head{ring, std::vector<RingValue>(s.coeffs.begin(), s.coeffs.begin() + (N + 1))};
  std::vector<SeriesPrefix> powers;
  for (int i = 0; i <= d_max; ++i) powers.push_back(i == 0 ? head : phi_series_apply(head, kind, i));

  const std::size_t cols = static_cast<std::size_t>((d_max + 1) * (h_max + 1));
  Matrix m(ring, static_cast<std::size_t>(N + 1), cols);
  for (std::int64_t n = 0; n <= N; ++n) {
    for (int i = 0; i <= d_max; ++i) {
      for (int j = 0; j <= h_max && j <= n; ++j) {
        const auto& v = powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - j)];
        m(static_cast<std::size_t>(n), static_cast<std::size_t>(i * (h_max + 1) + j)) = i == 0 ? v : -v;
      }
    }
  }

  for (auto& v : nullspace(std::move(m))) {
    std::size_t first = 0;
    while (v[first].is_zero()) ++first;
    RingValue scale = v[first].inverse();
    int d = 0, h = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      v[c] *= scale;
      if (!v[c].is_zero()) {
        d = std::max(d, static_cast<int>(c) / (h_max + 1));
        h = std::max(h, static_cast<int>(c) % (h_max + 1));
      }
    }
    auto p = MahlerEquation::zero(kind, ring, d, h);
    for (std::size_t c = 0; c < cols; ++c) {
      int i = static_cast<int>(c) / (h_max + 1);
      int j = static_cast<int>(c) % (h_max + 1);
      if (!v[c].is_zero()) p.set(i, j, v[c]);
    }
    p.f0 = s[0];
    if (is_zero_series(residual(p, s))) return p;
  }
  return std::nullopt;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, RingValue::zero(a[0].spec()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j].add_product(a[i], b[j]);
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

Poly poly_pow(const Poly& a, std::uint64_t e, RingSpec ring) {
  Poly result{RingValue::one(ring)};
  Poly base = a;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
    e >>= 1;
  }
  return result;
}

MahlerEquation ore_equation(const std::vector<Poly>& ore, std::uint64_t p) {
  if (ore.size() < 2) throw EquationError("Ore relation needs A_0 and at least A_1");
  const RingSpec ring = RingSpec::prime_field(p);
  int h = 0;
  for (const auto& a : ore) h = std::max(h, static_cast<int>(a.size()) - 1);
  auto eq = MahlerEquation::zero(Numeration::base(static_cast<int>(p)), ring, static_cast<int>(ore.size()) - 1, h);
  for (std::size_t i = 0; i < ore.size(); ++i) {
    for (std::size_t j = 0; j < ore[i].size(); ++j) {
      eq.set(static_cast<int>(i), static_cast<int>(j), i == 0 ? ore[i][j] : -ore[i][j]);
    }
  }
  return eq;
}

ChristolResult christol_isolate(const std::vector<Poly>& ore, std::uint64_t p, const RingValue& g0) {
  const RingSpec ring = RingSpec::prime_field(p);
  if (ore.size() < 2) throw EquationError("Ore relation needs A_0 and at least A_1");
  for (const auto& a : ore) {
    for (const auto& c : a) {
      if (!(c.spec() == ring)) throw RingError("Ore coefficient not in " + ring.to_string());
    }
  }
  const Poly& a0 = ore[0];
  if (a0.empty() || a0[0].is_zero()) throw EquationError("A_0(0) must be nonzero");

  std::vector<Poly> b(ore.size());
  std::uint64_t qi = 1;
  int h = 0;
  for (std::size_t i = 1; i < ore.size(); ++i) {
    qi *= p;
    b[i] = poly_mul(ore[i], poly_pow(a0, qi - 2, ring));
    h = std::max(h, static_cast<int>(b[i].size()) - 1);
  }
  int d = static_cast<int>(ore.size()) - 1;
  while (d > 0 && std::all_of(b[static_cast<std::size_t>(d)].begin(), b[static_cast<std::size_t>(d)].end(),
                              [](const RingValue& v) { return v.is_zero(); }))
    --d;
  if (d == 0) throw EquationError("all B_i vanish");
  auto eq = MahlerEquation::zero(Numeration::base(static_cast<int>(p)), ring, d, h);
  eq.set(0, 0, RingValue::one(ring));
  for (int i = 1; i <= d; ++i) {
    for (std::size_t j = 0; j < b[static_cast<std::size_t>(i)].size(); ++j) {
      eq.set(i, static_cast<int>(j), -b[static_cast<std::size_t>(i)][j]);
    }
  }
  while (eq.h > 0) {
    bool any = false;
    for (int i = 0; i <= d; ++i) any = any || !eq.coeff(i, eq.h).is_zero();
    if (any) break;
    for (auto& row : eq.alpha) row.pop_back();
    --eq.h;
  }
  eq.f0 = g0;
  return {eq, a0};
}

}  // namespace mahler
