#include "mahler/equation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace mahler {

MahlerEquation MahlerEquation::zero(const Numeration& kind, RingSpec ring, int d, int h) {
  if (d < 0 || h < 0) throw EquationError("negative exponent or height");
  MahlerEquation p;
  p.kind = kind;
  p.ring = ring;
  p.d = d;
  p.h = h;
  p.alpha.assign(static_cast<std::size_t>(d + 1), std::vector<RingValue>(static_cast<std::size_t>(h + 1), RingValue::zero(ring)));
  p.f0 = RingValue::zero(ring);
  return p;
}

RingValue MahlerEquation::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > d || j > h) return RingValue::zero(ring);
  return alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void MahlerEquation::set(int i, int j, const RingValue& v) {
  if (i < 0 || j < 0 || i > d || j > h) throw EquationError("coefficient index out of range");
  if (!(v.spec() == ring)) throw RingError("coefficient not in the equation ring");
  alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
}

RingValue MahlerEquation::g_coeff(std::int64_t n) const {
  if (n < 0 || n >= static_cast<std::int64_t>(g.size())) return RingValue::zero(ring);
  return g[static_cast<std::size_t>(n)];
}

bool MahlerEquation::has_inhomogeneous_term() const {
  return std::any_of(g.begin(), g.end(), [](const RingValue& v) { return !v.is_zero(); });
}

void validate(const MahlerEquation& p) {
  if (p.d < 1) throw EquationError("exponent d must be at least 1");
  if (p.alpha.size() != static_cast<std::size_t>(p.d + 1)) throw EquationError("coefficient table has wrong shape");
  for (const auto& row : p.alpha) {
    if (row.size() != static_cast<std::size_t>(p.h + 1)) throw EquationError("coefficient table has wrong shape");
    for (const auto& v : row) {
      if (!(v.spec() == p.ring)) throw EquationError("coefficient not in ring " + p.ring.to_string());
    }
  }
  if (!(p.f0.spec() == p.ring)) throw EquationError("f0 not in ring " + p.ring.to_string());
  for (const auto& v : p.g) {
    if (!(v.spec() == p.ring)) throw EquationError("g coefficient not in ring " + p.ring.to_string());
  }
  const auto& top = p.alpha.back();
  if (std::all_of(top.begin(), top.end(), [](const RingValue& v) { return v.is_zero(); }))
    throw EquationError("A_" + std::to_string(p.d) + " is zero: d is not the exponent");
  if (p.h > 0) {
    bool any = false;
    for (const auto& row : p.alpha) any = any || !row.back().is_zero();
    if (!any) throw EquationError("no coefficient of degree " + std::to_string(p.h) + ": h is not the height");
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

MahlerEquation parse_equation(const std::string& text) {
  std::optional<RingSpec> ring;
  std::optional<Numeration> kind;
  std::optional<int> d, h;
  std::optional<std::pair<std::string, int>> f0;
  std::vector<std::tuple<int, int, std::string, int>> alphas;
  std::vector<std::tuple<int, std::string, int>> gs;

  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto tok = split(raw);
    if (tok.empty()) continue;
    const auto& key = tok[0];
    auto need = [&](std::size_t n) {
      if (tok.size() != n) throw ParseError(line, "'" + key + "' takes " + std::to_string(n - 1) + " argument(s)");
    };
    try {
      if (key == "ring") {
        need(2);
        ring = RingSpec::parse(tok[1]);
      } else if (key == "numeration") {
        if (tok.size() == 2 && tok[1] == "zeckendorf") {
          kind = Numeration::zeckendorf();
        } else if (tok.size() == 3 && tok[1] == "base") {
          kind = Numeration::base(parse_int(tok[2], line));
        } else {
          throw ParseError(line, "expected 'numeration base <q>' or 'numeration zeckendorf'");
        }
      } else if (key == "d") {
        need(2);
        d = parse_int(tok[1], line);
      } else if (key == "h") {
        need(2);
        h = parse_int(tok[1], line);
      } else if (key == "f0") {
        need(2);
        f0 = {tok[1], line};
      } else if (key == "alpha") {
        need(4);
        alphas.emplace_back(parse_int(tok[1], line), parse_int(tok[2], line), tok[3], line);
      } else if (key == "g") {
        need(3);
        gs.emplace_back(parse_int(tok[1], line), tok[2], line);
      } else {
        throw ParseError(line, "unknown keyword '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
  }
  if (!ring) throw ParseError(line, "missing 'ring' line");
  if (!kind) throw ParseError(line, "missing 'numeration' line");
  if (!d) throw ParseError(line, "missing 'd' line");
  if (!h) throw ParseError(line, "missing 'h' line");
  if (*d < 1) throw ParseError(line, "d must be at least 1");
  if (*h < 0) throw ParseError(line, "h must be nonnegative");

  auto p = MahlerEquation::zero(*kind, *ring, *d, *h);
  auto element = [&](const std::string& s, int at) {
    try {
      return RingValue::parse(*ring, s);
    } catch (const std::exception& e) {
      throw ParseError(at, e.what());
    }
  };
  if (f0) p.f0 = element(f0->first, f0->second);
  for (const auto& [i, j, v, at] : alphas) {
    if (i < 0 || i > *d || j < 0 || j > *h)
      throw ParseError(at, "alpha index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0..d x 0..h");
    p.set(i, j, element(v, at));
  }
  for (const auto& [n, v, at] : gs) {
    if (n < 0) throw ParseError(at, "negative exponent in g");
    if (p.g.size() <= static_cast<std::size_t>(n)) p.g.resize(static_cast<std::size_t>(n) + 1, RingValue::zero(*ring));
    p.g[static_cast<std::size_t>(n)] = element(v, at);
  }
  try {
    validate(p);
  } catch (const EquationError& e) {
    throw ParseError(line, e.what());
  }
  return p;
}

std::string equation_to_text(const MahlerEquation& p) {
  std::ostringstream os;
  os << "ring " << p.ring.to_string() << "\n";
  os << "numeration " << (p.kind.is_zeckendorf() ? "zeckendorf" : "base " + std::to_string(p.kind.q())) << "\n";
  os << "d " << p.d << "\n";
  os << "h " << p.h << "\n";
  os << "f0 " << p.f0 << "\n";
  for (int i = 0; i <= p.d; ++i) {
    for (int j = 0; j <= p.h; ++j) {
      auto v = p.coeff(i, j);
      if (!v.is_zero()) os << "alpha " << i << " " << j << " " << v << "\n";
    }
  }
  for (std::size_t n = 0; n < p.g.size(); ++n) {
    if (!p.g[n].is_zero()) os << "g " << n << " " << p.g[n] << "\n";
  }
  return os.str();
}

bool is_isolating(const MahlerEquation& p) {
  if (!p.coeff(0, 0).is_one()) return false;
  for (int j = 1; j <= p.h; ++j) {
    if (!p.coeff(0, j).is_zero()) return false;
  }
  return true;
}

namespace {

bool compatible_with_upper(const MahlerEquation& p, int upper) {
  RingValue sum = RingValue::zero(p.ring);
  for (int i = 1; i <= upper; ++i) sum += p.coeff(i, 0);
  return sum * p.f0 + p.g_coeff(0) == p.f0;
}

}  // namespace

bool compatible_f0(const MahlerEquation& p) { return compatible_with_upper(p, p.d); }

bool compatible_f0_upper_h(const MahlerEquation& p) { return compatible_with_upper(p, p.h); }

std::optional<std::int64_t> phi_power_preimage(const Numeration& kind, std::int64_t m, int i) {
  if (m < 0) return std::nullopt;
  if (kind.is_zeckendorf()) return phi_preimage(m, i);
  std::int64_t k = m;
  for (int t = 0; t < i; ++t) {
    if (k % kind.q() != 0) return std::nullopt;
    k /= kind.q();
  }
  return k;
}

SeriesPrefix phi_series_apply(const SeriesPrefix& s, const Numeration& kind, int i) {
  SeriesPrefix out{s.ring, std::vector<RingValue>(s.coeffs.size(), RingValue::zero(s.ring))};
  for (std::int64_t m = 0; m <= s.order(); ++m) {
    auto k = phi_power_preimage(kind, m, i);
    if (k) out.coeffs[static_cast<std::size_t>(m)] = s.coeffs[static_cast<std::size_t>(*k)];
  }
  return out;
}

SeriesPrefix solve_series(const MahlerEquation& p, std::int64_t N) {
  validate(p);
  if (!is_isolating(p)) throw EquationError("equation is not isolating (A_0 != 1); use residual to check a candidate");
  if (!compatible_f0(p)) {
    throw EquationError("f0 = " + p.f0.to_string() + " is not compatible: (sum_{i=1}^d alpha(i,0)) f0 + g_0 != f0");
  }
  SeriesPrefix s{p.ring, {}};
  if (N < 0) return s;
  s.coeffs.reserve(static_cast<std::size_t>(N + 1));
  s.coeffs.push_back(p.f0);
  for (std::int64_t n = 1; n <= N; ++n) {
    RingValue acc = p.g_coeff(n);
    for (int i = 1; i <= p.d; ++i) {
      for (int j = 0; j <= p.h && j <= n; ++j) {
        const RingValue& a = p.alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (a.is_zero()) continue;
        auto k = phi_power_preimage(p.kind, n - j, i);
        if (k) acc.add_product(a, s.coeffs[static_cast<std::size_t>(*k)]);
      }
    }
    s.coeffs.push_back(std::move(acc));
  }
  return s;
}

SeriesPrefix residual(const MahlerEquation& p, const SeriesPrefix& s) {
  if (!(p.ring == s.ring)) throw RingError("residual: ring mismatch");
  const auto N = s.order();
  SeriesPrefix r{p.ring, std::vector<RingValue>(s.coeffs.size(), RingValue::zero(p.ring))};
  std::vector<SeriesPrefix> powers;
  for (int i = 0; i <= p.d; ++i) powers.push_back(i == 0 ? s : phi_series_apply(s, p.kind, i));
  for (std::int64_t n = 0; n <= N; ++n) {
    RingValue acc = -p.g_coeff(n);
    for (int i = 0; i <= p.d; ++i) {
      for (int j = 0; j <= p.h && j <= n; ++j) {
        RingValue a = p.coeff(i, j);
        if (a.is_zero()) continue;
        if (i > 0) a = -a;
        acc.add_product(a, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - j)]);
      }
    }
    r.coeffs[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return r;
}

bool is_zero_series(const SeriesPrefix& s) {
  return std::all_of(s.coeffs.begin(), s.coeffs.end(), [](const RingValue& v) { return v.is_zero(); });
}

}  // namespace mahler
