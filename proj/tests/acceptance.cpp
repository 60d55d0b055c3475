#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mahler/catalog.hpp"
#include "mahler/compile.hpp"
#include "mahler/dfa.hpp"
#include "mahler/growth.hpp"
#include "mahler/products.hpp"
#include "mahler/recognizers.hpp"
#include "mahler/relation.hpp"
#include "oracles.hpp"

#ifndef MAHLER_CORPUS_DIR
#define MAHLER_CORPUS_DIR "corpus"
#endif

using namespace mahler;

namespace {

MahlerEquation load(const std::string& name) {
  std::ifstream in(std::string(MAHLER_CORPUS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_equation(ss.str());
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome phi_table() {
  const std::vector<std::int64_t> a{0, 2, 3, 5, 7, 8, 10, 11, 13, 15, 16, 18, 20, 21};
  const std::vector<std::int64_t> b{1, 4, 6, 9, 12, 14, 17, 19, 22, 25, 27, 30, 33, 35};
  for (std::int64_t n = 0; n <= 13; ++n) {
    if (phi(n) != a[static_cast<std::size_t>(n)]) return fail("phi(" + std::to_string(n) + ")");
    if (phi_iter(n, 2) + 1 != b[static_cast<std::size_t>(n)]) return fail("phi^2(" + std::to_string(n) + ")+1");
  }
  return {true, "n = 0..13"};
}

Outcome floor_formulas() {
  for (std::int64_t n = 0; n <= 100000; ++n) {
    if (phi(n) != oracle::phi_floor(n)) return fail("phi at n = " + std::to_string(n));
    if (phi_iter(n, 2) != oracle::phi2_floor(n)) return fail("phi^2 at n = " + std::to_string(n));
    if (phi_floor(n) != oracle::phi_floor(n) || phi2_floor(n) != oracle::phi2_floor(n))
      return fail("library floor formula at n = " + std::to_string(n));
  }
  return {true, "n <= 100000"};
}

Outcome defect_machines() {
  auto hard = defect_automaton();
  auto built = defect_automaton_constructed();
  if (hard.num_states() != 5) return fail("hard-coded machine has " + std::to_string(hard.num_states()) + " states");
  const std::int64_t M = 2000;
  std::vector<std::int64_t> shift(static_cast<std::size_t>(2 * M + 1));
  for (std::int64_t n = 0; n <= 2 * M; ++n) shift[static_cast<std::size_t>(n)] = oracle::shift_z(n);
  std::vector<DigitWord> words;
  for (std::int64_t n = 0; n <= M; ++n) words.push_back(word_from_string(oracle::zeckendorf(n)));
  for (std::int64_t m = 0; m <= M; ++m) {
    for (std::int64_t n = 0; n <= m; ++n) {
      auto w = digit_sub(words[static_cast<std::size_t>(m)], words[static_cast<std::size_t>(n)]);
      int expect = static_cast<int>(shift[static_cast<std::size_t>(m)] - shift[static_cast<std::size_t>(m - n)] -
                                    shift[static_cast<std::size_t>(n)]);
      int x = hard.run(w), y = built.run(w);
      if (x != expect || y != expect)
        return fail("m = " + std::to_string(m) + ", n = " + std::to_string(n));
    }
  }
  return {true, "0 <= n <= m <= 2000, constructed machine has " + std::to_string(built.num_states()) + " states"};
}

bool matches(const WeightedAutomaton& a, const MahlerEquation& p, std::int64_t N, std::string& where) {
  auto got = sequence_prefix(a, p.kind, N);
  auto want = oracle::solve(p, N);
  for (std::int64_t n = 0; n <= N; ++n) {
    if (!(got[static_cast<std::size_t>(n)] == want[static_cast<std::size_t>(n)])) {
      where = "n = " + std::to_string(n) + ": " + got[static_cast<std::size_t>(n)].to_string() + " vs " +
              want[static_cast<std::size_t>(n)].to_string();
      return false;
    }
  }
  return true;
}

Outcome theorem_base_q() {
  std::mt19937_64 rng(20240611);
  const std::vector<RingSpec> rings{RingSpec::prime_field(2), RingSpec::prime_field(5), RingSpec::integers()};
  for (int t = 0; t < 20; ++t) {
    auto kind = Numeration::base(t % 2 == 0 ? 2 : 3);
    auto p = oracle::random_isolating(rng, kind, rings[static_cast<std::size_t>(t % 3)], 3, 4);
    std::string where;
    if (!matches(compile_equation(p).automaton, p, 4096, where))
      return fail("random instance " + std::to_string(t) + " at " + where);
  }
  auto hb = load("hyperbinary.eq");
  auto a = compile_equation(hb).automaton;
  auto brute = oracle::hyperbinary_counts(512);
  auto got = sequence_prefix(a, hb.kind, 512);
  for (std::int64_t n = 0; n <= 512; ++n) {
    if (!(got[static_cast<std::size_t>(n)] == RingValue::from_int(RingSpec::integers(), brute[static_cast<std::size_t>(n)])))
      return fail("hyperbinary at n = " + std::to_string(n));
  }
  return {true, "20 random instances to n = 4096, hyperbinary to n = 512"};
}

Outcome theorem_zeckendorf() {
  auto start = std::chrono::steady_clock::now();
  auto fib = load("fibonacci.eq");
  auto a = compile_equation(fib).automaton;
  std::string where;
  if (!matches(a, fib, 2000, where)) return fail("Fibonacci vs oracle at " + where);
  auto brute = oracle::fibonacci_subset_counts(2000);
  auto got = sequence_prefix(a, fib.kind, 2000);
  for (std::int64_t n = 0; n <= 2000; ++n) {
    if (!(got[static_cast<std::size_t>(n)] == RingValue::from_int(RingSpec::integers(), brute[static_cast<std::size_t>(n)])))
      return fail("Fibonacci vs subset count at n = " + std::to_string(n));
  }
  std::mt19937_64 rng(77);
  const std::vector<RingSpec> rings{RingSpec::integers(), RingSpec::prime_field(5), RingSpec::prime_field(2)};
  for (int t = 0; t < 10; ++t) {
    auto p = oracle::random_isolating(rng, Numeration::zeckendorf(), rings[static_cast<std::size_t>(t % 3)], 2, 3);
    if (!matches(compile_equation(p).automaton, p, 2000, where))
      return fail("random instance " + std::to_string(t) + " at " + where);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 300) return fail("took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << "n <= 2000, 10 random instances, " << secs << " s";
  return {true, os.str()};
}

Outcome state_bounds() {
  std::ostringstream os;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    int q = t % 2 == 0 ? 2 : 3;
    auto p = oracle::random_isolating(rng, Numeration::base(q), RingSpec::integers(), 3, 4);
    std::int64_t bound = p.d * std::max<std::int64_t>(1, (p.h + q - 2) / (q - 1));
    BuildOptions raw;
    raw.trim = false;
    auto c = build_automaton_q(p, raw);
    if (static_cast<std::int64_t>(c.automaton.num_states()) > bound)
      return fail("base " + std::to_string(q) + " instance has " + std::to_string(c.automaton.num_states()) + " > " +
                  std::to_string(bound));
  }
  auto hb = compile_equation(load("hyperbinary.eq"), {0, false, false});
  os << "hyperbinary " << hb.automaton.num_states() << " <= 2";
  if (hb.automaton.num_states() > 2) return fail(os.str());
  for (const char* name : {"fibonacci.eq", "dumas.eq", "dumas_fib_x2.eq"}) {
    auto p = load(name);
    auto c = compile_equation(p);
    std::int64_t h = std::max(p.h, 1);
    std::int64_t bound = 320 * p.d * h * h;
    os << "; " << name << " " << c.automaton.num_states() << " (grid " << c.grid_size << ") <= " << bound;
    if (static_cast<std::int64_t>(c.automaton.num_states()) > bound) return fail(os.str());
  }
  return {true, os.str()};
}

Outcome thue_morse_z_relation() {
  auto p = load("thue_morse_z.eq");
  std::vector<RingValue> s;
  for (std::int64_t n = 0; n <= 500; ++n) s.push_back(RingValue::from_int(p.ring, oracle::zeckendorf_ones(n)));
  for (const auto& r : oracle::residual(p, s))
    if (!r.is_zero()) return fail("oracle residual nonzero");
  auto lib = residual(p, SeriesPrefix{p.ring, s});
  if (!is_zero_series(lib)) return fail("library residual nonzero");
  auto automaton_values = sequence_prefix(thue_morse_automaton(RingSpec::integers()), p.kind, 500);
  if (automaton_values != s) return fail("digit-count automaton disagrees with oracle");
  return {true, "N = 500"};
}

std::vector<RingValue> to_ring(const std::function<long long(std::int64_t)>& f, RingSpec ring, std::int64_t N) {
  std::vector<RingValue> v;
  for (std::int64_t n = 0; n <= N; ++n) v.push_back(RingValue::from_int(ring, f(n)));
  return v;
}

Outcome cauchy() {
  const std::int64_t N = 500;
  const RingSpec Z = RingSpec::integers();
  struct Pair {
    WeightedAutomaton a, b;
    std::vector<RingValue> fa, fb;
  };
  auto run = [&](const Numeration& kind, const std::vector<Pair>& pairs) -> std::string {
    auto add = addition_automaton(kind);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto h = sequence_prefix(cauchy_product(pairs[k].a, pairs[k].b, add), kind, N);
      for (std::int64_t n = 0; n <= N; ++n) {
        RingValue want = RingValue::zero(Z);
        for (std::int64_t i = 0; i <= n; ++i)
          want += pairs[k].fa[static_cast<std::size_t>(i)] * pairs[k].fb[static_cast<std::size_t>(n - i)];
        if (!(h[static_cast<std::size_t>(n)] == want))
          return kind.to_string() + " pair " + std::to_string(k) + " at n = " + std::to_string(n);
      }
    }
    return {};
  };
  auto b2 = Numeration::base(2);
  auto z = Numeration::zeckendorf();
  auto ones = to_ring([](std::int64_t) { return 1; }, Z, N);
  auto tm2 = to_ring([](std::int64_t n) { return oracle::popcount_base(n, 2); }, Z, N);
  auto tmz = to_ring([](std::int64_t n) { return oracle::zeckendorf_ones(n); }, Z, N);
  auto hbc = oracle::hyperbinary_counts(N);
  auto fbc = oracle::fibonacci_subset_counts(N);
  std::vector<RingValue> hb, fb;
  for (std::int64_t n = 0; n <= N; ++n) {
    hb.push_back(RingValue::from_int(Z, hbc[static_cast<std::size_t>(n)]));
    fb.push_back(RingValue::from_int(Z, fbc[static_cast<std::size_t>(n)]));
  }
  auto hyper = compile_equation(load("hyperbinary.eq")).automaton;
  auto fibz = compile_equation(load("fibonacci.eq")).automaton;
  auto tm = thue_morse_automaton(Z);
  auto one2 = all_ones_automaton(b2, Z);
  auto onez = all_ones_automaton(z, Z);
  if (auto e = run(b2, {{one2, one2, ones, ones}, {tm, hyper, tm2, hb}, {hyper, hyper, hb, hb}}); !e.empty()) return fail(e);
  if (auto e = run(z, {{onez, onez, ones, ones}, {tm, fibz, tmz, fb}, {fibz, fibz, fb, fb}}); !e.empty()) return fail(e);
  return {true, "3 pairs per numeration, n <= 500"};
}

Outcome determinization() {
  struct Case {
    std::string name;
    WeightedAutomaton a;
  };
  std::vector<Case> cases{
      {"Thue-Morse F2", thue_morse_automaton(RingSpec::prime_field(2))},
      {"Fibonacci Zmod:6", fibonacci_representation_automaton(RingSpec::mod(6))},
      {"hyperbinary F3", change_ring(compile_equation(load("hyperbinary.eq")).automaton, RingSpec::prime_field(3))},
      {"Fibonacci compiled F5", change_ring(compile_equation(load("fibonacci.eq")).automaton, RingSpec::prime_field(5))},
  };
  std::ostringstream os;
  for (const auto& c : cases) {
    auto direct = determinize(c.a, Direction::Direct);
    auto reverse = determinize(c.a, Direction::Reverse);
    for (const auto& w : all_words(c.a.alphabet(), 12)) {
      auto expect = weight(c.a, w);
      DigitWord r(w.rbegin(), w.rend());
      if (!(direct.run(w) == expect)) return fail(c.name + " direct on " + word_to_string(w));
      if (!(reverse.run(r) == expect)) return fail(c.name + " reverse on " + word_to_string(w));
    }
    os << c.name << " (" << direct.num_states() << "/" << reverse.num_states() << " states) ";
  }
  os << "all words of length <= 12";
  return {true, os.str()};
}

Outcome non_regular() {
  auto r = growth_analysis(10000, 3);
  if (!r.forms_agree) return fail("recurrence forms disagree");
  const std::vector<int> head{1, 1, 2, 4, 4, 8};
  for (std::size_t n = 0; n < head.size(); ++n)
    if (r.f[n] != head[n]) return fail("prefix at n = " + std::to_string(n));
  if (!r.thresholds[3]) return fail("no n <= 10000 with f_n > n^3");
  auto n3 = *r.thresholds[3];
  if (r.f[static_cast<std::size_t>(n3)] <= BigInt(n3) * n3 * n3) return fail("threshold does not exceed n^3");
  auto p = load("nonregular.eq");
  std::vector<RingValue> s;
  for (std::size_t n = 0; n <= 2000; ++n) s.push_back(RingValue::from_int(p.ring, r.f[n]));
  for (const auto& v : oracle::residual(p, s))
    if (!v.is_zero()) return fail("coefficients do not satisfy the equation");
  return {true, "f_" + std::to_string(n3) + " > " + std::to_string(n3) + "^3"};
}

Outcome relation_fibonacci() {
  auto a = change_ring(fibonacci_representation_automaton(RingSpec::integers()), RingSpec::rationals());
  auto found = find_relation(a, Numeration::zeckendorf(), 1, 1, 100, 2000);
  if (!found) return fail("no relation found");
  auto Q = RingSpec::rationals();
  auto want = MahlerEquation::zero(Numeration::zeckendorf(), Q, 1, 1);
  want.set(0, 0, RingValue::one(Q));
  want.set(1, 0, RingValue::one(Q));
  want.set(1, 1, RingValue::one(Q));
  if (found->d != 1 || found->h != 1 || found->alpha != want.alpha) return fail(equation_to_text(*found));
  auto s = sequence_prefix(a, found->kind, 2000);
  for (const auto& v : oracle::residual(*found, s))
    if (!v.is_zero()) return fail("residual nonzero to 2000");
  return {true, "y = (1 + x) Phi(y), N_check = 2000"};
}

Outcome dumas() {
  std::ostringstream os;
  for (const char* name : {"dumas.eq", "dumas_fib_x2.eq"}) {
    auto p = load(name);
    std::string where;
    auto c = compile_equation(p);
    if (!matches(c.automaton, p, 500, where)) return fail(std::string(name) + " at " + where);
    os << name << " ";
  }
  os << "n <= 500";
  return {true, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"phi table, exact", phi_table},
      {"floor formulas, exact", floor_formulas},
      {"defect automata, exact", defect_machines},
      {"base-q builder vs oracle, exact", theorem_base_q},
      {"Zeckendorf builder vs oracle, exact", theorem_zeckendorf},
      {"state bounds", state_bounds},
      {"Zeckendorf Thue-Morse residual, exact", thue_morse_z_relation},
      {"Cauchy product, exact", cauchy},
      {"determinization, exhaustive", determinization},
      {"non-regular growth, exact", non_regular},
      {"relation search, exact", relation_fibonacci},
      {"inhomogeneous builder, exact", dumas},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << " [" << criteria[k].first << "] "
              << o.detail << " (" << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
