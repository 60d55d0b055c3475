#include "mahler/products.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <tuple>

namespace mahler {

int pack_triple(int a, int b, int c, int base) { return (a * base + b) * base + c; }

void unpack_triple(int letter, int base, int& a, int& b, int& c) {
  c = letter % base;
  b = (letter / base) % base;
  a = letter / (base * base);
}

DigitWord pack_tracks(const DigitWord& a, const DigitWord& b, const DigitWord& c, int base) {
  if (a.size() != b.size() || a.size() != c.size()) throw std::invalid_argument("tracks of different lengths");
  DigitWord out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(pack_triple(a[i], b[i], c[i], base));
  return out;
}

DigitWord addition_word(std::int64_t m, std::int64_t n, std::int64_t sum, const Numeration& kind) {
  auto a = canonical(m, kind);
  auto b = canonical(n, kind);
  auto c = canonical(sum, kind);
  std::size_t len = std::max({a.size(), b.size(), c.size()});
  return pack_tracks(pad_left(a, len), pad_left(b, len), pad_left(c, len), kind.is_zeckendorf() ? 2 : kind.q());
}

namespace {

std::vector<int> triple_alphabet(int base) {
  std::vector<int> out;
  for (int l = 0; l < base * base * base; ++l) out.push_back(l);
  return out;
}

}  // namespace

WeightedAutomaton addition_automaton_base2() {
  const RingSpec z = RingSpec::integers();
  const RingValue one = RingValue::one(z);
  WeightedAutomaton::Builder b(z, triple_alphabet(2));
  auto s0 = b.add_state("0");
  auto s1 = b.add_state("1");
  b.set_initial(s0, one);
  b.set_final(s0, one);
  for (auto [x, y, s] : {std::tuple{0, 0, 0}, std::tuple{1, 0, 1}, std::tuple{0, 1, 1}})
    b.add_transition(s0, pack_triple(x, y, s, 2), s0, one);
  b.add_transition(s0, pack_triple(0, 0, 1, 2), s1, one);
  for (auto [x, y, s] : {std::tuple{1, 0, 0}, std::tuple{0, 1, 0}, std::tuple{1, 1, 1}})
    b.add_transition(s1, pack_triple(x, y, s, 2), s1, one);
  b.add_transition(s1, pack_triple(1, 1, 0, 2), s0, one);
  return b.build();
}

WeightedAutomaton addition_automaton_base(int q) {
  if (q < 2) throw std::invalid_argument("base must be at least 2");
  const RingSpec z = RingSpec::integers();
  const RingValue one = RingValue::one(z);
  WeightedAutomaton::Builder b(z, triple_alphabet(q));
  b.add_state("0");
  b.add_state("1");
  b.set_initial(0, one);
  b.set_final(0, one);
  for (int carry = 0; carry <= 1; ++carry) {
    for (int x = 0; x < q; ++x) {
      for (int y = 0; y < q; ++y) {
        for (int s = 0; s < q; ++s) {
          for (int in = 0; in <= 1; ++in) {
            if (x + y + in == s + q * carry) b.add_transition(carry, pack_triple(x, y, s, q), in, one);
          }
        }
      }
    }
  }
  return b.build();
}

WeightedAutomaton addition_automaton_zeckendorf() {
  const Recognizer zero = zero_recognizer({-1, 0, 1, 2});
  const RingSpec z = RingSpec::integers();
  const RingValue one = RingValue::one(z);
  WeightedAutomaton::Builder b(z, triple_alphabet(2));
  using Key = std::tuple<std::size_t, int, int, int>;
  std::map<Key, std::size_t> id;
  std::deque<Key> queue;
  auto intern = [&](const Key& k) {
    auto it = id.find(k);
    if (it != id.end()) return it->second;
    auto [r, la, lb, lc] = k;
    std::size_t s = b.add_state(zero.state_name(r) + "/" + std::to_string(la) + std::to_string(lb) + std::to_string(lc));
    if (zero.output(r)) b.set_final(s, one);
    id.emplace(k, s);
    queue.push_back(k);
    return s;
  };
  b.set_initial(intern({zero.start(), 0, 0, 0}), one);
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    auto [r, la, lb, lc] = k;
    std::size_t from = id.at(k);
    for (int x = 0; x <= 1; ++x) {
      if (x && la) continue;
      for (int y = 0; y <= 1; ++y) {
        if (y && lb) continue;
        for (int s = 0; s <= 1; ++s) {
          if (s && lc) continue;
          std::size_t r2 = zero.next(r, x + y - s);
          if (zero.state_name(r2) == "dead") continue;
          b.add_transition(from, pack_triple(x, y, s, 2), intern({r2, x, y, s}), one);
        }
      }
    }
  }
  return trim(b.build());
}

WeightedAutomaton addition_automaton(const Numeration& kind) {
  if (kind.is_zeckendorf()) return addition_automaton_zeckendorf();
  if (kind.q() == 2) return addition_automaton_base2();
  return addition_automaton_base(kind.q());
}

WeightedAutomaton cauchy_product(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                                 const WeightedAutomaton& add) {
  if (!(a1.ring() == a2.ring())) throw RingError("cauchy_product: ring mismatch");
  const RingSpec ring = a1.ring();
  const int base = static_cast<int>(std::lround(std::cbrt(static_cast<double>(add.alphabet().size()))));
  if (base * base * base != static_cast<int>(add.alphabet().size()))
    throw AutomatonError("cauchy_product: addition automaton alphabet is not a full set of triples");
  std::vector<int> digits;
  for (int d = 0; d < base; ++d) digits.push_back(d);
  WeightedAutomaton::Builder b(ring, digits);

  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::map<Key, std::size_t> id;
  std::deque<Key> queue;
  auto lift = [&](const RingValue& v) { return RingValue::from_int(ring, v.to_integer()); };
  auto intern = [&](const Key& k) {
    auto it = id.find(k);
    if (it != id.end()) return it->second;
    auto [p, s1, s2] = k;
    std::size_t s = b.add_state("(" + add.state_name(p) + "," + a1.state_name(s1) + "," + a2.state_name(s2) + ")");
    b.set_final(s, lift(add.final_weight(p)) * a1.final_weight(s1) * a2.final_weight(s2));
    id.emplace(k, s);
    queue.push_back(k);
    return s;
  };
  for (std::size_t p = 0; p < add.num_states(); ++p) {
    if (add.initial(p).is_zero()) continue;
    for (std::size_t s1 = 0; s1 < a1.num_states(); ++s1) {
      if (a1.initial(s1).is_zero()) continue;
      for (std::size_t s2 = 0; s2 < a2.num_states(); ++s2) {
        if (a2.initial(s2).is_zero()) continue;
        b.add_initial(intern({p, s1, s2}), lift(add.initial(p)) * a1.initial(s1) * a2.initial(s2));
      }
    }
  }
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    auto [p, s1, s2] = k;
    std::size_t from = id.at(k);
    for (std::size_t l = 0; l < add.alphabet().size(); ++l) {
      int x = 0, y = 0, c = 0;
      unpack_triple(add.alphabet()[l], base, x, y, c);
      int l1 = a1.letter_index(x);
      int l2 = a2.letter_index(y);
      if (l1 < 0 || l2 < 0) continue;
      for (const auto& arc : add.arcs(p, l)) {
        RingValue w = lift(arc.weight);
        for (const auto& arc1 : a1.arcs(s1, static_cast<std::size_t>(l1))) {
          RingValue w1 = w * arc1.weight;
          if (w1.is_zero()) continue;
          for (const auto& arc2 : a2.arcs(s2, static_cast<std::size_t>(l2))) {
            b.add_transition(from, c, intern({arc.to, arc1.to, arc2.to}), w1 * arc2.weight);
          }
        }
      }
    }
  }
  return trim(b.build());
}

WeightedAutomaton polynomial_automaton(const std::vector<RingValue>& coeffs, const Numeration& kind, RingSpec ring) {
  WeightedAutomaton::Builder b(ring, kind.digits());
  const std::size_t root = b.add_state("root");
  b.set_initial(root, RingValue::one(ring));
  b.add_transition(root, 0, root, RingValue::one(ring));
  std::map<DigitWord, std::size_t> node;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!(coeffs[n].spec() == ring)) throw RingError("polynomial coefficient in the wrong ring");
    if (coeffs[n].is_zero()) continue;
    if (n == 0) {
      b.set_final(root, coeffs[0]);
      continue;
    }
    auto w = canonical(static_cast<std::int64_t>(n), kind);
    std::size_t s = root;
    DigitWord prefix;
    for (int d : w) {
      prefix.push_back(d);
      auto it = node.find(prefix);
      if (it == node.end()) {
        std::size_t t = b.add_state(word_to_string(prefix));
        b.add_transition(s, d, t, RingValue::one(ring));
        it = node.emplace(prefix, t).first;
      }
      s = it->second;
    }
    b.set_final(s, coeffs[n]);
  }
  return b.build();
}

WeightedAutomaton shift_regular(const WeightedAutomaton& a, std::int64_t j) {
  if (j < 0) throw std::invalid_argument("shift_regular: negative shift");
  const Recognizer rec = constant_recognizer({-1, 0, 1}, j);
  WeightedAutomaton::Builder b(a.ring(), {0, 1});
  using Key = std::tuple<std::size_t, int, std::size_t>;
  std::map<Key, std::size_t> id;
  std::deque<Key> queue;
  auto intern = [&](const Key& k) {
    auto it = id.find(k);
    if (it != id.end()) return it->second;
    auto [r, e, s] = k;
    std::size_t t = b.add_state("(" + rec.state_name(r) + "," + std::to_string(e) + "," + a.state_name(s) + ")");
    if (rec.output(r)) b.set_final(t, a.final_weight(s));
    id.emplace(k, t);
    queue.push_back(k);
    return t;
  };
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    if (!a.initial(s).is_zero()) b.add_initial(intern({rec.start(), 0, s}), a.initial(s));
  }
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    auto [r, e, s] = k;
    std::size_t from = id.at(k);
    for (int d = 0; d <= 1; ++d) {
      for (int g = 0; g <= 1; ++g) {
        if (g == 1 && e == 1) continue;
        int lg = a.letter_index(g);
        if (lg < 0) continue;
        std::size_t r2 = rec.next(r, d - g);
        if (rec.state_name(r2) == "dead") continue;
        for (const auto& arc : a.arcs(s, static_cast<std::size_t>(lg))) {
          b.add_transition(from, d, intern({r2, g, arc.to}), arc.weight);
        }
      }
    }
  }
  return trim(b.build());
}

}  // namespace mahler
