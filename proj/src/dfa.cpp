#include "mahler/dfa.hpp"

#include <deque>
#include <set>

namespace mahler {

Recognizer determinize_nfa(const Nfa& nfa) {
  Recognizer dfa(nfa.alphabet);
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::deque<std::vector<std::size_t>> queue;

  auto name_of = [](const std::vector<std::size_t>& set) {
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i]);
    return s + "}";
  };
  auto intern = [&](std::vector<std::size_t> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    bool acc = std::any_of(set.begin(), set.end(), [&](std::size_t s) { return nfa.accepting[s]; });
    std::size_t id = dfa.add_state(name_of(set), acc);
    index.emplace(set, id);
    queue.push_back(std::move(set));
    return id;
  };

  dfa.set_start(intern(nfa.initial));
  while (!queue.empty()) {
    auto set = std::move(queue.front());
    queue.pop_front();
    std::size_t from = index.at(set);
    for (int d : dfa.alphabet()) {
      std::vector<std::size_t> next;
      for (auto s : set) {
        auto it = nfa.delta.find({s, d});
        if (it != nfa.delta.end()) next.insert(next.end(), it->second.begin(), it->second.end());
      }
      dfa.set_transition(from, d, intern(std::move(next)));
    }
  }
  return dfa;
}

DfaWithOutput<RingValue> determinize(const WeightedAutomaton& a, Direction direction, std::size_t max_states) {
  if (!a.ring().is_finite())
    throw RingError("determinize needs a finite ring, got " + a.ring().to_string());
  const std::size_t n = a.num_states();
  const auto rep = matrix_rep(a);
  DfaWithOutput<RingValue> dfa(a.alphabet());

  std::map<std::vector<RingValue>, std::size_t, bool (*)(const std::vector<RingValue>&, const std::vector<RingValue>&)>
      index([](const std::vector<RingValue>& x, const std::vector<RingValue>& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          auto xi = x[i].to_integer();
          auto yi = y[i].to_integer();
          if (xi != yi) return xi < yi;
        }
        return false;
      });
  std::deque<std::vector<RingValue>> queue;

  auto output_of = [&](const std::vector<RingValue>& v) {
    RingValue out = RingValue::zero(a.ring());
    for (std::size_t s = 0; s < n; ++s) {
      out.add_product(v[s], direction == Direction::Direct ? a.final_weight(s) : a.initial(s));
    }
    return out;
  };
  auto intern = [&](std::vector<RingValue> v) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    if (dfa.num_states() >= max_states) throw std::runtime_error("determinize: state limit exceeded");
    std::string name = "(";
    for (std::size_t s = 0; s < n; ++s) name += (s ? "," : "") + v[s].to_string();
    name += ")";
    std::size_t id = dfa.add_state(name, output_of(v));
    index.emplace(v, id);
    queue.push_back(std::move(v));
    return id;
  };

  std::vector<RingValue> start(n, RingValue::zero(a.ring()));
  for (std::size_t s = 0; s < n; ++s) start[s] = direction == Direction::Direct ? a.initial(s) : a.final_weight(s);
  dfa.set_start(intern(start));

  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    std::size_t from = index.at(v);
    for (int d : a.alphabet()) {
      const Matrix& m = rep.mu.at(d);
      std::vector<RingValue> w(n, RingValue::zero(a.ring()));
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          if (direction == Direction::Direct) {
            if (!v[p].is_zero() && !m(p, q).is_zero()) w[q].add_product(v[p], m(p, q));
          } else {
            if (!m(p, q).is_zero() && !v[q].is_zero()) w[p].add_product(m(p, q), v[q]);
          }
        }
      }
      dfa.set_transition(from, d, intern(std::move(w)));
    }
  }
  return dfa;
}

}  // namespace mahler
