#include "mahler/recognizers.hpp"

#include <cstdlib>
#include <deque>
#include <set>
#include <tuple>

namespace mahler {

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

struct BoxGraph {
  std::vector<Pair> states;  // kept states, BFS order from (0,0)
  std::set<std::tuple<Pair, int, Pair>> edges;
};

// States (p, q) = (sum u_i F_i, sum u_i F_{i-1}) of the prefix read so far,
// explored inside |p|, |q| <= bound and trimmed to those that can reach p = c.
BoxGraph explore(const std::vector<int>& digits, std::int64_t c, std::int64_t bound) {
  auto inside = [bound](const Pair& s) { return std::llabs(s.first) <= bound && std::llabs(s.second) <= bound; };
  std::map<Pair, std::size_t> seen;
  std::vector<Pair> order;
  std::vector<std::tuple<Pair, int, Pair>> edges;
  std::deque<Pair> queue{{0, 0}};
  seen[{0, 0}] = 0;
  order.push_back({0, 0});
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    for (int d : digits) {
      Pair next{p + q + d, p + d};
      if (!inside(next)) continue;
      edges.emplace_back(Pair{p, q}, d, next);
      if (seen.emplace(next, order.size()).second) {
        order.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::map<Pair, std::vector<Pair>> pred;
  for (const auto& [from, d, to] : edges) pred[to].push_back(from);
  std::set<Pair> live;
  std::deque<Pair> back;
  for (const auto& s : order) {
    if (s.first == c) {
      live.insert(s);
      back.push_back(s);
    }
  }
  while (!back.empty()) {
    auto s = back.front();
    back.pop_front();
    for (const auto& p : pred[s]) {
      if (live.insert(p).second) back.push_back(p);
    }
  }
  BoxGraph g;
  for (const auto& s : order) {
    if (live.count(s)) g.states.push_back(s);
  }
  for (const auto& e : edges) {
    if (live.count(std::get<0>(e)) && live.count(std::get<2>(e))) g.edges.insert(e);
  }
  return g;
}

}  // namespace

Recognizer constant_recognizer(const std::vector<int>& digits, std::int64_t c) {
  std::int64_t max_digit = 0;
  for (int d : digits) max_digit = std::max<std::int64_t>(max_digit, std::llabs(d));
  const std::int64_t k0 = 8 * (max_digit + std::llabs(c) + 1);
  BoxGraph g = explore(digits, c, k0);
  BoxGraph wide = explore(digits, c, 4 * k0);
  if (std::set<Pair>(g.states.begin(), g.states.end()) != std::set<Pair>(wide.states.begin(), wide.states.end()) ||
      g.edges != wide.edges) {
    throw std::logic_error("constant_recognizer: state box too small");
  }

  Recognizer dfa(digits);
  std::map<Pair, std::size_t> id;
  for (const auto& s : g.states) {
    id[s] = dfa.add_state("(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")", s.first == c);
  }
  const std::size_t dead = dfa.add_state("dead", false);
  for (int d : dfa.alphabet()) dfa.set_transition(dead, d, dead);
  for (const auto& s : g.states) {
    for (int d : dfa.alphabet()) dfa.set_transition(id[s], d, dead);
  }
  for (const auto& [from, d, to] : g.edges) dfa.set_transition(id[from], d, id[to]);
  dfa.set_start(id.count({0, 0}) ? id[{0, 0}] : dead);
  return dfa;
}

Recognizer zero_recognizer(const std::vector<int>& digits) { return constant_recognizer(digits, 0); }

DfaWithOutput<int> defect_automaton() {
  DfaWithOutput<int> a({-1, 0, 1});
  const int outputs[5] = {0, 0, 0, -1, 1};
  for (int i = 0; i < 5; ++i) a.add_state("q" + std::to_string(i), outputs[i]);
  a.set_start(0);
  a.set_transition(0, 0, 0);
  a.set_transition(0, 1, 1);
  a.set_transition(1, -1, 3);
  a.set_transition(1, 0, 2);
  a.set_transition(1, 1, 1);
  a.set_transition(2, -1, 2);
  a.set_transition(2, 0, 1);
  a.set_transition(2, 1, 1);
  a.set_transition(3, -1, 2);
  a.set_transition(3, 0, 1);
  a.set_transition(3, 1, 4);
  a.set_transition(4, -1, 3);
  a.set_transition(4, 0, 3);
  a.set_transition(4, 1, 2);
  return a;
}

namespace {

// X_b: words x = (m)_Z - (n)_Z such that some 11-free w of the same length has
// [w - x]_Z = 0 and [(w - x) b]_Z = 0, i.e. delta(m - n, n) = b.
Recognizer defect_recognizer(const Recognizer& zero, int b) {
  Nfa nfa;
  nfa.alphabet = {-1, 0, 1};
  std::map<std::pair<std::size_t, int>, std::size_t> id;
  std::vector<std::pair<std::size_t, int>> states;
  auto intern = [&](std::size_t r, int e) {
    auto [it, inserted] = id.try_emplace({r, e}, states.size());
    if (inserted) states.push_back({r, e});
    return it->second;
  };
  nfa.initial.push_back(intern(zero.start(), 0));
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [r, e] = states[i];
    for (int x : nfa.alphabet) {
      for (int guess = 0; guess <= 1; ++guess) {
        if (guess == 1 && e == 1) continue;
        std::size_t r2 = zero.next(r, guess - x);
        if (r2 == Recognizer::kNone || zero.state_name(r2) == "dead") continue;
        nfa.delta[{i, x}].push_back(intern(r2, guess));
      }
    }
  }
  nfa.num_states = states.size();
  nfa.accepting.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::size_t r = states[i].first;
    nfa.accepting[i] = zero.output(r) && zero.output(zero.next(r, b));
  }
  return determinize_nfa(nfa);
}

}  // namespace

DfaWithOutput<int> defect_automaton_constructed() {
  const Recognizer zero = zero_recognizer({-1, 0, 1, 2});
  const Recognizer x[3] = {defect_recognizer(zero, -1), defect_recognizer(zero, 0), defect_recognizer(zero, 1)};

  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  DfaWithOutput<int> out({-1, 0, 1});
  std::map<Triple, std::size_t> id;
  std::deque<Triple> queue;
  auto intern = [&](const Triple& t) {
    auto it = id.find(t);
    if (it != id.end()) return it->second;
    auto [a, b, c] = t;
    int output = 0;
    if (x[0].output(a)) output = -1;
    if (x[2].output(c)) output = 1;
    std::size_t s = out.add_state("(" + x[0].state_name(a) + "|" + x[1].state_name(b) + "|" + x[2].state_name(c) + ")",
                                  output);
    id.emplace(t, s);
    queue.push_back(t);
    return s;
  };
  out.set_start(intern({x[0].start(), x[1].start(), x[2].start()}));
  while (!queue.empty()) {
    Triple t = queue.front();
    queue.pop_front();
    std::size_t from = id.at(t);
    for (int d : out.alphabet()) {
      Triple next{x[0].next(std::get<0>(t), d), x[1].next(std::get<1>(t), d), x[2].next(std::get<2>(t), d)};
      bool all_empty = x[0].state_name(std::get<0>(next)) == "{}" && x[1].state_name(std::get<1>(next)) == "{}" &&
                       x[2].state_name(std::get<2>(next)) == "{}";
      if (all_empty) continue;
      out.set_transition(from, d, intern(next));
    }
  }
  return out;
}

}  // namespace mahler
