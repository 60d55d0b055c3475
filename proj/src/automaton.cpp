#include "mahler/automaton.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace mahler {

int WeightedAutomaton::letter_index(int digit) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), digit);
  if (it == alphabet_.end() || *it != digit) return -1;
  return static_cast<int>(it - alphabet_.begin());
}

std::vector<Transition> WeightedAutomaton::transitions() const {
  std::vector<Transition> out;
  for (std::size_t s = 0; s < num_states(); ++s) {
    for (std::size_t l = 0; l < alphabet_.size(); ++l) {
      for (const auto& arc : arcs(s, l)) out.push_back({s, alphabet_[l], arc.to, arc.weight});
    }
  }
  return out;
}

std::size_t WeightedAutomaton::num_transitions() const {
  std::size_t total = 0;
  for (const auto& v : out_) total += v.size();
  return total;
}

WeightedAutomaton::Builder::Builder(RingSpec ring, std::vector<int> alphabet)
    : ring_(ring), alphabet_(std::move(alphabet)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
}

std::size_t WeightedAutomaton::Builder::add_state(std::string name) {
  names_.push_back(std::move(name));
  initial_.push_back(RingValue::zero(ring_));
  final_.push_back(RingValue::zero(ring_));
  return names_.size() - 1;
}

void WeightedAutomaton::Builder::check_state(std::size_t s) const {
  if (s >= names_.size()) throw AutomatonError("state index " + std::to_string(s) + " out of range");
}

void WeightedAutomaton::Builder::check_ring(const RingValue& v) const {
  if (!(v.spec() == ring_))
    throw RingError("weight in " + v.spec().to_string() + " added to automaton over " + ring_.to_string());
}

void WeightedAutomaton::Builder::add_transition(std::size_t from, int label, std::size_t to,
                                                const RingValue& weight) {
  check_state(from);
  check_state(to);
  check_ring(weight);
  if (!std::binary_search(alphabet_.begin(), alphabet_.end(), label))
    throw AutomatonError("label " + std::to_string(label) + " not in alphabet");
  if (weight.is_zero()) return;
  auto [it, inserted] = edges_.try_emplace({from, label, to}, weight);
  if (!inserted) it->second += weight;
}

void WeightedAutomaton::Builder::add_initial(std::size_t s, const RingValue& weight) {
  check_state(s);
  check_ring(weight);
  initial_[s] += weight;
}

void WeightedAutomaton::Builder::add_final(std::size_t s, const RingValue& weight) {
  check_state(s);
  check_ring(weight);
  final_[s] += weight;
}

void WeightedAutomaton::Builder::set_initial(std::size_t s, const RingValue& weight) {
  check_state(s);
  check_ring(weight);
  initial_[s] = weight;
}

void WeightedAutomaton::Builder::set_final(std::size_t s, const RingValue& weight) {
  check_state(s);
  check_ring(weight);
  final_[s] = weight;
}

WeightedAutomaton WeightedAutomaton::Builder::build() const {
  WeightedAutomaton a;
  a.ring_ = ring_;
  a.alphabet_ = alphabet_;
  a.names_ = names_;
  a.initial_ = initial_;
  a.final_ = final_;
  a.out_.assign(names_.size() * alphabet_.size(), {});
  for (const auto& [key, w] : edges_) {
    if (w.is_zero()) continue;
    auto [from, label, to] = key;
    auto l = static_cast<std::size_t>(a.letter_index(label));
    a.out_[from * alphabet_.size() + l].push_back({to, w});
  }
  return a;
}

std::vector<RingValue> step_forward(const WeightedAutomaton& a, const std::vector<RingValue>& v, int digit) {
  int l = a.letter_index(digit);
  if (l < 0) throw AutomatonError("digit " + std::to_string(digit) + " not in automaton alphabet");
  std::vector<RingValue> next(a.num_states(), RingValue::zero(a.ring()));
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s].is_zero()) continue;
    for (const auto& arc : a.arcs(s, static_cast<std::size_t>(l))) next[arc.to].add_product(v[s], arc.weight);
  }
  return next;
}

std::vector<RingValue> forward_vector(const WeightedAutomaton& a, const DigitWord& w) {
  std::vector<RingValue> v(a.num_states(), RingValue::zero(a.ring()));
  for (std::size_t s = 0; s < a.num_states(); ++s) v[s] = a.initial(s);
  for (int d : w) v = step_forward(a, v, d);
  return v;
}

RingValue apply_final(const WeightedAutomaton& a, const std::vector<RingValue>& v) {
  RingValue total = RingValue::zero(a.ring());
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (!v[s].is_zero()) total.add_product(v[s], a.final_weight(s));
  }
  return total;
}

RingValue weight(const WeightedAutomaton& a, const DigitWord& w) { return apply_final(a, forward_vector(a, w)); }

namespace {

template <class Visit>
void enumerate_paths(const WeightedAutomaton& a, const DigitWord& w, Visit visit) {
  std::vector<int> letters;
  for (int d : w) {
    int l = a.letter_index(d);
    if (l < 0) throw AutomatonError("digit " + std::to_string(d) + " not in automaton alphabet");
    letters.push_back(l);
  }
  std::function<void(std::size_t, std::size_t, std::vector<const RingValue*>&)> go =
      [&](std::size_t pos, std::size_t state, std::vector<const RingValue*>& factors) {
        if (pos == letters.size()) {
          factors.push_back(&a.final_weight(state));
          visit(factors);
          factors.pop_back();
          return;
        }
        for (const auto& arc : a.arcs(state, static_cast<std::size_t>(letters[pos]))) {
          factors.push_back(&arc.weight);
          go(pos + 1, arc.to, factors);
          factors.pop_back();
        }
      };
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    if (a.initial(s).is_zero()) continue;
    std::vector<const RingValue*> factors{&a.initial(s)};
    go(0, s, factors);
  }
}

}  // namespace

RingValue weight_by_paths(const WeightedAutomaton& a, const DigitWord& w) {
  RingValue total = RingValue::zero(a.ring());
  enumerate_paths(a, w, [&](const std::vector<const RingValue*>& factors) {
    RingValue p = RingValue::one(a.ring());
    for (const auto* f : factors) p *= *f;
    total += p;
  });
  return total;
}

std::size_t count_accepting_paths(const WeightedAutomaton& a, const DigitWord& w) {
  std::size_t count = 0;
  enumerate_paths(a, w, [&](const std::vector<const RingValue*>& factors) {
    if (std::none_of(factors.begin(), factors.end(), [](const RingValue* f) { return f->is_zero(); })) ++count;
  });
  return count;
}

RingValue eval_sequence(const WeightedAutomaton& a, const Numeration& kind, std::int64_t n) {
  return weight(a, canonical(n, kind));
}

std::vector<RingValue> sequence_prefix(const WeightedAutomaton& a, const Numeration& kind, std::int64_t N) {
  if (N < 0) return {};
  std::vector<RingValue> out(static_cast<std::size_t>(N + 1), RingValue::zero(a.ring()));
  std::vector<RingValue> start(a.num_states(), RingValue::zero(a.ring()));
  for (std::size_t s = 0; s < a.num_states(); ++s) start[s] = a.initial(s);

  struct Node {
    std::int64_t n;
    int last;
    std::vector<RingValue> v;
  };
  std::vector<Node> stack;
  out[0] = apply_final(a, step_forward(a, start, 0));
  const int top = kind.is_zeckendorf() ? 2 : kind.q();
  for (int d = 1; d < top && d <= N; ++d) stack.push_back({d, d, step_forward(a, start, d)});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    out[static_cast<std::size_t>(node.n)] = apply_final(a, node.v);
    for (int b = top - 1; b >= 0; --b) {
      if (kind.is_zeckendorf() && b == 1 && node.last == 1) continue;
      std::int64_t child = kind.is_zeckendorf() ? phi(node.n) + b : node.n * kind.q() + b;
      if (child > N) continue;
      stack.push_back({child, b, step_forward(a, node.v, b)});
    }
  }
  return out;
}

MatrixRep matrix_rep(const WeightedAutomaton& a) {
  const std::size_t n = a.num_states();
  MatrixRep rep{a.ring(), a.alphabet(), Matrix(a.ring(), 1, n), {}, Matrix(a.ring(), n, 1)};
  for (std::size_t s = 0; s < n; ++s) {
    rep.initial(0, s) = a.initial(s);
    rep.final(s, 0) = a.final_weight(s);
  }
  for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
    Matrix m(a.ring(), n, n);
    for (std::size_t s = 0; s < n; ++s) {
      for (const auto& arc : a.arcs(s, l)) m(s, arc.to) += arc.weight;
    }
    rep.mu.emplace(a.alphabet()[l], std::move(m));
  }
  return rep;
}

WeightedAutomaton from_matrix_rep(const MatrixRep& rep) {
  const std::size_t n = rep.initial.cols();
  WeightedAutomaton::Builder b(rep.ring, rep.alphabet);
  for (std::size_t s = 0; s < n; ++s) {
    b.add_state(std::to_string(s));
    b.set_initial(s, rep.initial(0, s));
    b.set_final(s, rep.final(s, 0));
  }
  for (const auto& [digit, m] : rep.mu) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (!m(p, q).is_zero()) b.add_transition(p, digit, q, m(p, q));
      }
    }
  }
  return b.build();
}

WeightedAutomaton trim(const WeightedAutomaton& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<std::size_t>> succ(n), pred(n);
  for (const auto& t : a.transitions()) {
    succ[t.from].push_back(t.to);
    pred[t.to].push_back(t.from);
  }
  auto closure = [n](std::vector<bool> seen, const std::vector<std::vector<std::size_t>>& adj) {
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) queue.push_back(s);
    }
    while (!queue.empty()) {
      auto s = queue.front();
      queue.pop_front();
      for (auto t : adj[s]) {
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
    return seen;
  };
  std::vector<bool> init(n), fin(n);
  for (std::size_t s = 0; s < n; ++s) {
    init[s] = !a.initial(s).is_zero();
    fin[s] = !a.final_weight(s).is_zero();
  }
  auto acc = closure(init, succ);
  auto coacc = closure(fin, pred);
  std::vector<std::size_t> remap(n, SIZE_MAX);
  WeightedAutomaton::Builder b(a.ring(), a.alphabet());
  for (std::size_t s = 0; s < n; ++s) {
    if (acc[s] && coacc[s]) {
      remap[s] = b.add_state(a.state_name(s));
      b.set_initial(remap[s], a.initial(s));
      b.set_final(remap[s], a.final_weight(s));
    }
  }
  for (const auto& t : a.transitions()) {
    if (remap[t.from] != SIZE_MAX && remap[t.to] != SIZE_MAX) b.add_transition(remap[t.from], t.label, remap[t.to], t.weight);
  }
  return b.build();
}

WeightedAutomaton normalize(const WeightedAutomaton& a) {
  WeightedAutomaton::Builder b(a.ring(), a.alphabet());
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    b.add_state(a.state_name(s));
    b.set_initial(s, a.initial(s));
  }
  const std::size_t t = b.add_state("final");
  b.set_final(t, RingValue::one(a.ring()));
  RingValue empty = RingValue::zero(a.ring());
  for (std::size_t s = 0; s < a.num_states(); ++s) empty.add_product(a.initial(s), a.final_weight(s));
  b.set_initial(t, empty);
  for (const auto& tr : a.transitions()) {
    b.add_transition(tr.from, tr.label, tr.to, tr.weight);
    if (!a.final_weight(tr.to).is_zero()) b.add_transition(tr.from, tr.label, t, tr.weight * a.final_weight(tr.to));
  }
  return b.build();
}

WeightedAutomaton change_ring(const WeightedAutomaton& a, RingSpec ring) {
  auto conv = [&](const RingValue& v) {
    if (v.spec().kind() == RingKind::Rationals && ring.kind() == RingKind::Rationals) return v;
    return RingValue::from_int(ring, v.to_integer());
  };
  WeightedAutomaton::Builder b(ring, a.alphabet());
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    b.add_state(a.state_name(s));
    b.set_initial(s, conv(a.initial(s)));
    b.set_final(s, conv(a.final_weight(s)));
  }
  for (const auto& t : a.transitions()) b.add_transition(t.from, t.label, t.to, conv(t.weight));
  return b.build();
}

std::vector<DigitWord> all_words(const std::vector<int>& alphabet, std::size_t max_len) {
  std::vector<DigitWord> out{DigitWord{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int d : alphabet) {
        DigitWord w = out[i];
        w.push_back(d);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace mahler
