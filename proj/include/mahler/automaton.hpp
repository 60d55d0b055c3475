#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "mahler/matrix.hpp"
#include "mahler/numeration.hpp"
#include "mahler/ring.hpp"

namespace mahler {

class AutomatonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Transition {
  std::size_t from;
  int label;
  std::size_t to;
  RingValue weight;
};

// Ring-weighted automaton. The weight of a word is the sum over its paths of
// initial * transition weights * final, i.e. I mu(w) F.
class WeightedAutomaton {
 public:
  class Builder;

  WeightedAutomaton() = default;

  RingSpec ring() const { return ring_; }
  const std::vector<int>& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return names_.size(); }
  const std::string& state_name(std::size_t s) const { return names_[s]; }
  const RingValue& initial(std::size_t s) const { return initial_[s]; }
  const RingValue& final_weight(std::size_t s) const { return final_[s]; }

  // -1 when the digit is not in the alphabet.
  int letter_index(int digit) const;

  struct Arc {
    std::size_t to;
    RingValue weight;
  };
  // Outgoing arcs of state s on the letter with the given index.
  const std::vector<Arc>& arcs(std::size_t s, std::size_t letter) const {
    return out_[s * alphabet_.size() + letter];
  }

  // Nonzero transitions sorted by (from, label, to).
  std::vector<Transition> transitions() const;
  std::size_t num_transitions() const;

 private:
  RingSpec ring_;
  std::vector<int> alphabet_;
  std::vector<std::string> names_;
  std::vector<RingValue> initial_;
  std::vector<RingValue> final_;
  std::vector<std::vector<Arc>> out_;
};

class WeightedAutomaton::Builder {
 public:
  Builder(RingSpec ring, std::vector<int> alphabet);

  RingSpec ring() const { return ring_; }
  std::size_t add_state(std::string name);
  std::size_t num_states() const { return names_.size(); }
  // Weights on the same (from, label, to) accumulate.
  void add_transition(std::size_t from, int label, std::size_t to, const RingValue& weight);
  void add_initial(std::size_t s, const RingValue& weight);
  void add_final(std::size_t s, const RingValue& weight);
  void set_initial(std::size_t s, const RingValue& weight);
  void set_final(std::size_t s, const RingValue& weight);

  WeightedAutomaton build() const;

 private:
  void check_state(std::size_t s) const;
  void check_ring(const RingValue& v) const;

  RingSpec ring_;
  std::vector<int> alphabet_;
  std::vector<std::string> names_;
  std::vector<RingValue> initial_;
  std::vector<RingValue> final_;
  std::map<std::tuple<std::size_t, int, std::size_t>, RingValue> edges_;
};

struct MatrixRep {
  RingSpec ring;
  std::vector<int> alphabet;
  Matrix initial;               // 1 x n
  std::map<int, Matrix> mu;     // n x n per digit
  Matrix final;                 // n x 1
};

// Row vector I mu(w); throws AutomatonError on a digit outside the alphabet.
std::vector<RingValue> forward_vector(const WeightedAutomaton& a, const DigitWord& w);
// v mu(b) for a single letter.
std::vector<RingValue> step_forward(const WeightedAutomaton& a, const std::vector<RingValue>& v, int digit);
RingValue apply_final(const WeightedAutomaton& a, const std::vector<RingValue>& v);

RingValue weight(const WeightedAutomaton& a, const DigitWord& w);
// Sum over explicitly enumerated paths; exponential, for cross-checks only.
RingValue weight_by_paths(const WeightedAutomaton& a, const DigitWord& w);
// Number of paths with nonzero initial, transition and final weights.
std::size_t count_accepting_paths(const WeightedAutomaton& a, const DigitWord& w);

RingValue eval_sequence(const WeightedAutomaton& a, const Numeration& kind, std::int64_t n);
// eval_sequence for n = 0..N, sharing prefixes of canonical expansions.
std::vector<RingValue> sequence_prefix(const WeightedAutomaton& a, const Numeration& kind, std::int64_t N);

MatrixRep matrix_rep(const WeightedAutomaton& a);
WeightedAutomaton from_matrix_rep(const MatrixRep& rep);

// Keep states that are both reachable from an initial state and reach a final one.
WeightedAutomaton trim(const WeightedAutomaton& a);
// Equivalent automaton with a single final state t, F(t) = 1, and no arcs out of t.
WeightedAutomaton normalize(const WeightedAutomaton& a);

// The same automaton over another ring, mapping weights through their integer values.
WeightedAutomaton change_ring(const WeightedAutomaton& a, RingSpec ring);

// All words over the alphabet of length <= max_len, shortest first.
std::vector<DigitWord> all_words(const std::vector<int>& alphabet, std::size_t max_len);

}  // namespace mahler
