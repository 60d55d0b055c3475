#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mahler/automaton.hpp"
#include "mahler/numeration.hpp"

namespace mahler {

class UndefinedTransition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic automaton with an output function on states. Transitions
// may be partial; running into a missing one throws UndefinedTransition.
template <class T>
class DfaWithOutput {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  DfaWithOutput() = default;
  explicit DfaWithOutput(std::vector<int> alphabet) : alphabet_(std::move(alphabet)) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  }

  std::size_t add_state(std::string name, T output) {
    names_.push_back(std::move(name));
    outputs_.push_back(std::move(output));
    delta_.resize(delta_.size() + alphabet_.size(), kNone);
    return names_.size() - 1;
  }
  void set_transition(std::size_t from, int digit, std::size_t to) { delta_.at(slot(from, digit)) = to; }
  void set_start(std::size_t s) { start_ = s; }
  void set_output(std::size_t s, T output) { outputs_.at(s) = std::move(output); }

  const std::vector<int>& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return names_.size(); }
  std::size_t start() const { return start_; }
  const std::string& state_name(std::size_t s) const { return names_[s]; }
  T output(std::size_t s) const { return outputs_[s]; }

  bool has_letter(int digit) const { return std::binary_search(alphabet_.begin(), alphabet_.end(), digit); }

  // kNone if undefined or the digit is foreign.
  std::size_t next(std::size_t s, int digit) const {
    if (!has_letter(digit)) return kNone;
    return delta_[slot(s, digit)];
  }

  std::optional<std::size_t> try_state(const DigitWord& w) const { return try_state_from(start_, w); }

  std::optional<std::size_t> try_state_from(std::size_t s, const DigitWord& w) const {
    for (int d : w) {
      s = next(s, d);
      if (s == kNone) return std::nullopt;
    }
    return s;
  }

  std::size_t state_after(std::size_t s, const DigitWord& w) const {
    for (int d : w) {
      std::size_t t = next(s, d);
      if (t == kNone)
        throw UndefinedTransition("no transition from state " + names_[s] + " on digit " + std::to_string(d));
      s = t;
    }
    return s;
  }

  T run(const DigitWord& w) const { return outputs_[state_after(start_, w)]; }

  std::optional<T> try_run(const DigitWord& w) const {
    auto s = try_state(w);
    if (!s) return std::nullopt;
    return outputs_[*s];
  }

  std::size_t num_transitions() const {
    return static_cast<std::size_t>(std::count_if(delta_.begin(), delta_.end(), [](std::size_t t) { return t != kNone; }));
  }

 private:
  std::size_t slot(std::size_t s, int digit) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), digit);
    if (it == alphabet_.end() || *it != digit) throw std::invalid_argument("digit not in DFA alphabet");
    return s * alphabet_.size() + static_cast<std::size_t>(it - alphabet_.begin());
  }

  std::vector<int> alphabet_;
  std::vector<std::string> names_;
  std::vector<T> outputs_;
  std::vector<std::size_t> delta_;
  std::size_t start_ = 0;
};

using Recognizer = DfaWithOutput<bool>;

// Classical nondeterministic automaton, used for the subset construction.
struct Nfa {
  std::vector<int> alphabet;
  std::size_t num_states = 0;
  std::vector<std::size_t> initial;
  std::vector<bool> accepting;
  // (state, digit) -> successors
  std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> delta;
};

// Subset construction over reachable subsets. The empty subset becomes an
// explicit rejecting sink so the result is total.
Recognizer determinize_nfa(const Nfa& nfa);

enum class Direction { Direct, Reverse };

// For finite rings. Direct: states are row vectors I mu(u), output v F.
// Reverse: column vectors mu(u) F, output I v, so the output on w is the
// weight of the reversal of w.
DfaWithOutput<RingValue> determinize(const WeightedAutomaton& a, Direction direction,
                                     std::size_t max_states = 1'000'000);

}  // namespace mahler
