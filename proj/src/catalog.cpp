#include "mahler/catalog.hpp"

namespace mahler {

WeightedAutomaton thue_morse_automaton(RingSpec ring) {
  const RingValue one = RingValue::one(ring);
  WeightedAutomaton::Builder b(ring, {0, 1});
  auto s0 = b.add_state("0");
  auto s1 = b.add_state("1");
  b.set_initial(s0, one);
  b.set_final(s1, one);
  b.add_transition(s0, 0, s0, one);
  b.add_transition(s0, 1, s0, one);
  b.add_transition(s0, 1, s1, one);
  b.add_transition(s1, 0, s1, one);
  b.add_transition(s1, 1, s1, one);
  return b.build();
}

WeightedAutomaton fibonacci_representation_automaton(RingSpec ring) {
  const RingValue one = RingValue::one(ring);
  WeightedAutomaton::Builder b(ring, {0, 1});
  auto s0 = b.add_state("0");
  auto s1 = b.add_state("1");
  auto s2 = b.add_state("2");
  b.set_initial(s0, one);
  b.set_final(s0, one);
  b.add_transition(s0, 0, s0, one);
  b.add_transition(s0, 1, s0, one);
  b.add_transition(s0, 1, s1, one);
  b.add_transition(s1, 0, s2, one);
  b.add_transition(s2, 0, s1, one);
  b.add_transition(s2, 1, s1, one);
  b.add_transition(s2, 0, s0, one);
  return b.build();
}

WeightedAutomaton all_ones_automaton(const Numeration& kind, RingSpec ring) {
  const RingValue one = RingValue::one(ring);
  WeightedAutomaton::Builder b(ring, kind.digits());
  auto s = b.add_state("1");
  b.set_initial(s, one);
  b.set_final(s, one);
  for (int d : kind.digits()) b.add_transition(s, d, s, one);
  return b.build();
}

WeightedAutomaton zero_automaton(const Numeration& kind, RingSpec ring) {
  WeightedAutomaton::Builder b(ring, kind.digits());
  b.add_state("0");
  return b.build();
}

}  // namespace mahler
