#pragma once

#include <string>

#include "mahler/automaton.hpp"
#include "mahler/dfa.hpp"

namespace mahler {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string export_json(const WeightedAutomaton& a);
WeightedAutomaton import_json(const std::string& text);

std::string export_dot(const WeightedAutomaton& a);
std::string export_dot(const DfaWithOutput<int>& a);
std::string export_dot(const DfaWithOutput<RingValue>& a);

}  // namespace mahler
