#include "mahler/serialize.hpp"

#include <json.hpp>
#include <sstream>

namespace mahler {

using nlohmann::json;
using nlohmann::ordered_json;

std::string export_json(const WeightedAutomaton& a) {
  ordered_json doc;
  doc["ring"] = a.ring().to_string();
  doc["alphabet"] = a.alphabet();
  doc["states"] = json::array();
  doc["initial"] = ordered_json::object();
  doc["final"] = ordered_json::object();
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    doc["states"].push_back(a.state_name(s));
    if (!a.initial(s).is_zero()) doc["initial"][a.state_name(s)] = a.initial(s).to_string();
    if (!a.final_weight(s).is_zero()) doc["final"][a.state_name(s)] = a.final_weight(s).to_string();
  }
  doc["transitions"] = json::array();
  for (const auto& t : a.transitions()) {
    ordered_json e;
    e["from"] = a.state_name(t.from);
    e["label"] = t.label;
    e["weight"] = t.weight.to_string();
    e["to"] = a.state_name(t.to);
    doc["transitions"].push_back(e);
  }
  return doc.dump(2) + "\n";
}

WeightedAutomaton import_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed automaton json: ") + e.what());
  }
  try {
    RingSpec ring = RingSpec::parse(doc.at("ring").get<std::string>());
    WeightedAutomaton::Builder b(ring, doc.at("alphabet").get<std::vector<int>>());
    std::map<std::string, std::size_t> id;
    for (const auto& name : doc.at("states")) {
      auto n = name.get<std::string>();
      if (id.count(n)) throw FormatError("duplicate state name '" + n + "'");
      id[n] = b.add_state(n);
    }
    auto state = [&](const std::string& n) {
      auto it = id.find(n);
      if (it == id.end()) throw FormatError("unknown state '" + n + "'");
      return it->second;
    };
    auto value = [&](const json& v) {
      return RingValue::parse(ring, v.is_string() ? v.get<std::string>() : v.dump());
    };
    if (doc.contains("initial")) {
      for (const auto& [n, v] : doc["initial"].items()) b.set_initial(state(n), value(v));
    }
    if (doc.contains("final")) {
      for (const auto& [n, v] : doc["final"].items()) b.set_final(state(n), value(v));
    }
    if (doc.contains("transitions")) {
      for (const auto& t : doc["transitions"]) {
        b.add_transition(state(t.at("from").get<std::string>()), t.at("label").get<int>(),
                         state(t.at("to").get<std::string>()), value(t.at("weight")));
      }
    }
    return b.build();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed automaton json: ") + e.what());
  }
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const WeightedAutomaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n";
  os << "  // ring " << a.ring().to_string() << "\n";
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    os << "  s" << s << " [label=" << quote(a.state_name(s)) << "];\n";
  }
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    if (!a.initial(s).is_zero()) os << "  // initial s" << s << " " << a.initial(s) << "\n";
    if (!a.final_weight(s).is_zero()) os << "  // final s" << s << " " << a.final_weight(s) << "\n";
  }
  for (const auto& t : a.transitions()) {
    os << "  s" << t.from << " -> s" << t.to << " [label=\"" << t.label << ":" << t.weight << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

template <class T, class Show>
std::string dfa_dot(const DfaWithOutput<T>& a, Show show) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n";
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    os << "  s" << s << " [label=" << quote(a.state_name(s) + " / " + show(a.output(s))) << "];\n";
  }
  os << "  // start s" << a.start() << "\n";
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    for (int d : a.alphabet()) {
      auto t = a.next(s, d);
      if (t != DfaWithOutput<T>::kNone) os << "  s" << s << " -> s" << t << " [label=\"" << d << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const DfaWithOutput<int>& a) {
  return dfa_dot(a, [](int v) { return std::to_string(v); });
}

std::string export_dot(const DfaWithOutput<RingValue>& a) {
  return dfa_dot(a, [](const RingValue& v) { return v.to_string(); });
}

}  // namespace mahler
