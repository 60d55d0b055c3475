#include "mahler/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "mahler/catalog.hpp"
#include "mahler/compile.hpp"
#include "mahler/dfa.hpp"
#include "mahler/growth.hpp"
#include "mahler/products.hpp"
#include "mahler/recognizers.hpp"
#include "mahler/relation.hpp"
#include "mahler/serialize.hpp"

namespace mahler {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

Numeration parse_numeration(const std::string& s) {
  if (s == "zeckendorf" || s == "z" || s == "Z") return Numeration::zeckendorf();
  std::string digits = s;
  if (digits.starts_with("base:")) digits = digits.substr(5);
  else if (digits.starts_with("base")) digits = digits.substr(4);
  try {
    std::size_t used = 0;
    int q = std::stoi(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(s);
    return Numeration::base(q);
  } catch (const std::exception&) {
    throw UsageError("bad numeration '" + s + "' (expected zeckendorf or base<q>)");
  }
}

MahlerEquation load_equation(const std::string& path) {
  try {
    return parse_equation(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

WeightedAutomaton load_automaton(const std::string& path) {
  try {
    return import_json(read_file(path));
  } catch (const FormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

WeightedAutomaton builtin_automaton(const std::string& name) {
  if (name == "thue-morse") return thue_morse_automaton(RingSpec::prime_field(2));
  if (name == "thue-morse-z") return thue_morse_automaton(RingSpec::integers());
  if (name == "fibonacci") return fibonacci_representation_automaton(RingSpec::integers());
  if (name == "addition-base2") return addition_automaton_base2();
  if (name == "addition-zeckendorf") return addition_automaton_zeckendorf();
  throw UsageError("unknown builtin '" + name + "'");
}

const std::vector<std::string> kBuiltins = {"thue-morse", "thue-morse-z", "fibonacci", "addition-base2",
                                            "addition-zeckendorf", "defect"};

int cmd_solve(const std::string& file, std::int64_t N, std::ostream& out) {
  auto p = load_equation(file);
  if (!is_isolating(p))
    throw EquationError("equation is not isolating (A_0 != 1): it cannot be solved by recurrence; use "
                        "'mahler verify -f " + file + " --automaton A.json' to check a candidate solution");
  auto s = solve_series(p, N);
  out << "# n, word, f_n\n";
  for (std::int64_t n = 0; n <= N; ++n) {
    out << n << ", " << word_to_string(canonical(n, p.kind)) << ", " << s[static_cast<std::size_t>(n)] << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& file, const std::string& automaton_path, std::int64_t N, std::ostream& out) {
  auto p = load_equation(file);
  std::optional<WeightedAutomaton> a;
  if (!automaton_path.empty()) a = load_automaton(automaton_path);
  if (!is_isolating(p)) {
    if (!a) throw UsageError("non-isolating equation: pass --automaton with a candidate solution");
    if (!(a->ring() == p.ring)) throw UsageError("automaton ring " + a->ring().to_string() + " differs from equation ring");
    SeriesPrefix s{p.ring, sequence_prefix(*a, p.kind, N)};
    auto r = residual(p, s);
    for (std::int64_t n = 0; n <= N; ++n) {
      if (!r[static_cast<std::size_t>(n)].is_zero()) {
        out << "FAIL at n=" << n << ": residual " << r[static_cast<std::size_t>(n)] << "\n";
        return 1;
      }
    }
    out << "PASS: residual vanishes for n <= " << N << "\n";
    return 0;
  }
  if (!a) a = compile_equation(p).automaton;
  if (!(a->ring() == p.ring)) throw UsageError("automaton ring " + a->ring().to_string() + " differs from equation ring");
  auto oracle = solve_series(p, N);
  auto values = sequence_prefix(*a, p.kind, N);
  for (std::int64_t n = 0; n <= N; ++n) {
    const auto& x = values[static_cast<std::size_t>(n)];
    const auto& y = oracle[static_cast<std::size_t>(n)];
    if (!(x == y)) {
      out << "FAIL at n=" << n << ": automaton " << x << ", oracle " << y << "\n";
      return 1;
    }
  }
  out << "PASS: automaton equals oracle for n <= " << N << "\n";
  return 0;
}

int cmd_growth(std::int64_t N, int k_max, std::ostream& out) {
  auto r = growth_analysis(N, k_max);
  out << "# (1 - x) f = Phi(f), f_0 = 1, N = " << N << "\n";
  out << "prefix:";
  for (std::size_t n = 0; n < std::min<std::size_t>(r.f.size(), 10); ++n) out << " " << r.f[n];
  out << "\n";
  out << "recurrence forms agree: " << (r.forms_agree ? "yes" : "no") << "\n";
  out << "# k, least n with f_n > n^k (k = 0: f_n >= 1), f_n\n";
  for (int k = 0; k <= k_max; ++k) {
    const auto& t = r.thresholds[static_cast<std::size_t>(k)];
    if (t) {
      out << k << ", " << *t << ", " << r.f[static_cast<std::size_t>(*t)] << "\n";
    } else {
      out << k << ", none <= " << N << ", -\n";
    }
  }
  return r.forms_agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mahler equations solved by weighted automata"};
  app.name("mahler");
  app.require_subcommand(1, 1);

  std::string eq_file, a_file, b_file, out_file, numeration = "zeckendorf", direction = "direct", format = "dot";
  std::string input, builtin, word, ring_text;
  std::int64_t N = 100, n_check = 0;
  int d_max = 1, h_max = 1, k_max = 3;
  bool constructed = false;

  auto* solve = app.add_subcommand("solve", "coefficient table of an isolating equation");
  solve->add_option("-f,--file", eq_file, "equation file")->required();
  solve->add_option("-N", N, "last index")->check(CLI::NonNegativeNumber);

  auto* build = app.add_subcommand("build", "compile an equation to a weighted automaton");
  build->add_option("-f,--file", eq_file, "equation file")->required();
  build->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  build->add_option("-o", out_file, "output file (default stdout)");

  auto* eval = app.add_subcommand("eval", "evaluate an automaton");
  eval->add_option("-a", a_file, "automaton json")->required();
  eval->add_option("--numeration", numeration, "zeckendorf or base<q>");
  eval->add_option("-N", N, "evaluate on (n) for n = 0..N")->check(CLI::NonNegativeNumber);
  eval->add_option("--word", word, "evaluate a single word, e.g. 1,0,-1 or 101");

  auto* verify = app.add_subcommand("verify", "compare an automaton with the series oracle");
  verify->add_option("-f,--file", eq_file, "equation file")->required();
  verify->add_option("-N", N, "last index")->check(CLI::NonNegativeNumber);
  verify->add_option("--automaton", a_file, "automaton json (default: compile the equation)");

  auto* relation = app.add_subcommand("relation", "search a Mahler relation for an automaton");
  relation->add_option("-a", a_file, "automaton json over a field")->required();
  relation->add_option("--numeration", numeration, "zeckendorf or base<q>");
  relation->add_option("--dmax", d_max, "largest exponent")->check(CLI::NonNegativeNumber);
  relation->add_option("--hmax", h_max, "largest degree")->check(CLI::NonNegativeNumber);
  relation->add_option("-N", N, "equations imposed")->check(CLI::NonNegativeNumber);
  relation->add_option("--ncheck", n_check, "re-verification order (default 4N)");
  relation->add_option("--ring", ring_text, "convert the automaton to this field first, e.g. Q");

  auto* product = app.add_subcommand("product", "Cauchy product of two automata");
  product->add_option("-a", a_file, "first automaton json")->required();
  product->add_option("-b", b_file, "second automaton json")->required();
  product->add_option("--numeration", numeration, "zeckendorf or base<q>");
  product->add_option("-o", out_file, "output file (default stdout)");

  auto* determinize_cmd = app.add_subcommand("determinize", "DFA with output for a finite-ring automaton");
  determinize_cmd->add_option("-a", a_file, "automaton json")->required();
  determinize_cmd->add_option("--direction", direction, "direct or reverse")->check(CLI::IsMember({"direct", "reverse"}));
  determinize_cmd->add_option("-o", out_file, "output file (default stdout)");

  auto* defect = app.add_subcommand("defect", "run the defect automaton on (m)_Z - (n)_Z");
  defect->add_option("--input", input, "digit word, e.g. 1,0,-1")->required();
  defect->add_flag("--constructed", constructed, "use the machine built from zero recognizers");

  auto* growth = app.add_subcommand("growth", "growth of the solution of (1 - x) f = Phi(f)");
  growth->add_option("-N", N, "last index")->check(CLI::PositiveNumber);
  growth->add_option("--kmax", k_max, "largest exponent k")->check(CLI::NonNegativeNumber);

  auto* export_cmd = app.add_subcommand("export", "export an automaton as dot or json");
  auto* src_a = export_cmd->add_option("-a", a_file, "automaton json");
  auto* src_f = export_cmd->add_option("-f,--file", eq_file, "equation file to compile");
  auto* src_b = export_cmd->add_option("--builtin", builtin, "builtin automaton")->check(CLI::IsMember(kBuiltins));
  src_a->excludes(src_f)->excludes(src_b);
  src_f->excludes(src_b);
  export_cmd->add_option("--format", format, "dot or json")->required()->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("-o", out_file, "output file (default stdout)");
  export_cmd->add_option("--ring", ring_text, "convert the weights to this ring");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(eq_file, N, out);
    if (verify->parsed()) return cmd_verify(eq_file, a_file, N, out);
    if (growth->parsed()) return cmd_growth(N, k_max, out);
    if (build->parsed()) {
      auto p = load_equation(eq_file);
      auto c = compile_equation(p);
      err << "states " << c.automaton.num_states() << ", grid " << c.grid_size << ", transitions "
          << c.automaton.num_transitions() << "\n";
      write_output(out_file, format == "json" ? export_json(c.automaton) : export_dot(c.automaton), out);
      return 0;
    }
    if (eval->parsed()) {
      auto a = load_automaton(a_file);
      auto kind = parse_numeration(numeration);
      if (!word.empty()) {
        auto w = word_from_string(word);
        out << (kind.is_zeckendorf() ? evaluate_z(a, w) : weight(a, w)) << "\n";
        return 0;
      }
      auto values = sequence_prefix(a, kind, N);
      out << "# n, word, value\n";
      for (std::int64_t n = 0; n <= N; ++n) {
        out << n << ", " << word_to_string(canonical(n, kind)) << ", " << values[static_cast<std::size_t>(n)] << "\n";
      }
      return 0;
    }
    if (relation->parsed()) {
      auto a = load_automaton(a_file);
      if (!ring_text.empty()) a = change_ring(a, RingSpec::parse(ring_text));
      auto kind = parse_numeration(numeration);
      auto found = find_relation(a, kind, d_max, h_max, N, n_check > 0 ? n_check : 4 * N);
      if (!found) {
        out << "no relation with d <= " << d_max << ", h <= " << h_max << "\n";
        return 1;
      }
      out << equation_to_text(*found);
      return 0;
    }
    if (product->parsed()) {
      auto a = load_automaton(a_file);
      auto b = load_automaton(b_file);
      auto kind = parse_numeration(numeration);
      write_output(out_file, export_json(cauchy_product(a, b, addition_automaton(kind))), out);
      return 0;
    }
    if (determinize_cmd->parsed()) {
      auto a = load_automaton(a_file);
      auto dfa = determinize(a, direction == "direct" ? Direction::Direct : Direction::Reverse);
      write_output(out_file, export_dot(dfa), out);
      return 0;
    }
    if (defect->parsed()) {
      auto w = word_from_string(input);
      auto dfa = constructed ? defect_automaton_constructed() : defect_automaton();
      out << dfa.run(w) << "\n";
      return 0;
    }
    if (export_cmd->parsed()) {
      if (builtin == "defect") {
        if (format != "dot") throw UsageError("the defect automaton exports as dot only");
        write_output(out_file, export_dot(defect_automaton()), out);
        return 0;
      }
      WeightedAutomaton a;
      if (!a_file.empty()) a = load_automaton(a_file);
      else if (!eq_file.empty()) a = compile_equation(load_equation(eq_file)).automaton;
      else if (!builtin.empty()) a = builtin_automaton(builtin);
      else throw UsageError("export needs one of -a, -f, --builtin");
      if (!ring_text.empty()) a = change_ring(a, RingSpec::parse(ring_text));
      write_output(out_file, format == "json" ? export_json(a) : export_dot(a), out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mahler
