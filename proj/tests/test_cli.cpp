#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mahler/catalog.hpp"
#include "mahler/cli.hpp"
#include "mahler/compile.hpp"
#include "mahler/products.hpp"
#include "mahler/recognizers.hpp"
#include "mahler/relation.hpp"
#include "mahler/serialize.hpp"

using namespace mahler;

namespace {

const std::string corpus = MAHLER_CORPUS_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mahler_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("solve") {
  auto r = run({"solve", "-f", corpus + "/fibonacci.eq", "-N", "8"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  CHECK(rows.back() == "8, 10000, 3");
  auto zero = run({"solve", "-f", corpus + "/fibonacci.eq", "-N", "0"});
  CHECK(lines(zero.out).size() == 2);
  CHECK(lines(zero.out).back() == "0, 0, 1");
  auto tm = run({"solve", "-f", corpus + "/thue_morse_z.eq", "-N", "5"});
  CHECK(tm.code == 2);
  CHECK(tm.err.find("verify") != std::string::npos);
}

TEST_CASE("solve matches the library") {
  for (const char* name : {"fibonacci", "hyperbinary", "dumas", "dumas_fib_x2"}) {
    auto r = run({"solve", "-f", corpus + "/" + name + ".eq", "-N", "40"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(corpus + "/expected/" + name + ".solve.txt"));
    auto p = parse_equation(slurp(corpus + "/" + name + ".eq"));
    auto s = solve_series(p, 40);
    auto rows = lines(r.out);
    for (std::size_t n = 0; n <= 40; ++n) {
      auto expect = std::to_string(n) + ", " + word_to_string(canonical(static_cast<std::int64_t>(n), p.kind)) + ", " +
                    s[n].to_string();
      CHECK(rows[n + 1] == expect);
    }
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto path = temp_path("bad.eq");
  std::ofstream(path) << "ring Z\nnumeration zeckendorf\nd x\n";
  auto r = run({"solve", "-f", path, "-N", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"solve", "-f", corpus + "/missing.eq"}).code == 2);
}

TEST_CASE("verify") {
  auto fib = run({"verify", "-f", corpus + "/fibonacci.eq", "-N", "2000"});
  CHECK(fib.code == 0);
  CHECK(fib.out.rfind("PASS", 0) == 0);
  auto hb = run({"verify", "-f", corpus + "/hyperbinary.eq", "-N", "4096"});
  CHECK(hb.code == 0);

  for (const char* name : {"thue_morse_base2", "thue_morse_z"}) {
    auto eq = corpus + "/" + name + ".eq";
    auto a = corpus + "/" + name + ".json";
    auto r = run({"verify", "-f", eq, "--automaton", a, "-N", std::string(name) == "thue_morse_z" ? "500" : "512"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(corpus + "/expected/" + name + ".verify.txt"));
  }
  CHECK(run({"verify", "-f", corpus + "/thue_morse_z.eq", "-N", "10"}).code == 2);

  auto good = fibonacci_representation_automaton(RingSpec::integers());
  WeightedAutomaton::Builder b(good.ring(), good.alphabet());
  for (std::size_t s = 0; s < good.num_states(); ++s) {
    b.add_state(good.state_name(s));
    b.set_initial(s, good.initial(s));
    b.set_final(s, good.final_weight(s));
  }
  bool corrupted = false;
  for (const auto& t : good.transitions()) {
    auto wgt = t.weight;
    if (!corrupted && t.from == 1) {
      wgt = wgt + wgt;
      corrupted = true;
    }
    b.add_transition(t.from, t.label, t.to, wgt);
  }
  auto path = temp_path("corrupt.json");
  std::ofstream(path) << export_json(b.build());
  auto bad = run({"verify", "-f", corpus + "/fibonacci.eq", "--automaton", path, "-N", "2000"});
  CHECK(bad.code == 1);
  CHECK(bad.out == "FAIL at n=3: automaton 3, oracle 2\n");

  auto ok_path = temp_path("good.json");
  std::ofstream(ok_path) << export_json(good);
  CHECK(run({"verify", "-f", corpus + "/fibonacci.eq", "--automaton", ok_path, "-N", "2000"}).code == 0);
}

TEST_CASE("growth") {
  auto r = run({"growth", "-N", "10000", "--kmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(corpus + "/expected/nonregular.growth.txt"));
  auto rows = lines(r.out);
  CHECK(rows[1] == "prefix: 1 1 2 4 4 8 8 12 20 20");
  CHECK(rows[2] == "recurrence forms agree: yes");
  CHECK(rows[4] == "0, 0, 1");
  long long last = -1;
  for (std::size_t k = 4; k < rows.size(); ++k) {
    auto n = std::stoll(rows[k].substr(rows[k].find(", ") + 2));
    CHECK(n >= last);
    last = n;
  }
}

TEST_CASE("export") {
  auto dot = run({"export", "--builtin", "defect", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out == slurp(corpus + "/expected/defect.dot"));
  CHECK(dot.out == export_dot(defect_automaton()));
  std::size_t nodes = 0;
  for (const auto& line : lines(dot.out))
    if (line.find("->") == std::string::npos && line.find("[label=") != std::string::npos) ++nodes;
  CHECK(nodes == 5);

  auto json = run({"export", "-a", corpus + "/thue_morse_z.json", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out == slurp(corpus + "/thue_morse_z.json"));
  auto round = import_json(json.out);
  auto orig = thue_morse_automaton(RingSpec::integers());
  for (const auto& w : all_words({0, 1}, 8)) CHECK(weight(round, w) == weight(orig, w));

  auto out_path = temp_path("fib.dot");
  CHECK(run({"export", "-f", corpus + "/fibonacci.eq", "--format", "dot", "-o", out_path}).code == 0);
  CHECK(slurp(out_path) == export_dot(compile_equation(parse_equation(slurp(corpus + "/fibonacci.eq"))).automaton));

  CHECK(run({"export", "--builtin", "defect", "--format", "svg"}).code == 2);
  CHECK(run({"export", "--builtin", "nonsense", "--format", "dot"}).code == 2);
  CHECK(run({"export", "--format", "dot"}).code == 2);
}

TEST_CASE("build") {
  auto r = run({"build", "-f", corpus + "/fibonacci.eq", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(corpus + "/expected/fibonacci.automaton.json"));
  CHECK(r.err.find("states 47") != std::string::npos);
}

TEST_CASE("eval") {
  auto r = run({"eval", "-a", corpus + "/thue_morse_base2.json", "--numeration", "base2", "-N", "7"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "7, 111, 1");
  auto word = run({"eval", "-a", corpus + "/thue_morse_z.json", "--numeration", "zeckendorf", "--word", "10101"});
  CHECK(word.out == "3\n");
  CHECK(run({"eval", "-a", corpus + "/thue_morse_z.json", "--numeration", "zeckendorf", "--word", "110"}).code == 2);
  CHECK(run({"eval", "-a", corpus + "/thue_morse_z.json", "--numeration", "base", "-N", "3"}).code == 2);
}

TEST_CASE("relation") {
  auto fib_path = temp_path("fib.json");
  std::ofstream(fib_path) << export_json(fibonacci_representation_automaton(RingSpec::integers()));
  auto r = run({"relation", "-a", fib_path, "--ring", "Q", "--dmax", "1", "--hmax", "1", "-N", "100", "--ncheck", "2000"});
  CHECK(r.code == 0);
  auto found = find_relation(change_ring(fibonacci_representation_automaton(RingSpec::integers()), RingSpec::rationals()),
                             Numeration::zeckendorf(), 1, 1, 100, 2000);
  REQUIRE(found);
  CHECK(r.out == equation_to_text(*found));
  CHECK(run({"relation", "-a", fib_path, "--dmax", "1", "--hmax", "1", "-N", "100"}).code == 2);
  auto none = run({"relation", "-a", fib_path, "--ring", "Q", "--dmax", "0", "--hmax", "0", "-N", "30"});
  CHECK(none.code == 1);
}

TEST_CASE("product") {
  auto path = temp_path("ones.json");
  std::ofstream(path) << export_json(all_ones_automaton(Numeration::zeckendorf(), RingSpec::integers()));
  auto r = run({"product", "-a", path, "-b", path, "--numeration", "zeckendorf"});
  CHECK(r.code == 0);
  auto a = import_json(r.out);
  auto v = sequence_prefix(a, Numeration::zeckendorf(), 100);
  for (std::int64_t n = 0; n <= 100; ++n) CHECK(v[static_cast<std::size_t>(n)] == RingValue::from_int(RingSpec::integers(), n + 1));
  auto ones = all_ones_automaton(Numeration::zeckendorf(), RingSpec::integers());
  CHECK(r.out == export_json(import_json(export_json(cauchy_product(ones, ones, addition_automaton_zeckendorf())))));
}

TEST_CASE("determinize") {
  auto direct = run({"determinize", "-a", corpus + "/thue_morse_base2.json", "--direction", "direct"});
  CHECK(direct.code == 0);
  CHECK(direct.out == export_dot(determinize(thue_morse_automaton(RingSpec::prime_field(2)), Direction::Direct)));
  CHECK(run({"determinize", "-a", corpus + "/thue_morse_base2.json", "--direction", "reverse"}).code == 0);
  CHECK(run({"determinize", "-a", corpus + "/thue_morse_base2.json", "--direction", "sideways"}).code == 2);
  CHECK(run({"determinize", "-a", corpus + "/thue_morse_z.json"}).code == 2);
}

TEST_CASE("defect") {
  CHECK(run({"defect", "--input", "1,-1"}).out == "-1\n");
  CHECK(run({"defect", "--input", "1,0,-1"}).out == "0\n");
  CHECK(run({"defect", "--input", "1,0,-1", "--constructed"}).out == "0\n");
  CHECK(run({"defect", "--input", "-1"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"solve"}).code == 2);
}
