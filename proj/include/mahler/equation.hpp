#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mahler/numeration.hpp"
#include "mahler/ring.hpp"

namespace mahler {

class EquationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public EquationError {
 public:
  ParseError(int line, const std::string& what)
      : EquationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A_0(x) y = sum_{i=1}^d A_i(x) Phi^i(y) + g(x), with A_i(x) = sum_j alpha(i,j) x^j.
// Phi is x -> x^q in base q and x^n -> x^{phi(n)} in Zeckendorf numeration.
// Isolating means A_0 = 1. g is an optional polynomial, empty when absent.
struct MahlerEquation {
  Numeration kind = Numeration::zeckendorf();
  RingSpec ring;
  int d = 1;
  int h = 0;
  std::vector<std::vector<RingValue>> alpha;  // (d+1) x (h+1)
  RingValue f0;
  std::vector<RingValue> g;

  // Zero coefficients of the given shape.
  static MahlerEquation zero(const Numeration& kind, RingSpec ring, int d, int h);

  // Zero outside the stored range.
  RingValue coeff(int i, int j) const;
  void set(int i, int j, const RingValue& v);
  RingValue g_coeff(std::int64_t n) const;
  bool has_inhomogeneous_term() const;
};

// d >= 1, alpha(d, .) not all zero, alpha(., h) not all zero unless h = 0,
// all values in the declared ring. Throws EquationError.
void validate(const MahlerEquation& p);

MahlerEquation parse_equation(const std::string& text);
std::string equation_to_text(const MahlerEquation& p);

bool is_isolating(const MahlerEquation& p);
// (sum_{i=1}^d alpha(i,0)) f0 + g_0 = f0.
bool compatible_f0(const MahlerEquation& p);
// The same identity with the sum running to h instead of d.
bool compatible_f0_upper_h(const MahlerEquation& p);

struct SeriesPrefix {
  RingSpec ring;
  std::vector<RingValue> coeffs;

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  const RingValue& operator[](std::size_t n) const { return coeffs[n]; }
};

// k with Phi^i mapping x^k to x^m, if any.
std::optional<std::int64_t> phi_power_preimage(const Numeration& kind, std::int64_t m, int i);

// Phi^i(s) truncated at the order of s.
SeriesPrefix phi_series_apply(const SeriesPrefix& s, const Numeration& kind, int i);

// f_0 .. f_N of the unique solution. Requires an isolating equation with
// compatible f0.
SeriesPrefix solve_series(const MahlerEquation& p, std::int64_t N);

// Coefficients of A_0 y - sum_{i>=1} A_i Phi^i(y) - g up to the order of s.
SeriesPrefix residual(const MahlerEquation& p, const SeriesPrefix& s);

bool is_zero_series(const SeriesPrefix& s);

}  // namespace mahler
