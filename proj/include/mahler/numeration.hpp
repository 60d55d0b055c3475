#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mahler {

// Digits most-significant-first. Digits may be negative; the word need not
// be canonical.
using DigitWord = std::vector<int>;

class Numeration {
 public:
  enum class Kind { BaseQ, Zeckendorf };

  static Numeration base(int q);
  static Numeration zeckendorf() { return Numeration(Kind::Zeckendorf, 0); }

  Kind kind() const { return kind_; }
  bool is_zeckendorf() const { return kind_ == Kind::Zeckendorf; }
  // Base for BaseQ, 0 for Zeckendorf.
  int q() const { return q_; }
  // Canonical digit alphabet: {0..q-1} or {0,1}.
  std::vector<int> digits() const;
  std::string to_string() const;

  friend bool operator==(const Numeration&, const Numeration&) = default;

 private:
  Numeration(Kind kind, int q) : kind_(kind), q_(q) {}

  Kind kind_ = Kind::Zeckendorf;
  int q_ = 0;
};

// F_{-2} = 0, F_{-1} = 1, F_0 = 1, F_1 = 2, ... ; valid for -2 <= i <= 88.
std::int64_t fib(int i);

DigitWord canonical(std::int64_t n, const Numeration& kind);
// Throws std::overflow_error when the value leaves the 64-bit range.
std::int64_t value(const DigitWord& w, const Numeration& kind);

// Exact floor(k * golden ratio) for k >= 0.
std::int64_t floor_phi_multiple(std::int64_t k);
// floor(phi*n + phi - 1) and floor(phi^2*n + phi - 1).
std::int64_t phi_floor(std::int64_t n);
std::int64_t phi2_floor(std::int64_t n);

std::int64_t phi(std::int64_t n);
std::int64_t phi_iter(std::int64_t n, int i);
std::optional<std::int64_t> phi_preimage(std::int64_t m, int i);
std::int64_t lambda(std::int64_t n);
int delta(std::int64_t m, std::int64_t n);

DigitWord digit_add(const DigitWord& u, const DigitWord& v);
DigitWord digit_sub(const DigitWord& u, const DigitWord& v);
DigitWord pad_left(const DigitWord& w, std::size_t length);
bool disjoint_support(std::int64_t m, std::int64_t n);
bool has_11(const DigitWord& w);

// floor(phi*(h+2)) - 1: the offset bound of the Zeckendorf compiler.
std::int64_t h_tilde(std::int64_t h);

// "101" when all digits are in 0..9, "1,0,-1" otherwise.
std::string word_to_string(const DigitWord& w);
// Accepts both forms; whitespace-separated digits are also accepted.
DigitWord word_from_string(std::string_view text);

}  // namespace mahler
