#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace mahler {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RingKind { Integers, Rationals, ModRing, PrimeField };

// Which exact commutative ring a value lives in. Moduli are limited to 63 bits.
class RingSpec {
 public:
  RingSpec() = default;

  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
  static RingSpec mod(std::uint64_t n);
  static RingSpec prime_field(std::uint64_t p);

  // Text syntax: Z, Q, Zmod:<n>, Fp:<p>.
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField; }
  bool is_finite() const { return kind_ == RingKind::ModRing || kind_ == RingKind::PrimeField; }
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_ = RingKind::Integers;
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

// An element of a RingSpec in canonical form: reduced fraction for Q,
// representative in [0, n) for modular rings.
class RingValue {
 public:
  RingValue() : RingValue(RingSpec::integers()) {}
  explicit RingValue(RingSpec spec);

  static RingValue zero(RingSpec spec) { return RingValue(spec); }
  static RingValue one(RingSpec spec) { return from_int(spec, 1); }
  static RingValue from_int(RingSpec spec, const BigInt& n);
  static RingValue from_int(RingSpec spec, long long n) { return from_int(spec, BigInt(n)); }
  static RingValue from_rational(RingSpec spec, const BigInt& num, const BigInt& den);
  // Signed decimal integer or a/b.
  static RingValue parse(RingSpec spec, std::string_view text);

  const RingSpec& spec() const { return spec_; }

  bool is_zero() const;
  bool is_one() const;

  RingValue operator-() const;
  RingValue& operator+=(const RingValue& other);
  RingValue& operator-=(const RingValue& other);
  RingValue& operator*=(const RingValue& other);
  friend RingValue operator+(RingValue a, const RingValue& b) { return a += b; }
  friend RingValue operator-(RingValue a, const RingValue& b) { return a -= b; }
  friend RingValue operator*(RingValue a, const RingValue& b) { return a *= b; }

  // acc += a * b without a temporary; the hot loop of automaton evaluation.
  void add_product(const RingValue& a, const RingValue& b);

  RingValue inverse() const;
  RingValue pow(std::uint64_t e) const;

  // Integer view: the value itself for Z, the representative for modular
  // rings; throws for non-integral rationals.
  BigInt to_integer() const;
  const BigRational& as_rational() const;

  std::string to_string() const;

  friend bool operator==(const RingValue& a, const RingValue& b);

 private:
  void check_same(const RingValue& other) const;

  RingSpec spec_;
  std::variant<std::uint64_t, BigInt, BigRational> v_;
};

std::ostream& operator<<(std::ostream& os, const RingValue& v);

inline RingValue ring_add(const RingValue& a, const RingValue& b) { return a + b; }
inline RingValue ring_mul(const RingValue& a, const RingValue& b) { return a * b; }
inline RingValue ring_neg(const RingValue& a) { return -a; }
inline RingValue ring_zero(RingSpec spec) { return RingValue::zero(spec); }
inline RingValue ring_one(RingSpec spec) { return RingValue::one(spec); }
inline RingValue ring_inverse(const RingValue& a) { return a.inverse(); }

}  // namespace mahler
