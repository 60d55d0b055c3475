#include "mahler/ring.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace mahler {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const BigInt& n, std::uint64_t m) {
  BigInt r = n % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

// Extended Euclid; returns the inverse of a modulo m or 0 when a is not a unit.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  BigInt t = 0, new_t = 1, r = m, new_r = a;
  while (new_r != 0) {
    BigInt q = r / new_r;
    BigInt tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return 0;
  return reduce(t, m);
}

BigInt parse_bigint(std::string_view s) {
  if (s.empty()) throw RingError("empty integer literal");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw RingError("malformed integer literal '" + std::string(s) + "'");
  BigInt n = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw RingError("malformed integer literal '" + std::string(s) + "'");
    n = n * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-n) : n;
}

std::uint64_t parse_modulus(std::string_view s) {
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw RingError("malformed modulus '" + std::string(s) + "'");
  return n;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

RingSpec RingSpec::mod(std::uint64_t n) {
  if (n < 2) throw RingError("ModRing modulus must be at least 2");
  if (n >= (1ULL << 63)) throw RingError("ModRing modulus too large");
  return RingSpec(RingKind::ModRing, n);
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw RingError("PrimeField modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 63)) throw RingError("PrimeField modulus too large");
  return RingSpec(RingKind::PrimeField, p);
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.starts_with("Zmod:")) return mod(parse_modulus(text.substr(5)));
  if (text.starts_with("Fp:")) return prime_field(parse_modulus(text.substr(3)));
  throw RingError("unknown ring '" + std::string(text) + "' (expected Z, Q, Zmod:<n> or Fp:<p>)");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::ModRing: return "Zmod:" + std::to_string(modulus_);
    case RingKind::PrimeField: return "Fp:" + std::to_string(modulus_);
  }
  return "?";
}

RingValue::RingValue(RingSpec spec) : spec_(spec) {
  switch (spec.kind()) {
    case RingKind::Integers: v_ = BigInt(0); break;
    case RingKind::Rationals: v_ = BigRational(0); break;
    default: v_ = std::uint64_t{0}; break;
  }
}

RingValue RingValue::from_int(RingSpec spec, const BigInt& n) {
  RingValue r(spec);
  switch (spec.kind()) {
    case RingKind::Integers: r.v_ = n; break;
    case RingKind::Rationals: r.v_ = BigRational(n); break;
    default: r.v_ = reduce(n, spec.modulus()); break;
  }
  return r;
}

RingValue RingValue::from_rational(RingSpec spec, const BigInt& num, const BigInt& den) {
  if (den == 0) throw RingError("zero denominator");
  switch (spec.kind()) {
    case RingKind::Rationals: {
      RingValue r(spec);
      r.v_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
      return r;
    }
    case RingKind::Integers:
      if (num % den != 0) throw RingError("non-integral literal in Z");
      return from_int(spec, num / den);
    default: {
      std::uint64_t d = reduce(den, spec.modulus());
      std::uint64_t inv = invmod(d, spec.modulus());
      if (inv == 0) throw RingError("denominator is not a unit in " + spec.to_string());
      RingValue r(spec);
      r.v_ = mulmod(reduce(num, spec.modulus()), inv, spec.modulus());
      return r;
    }
  }
}

RingValue RingValue::parse(RingSpec spec, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(spec, parse_bigint(text));
  return from_rational(spec, parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

bool RingValue::is_zero() const {
  switch (spec_.kind()) {
    case RingKind::Integers: return std::get<BigInt>(v_) == 0;
    case RingKind::Rationals: return std::get<BigRational>(v_) == 0;
    default: return std::get<std::uint64_t>(v_) == 0;
  }
}

bool RingValue::is_one() const {
  switch (spec_.kind()) {
    case RingKind::Integers: return std::get<BigInt>(v_) == 1;
    case RingKind::Rationals: return std::get<BigRational>(v_) == 1;
    default: return std::get<std::uint64_t>(v_) == 1;
  }
}

void RingValue::check_same(const RingValue& other) const {
  if (!(spec_ == other.spec_))
    throw RingError("ring mismatch: " + spec_.to_string() + " vs " + other.spec_.to_string());
}

RingValue RingValue::operator-() const {
  RingValue r(*this);
  switch (spec_.kind()) {
    case RingKind::Integers: r.v_ = BigInt(-std::get<BigInt>(v_)); break;
    case RingKind::Rationals: r.v_ = BigRational(-std::get<BigRational>(v_)); break;
    default: {
      auto x = std::get<std::uint64_t>(v_);
      r.v_ = x == 0 ? 0 : spec_.modulus() - x;
      break;
    }
  }
  return r;
}

RingValue& RingValue::operator+=(const RingValue& other) {
  check_same(other);
  switch (spec_.kind()) {
    case RingKind::Integers: std::get<BigInt>(v_) += std::get<BigInt>(other.v_); break;
    case RingKind::Rationals: std::get<BigRational>(v_) += std::get<BigRational>(other.v_); break;
    default: {
      auto m = spec_.modulus();
      auto& x = std::get<std::uint64_t>(v_);
      x = static_cast<std::uint64_t>((static_cast<u128>(x) + std::get<std::uint64_t>(other.v_)) % m);
      break;
    }
  }
  return *this;
}

RingValue& RingValue::operator-=(const RingValue& other) { return *this += -other; }

RingValue& RingValue::operator*=(const RingValue& other) {
  check_same(other);
  switch (spec_.kind()) {
    case RingKind::Integers: std::get<BigInt>(v_) *= std::get<BigInt>(other.v_); break;
    case RingKind::Rationals: std::get<BigRational>(v_) *= std::get<BigRational>(other.v_); break;
    default: {
      auto& x = std::get<std::uint64_t>(v_);
      x = mulmod(x, std::get<std::uint64_t>(other.v_), spec_.modulus());
      break;
    }
  }
  return *this;
}

void RingValue::add_product(const RingValue& a, const RingValue& b) {
  check_same(a);
  check_same(b);
  switch (spec_.kind()) {
    case RingKind::Integers: {
      const auto& x = std::get<BigInt>(a.v_);
      const auto& y = std::get<BigInt>(b.v_);
      if (y == 1) {
        std::get<BigInt>(v_) += x;
      } else {
        std::get<BigInt>(v_) += x * y;
      }
      break;
    }
    case RingKind::Rationals:
      std::get<BigRational>(v_) += std::get<BigRational>(a.v_) * std::get<BigRational>(b.v_);
      break;
    default: {
      auto m = spec_.modulus();
      auto& x = std::get<std::uint64_t>(v_);
      u128 p = static_cast<u128>(std::get<std::uint64_t>(a.v_)) * std::get<std::uint64_t>(b.v_) % m;
      x = static_cast<std::uint64_t>((p + x) % m);
      break;
    }
  }
}

RingValue RingValue::inverse() const {
  if (!spec_.is_field()) throw RingError("inverse requested in non-field " + spec_.to_string());
  if (is_zero()) throw RingError("inverse of zero");
  RingValue r(*this);
  if (spec_.kind() == RingKind::Rationals) {
    r.v_ = BigRational(1) / std::get<BigRational>(v_);
  } else {
    r.v_ = invmod(std::get<std::uint64_t>(v_), spec_.modulus());
  }
  return r;
}

RingValue RingValue::pow(std::uint64_t e) const {
  RingValue result = one(spec_);
  RingValue base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

BigInt RingValue::to_integer() const {
  switch (spec_.kind()) {
    case RingKind::Integers: return std::get<BigInt>(v_);
    case RingKind::Rationals: {
      const auto& q = std::get<BigRational>(v_);
      if (boost::multiprecision::denominator(q) != 1) throw RingError("rational value is not an integer");
      return boost::multiprecision::numerator(q);
    }
    default: return BigInt(std::get<std::uint64_t>(v_));
  }
}

const BigRational& RingValue::as_rational() const {
  if (spec_.kind() != RingKind::Rationals) throw RingError("value is not in Q");
  return std::get<BigRational>(v_);
}

std::string RingValue::to_string() const {
  switch (spec_.kind()) {
    case RingKind::Integers: return std::get<BigInt>(v_).str();
    case RingKind::Rationals: {
      const auto& q = std::get<BigRational>(v_);
      auto num = boost::multiprecision::numerator(q);
      auto den = boost::multiprecision::denominator(q);
      if (den == 1) return num.str();
      return num.str() + "/" + den.str();
    }
    default: return std::to_string(std::get<std::uint64_t>(v_));
  }
}

bool operator==(const RingValue& a, const RingValue& b) {
  return a.spec_ == b.spec_ && a.v_ == b.v_;
}

std::ostream& operator<<(std::ostream& os, const RingValue& v) { return os << v.to_string(); }

}  // namespace mahler
