#include "mahler/numeration.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace mahler {

namespace {

constexpr int kMaxFib = 88;

const std::array<std::int64_t, kMaxFib + 3>& fib_table() {
  static const auto table = [] {
    std::array<std::int64_t, kMaxFib + 3> t{};
    t[0] = 0;
    t[1] = 1;
    for (std::size_t i = 2; i < t.size(); ++i) t[i] = t[i - 1] + t[i - 2];
    return t;
  }();
  return table;
}

unsigned __int128 isqrt128(unsigned __int128 n) {
  if (n == 0) return 0;
  unsigned __int128 x = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

Numeration Numeration::base(int q) {
  if (q < 2) throw std::invalid_argument("numeration base must be at least 2");
  return Numeration(Kind::BaseQ, q);
}

std::vector<int> Numeration::digits() const {
  std::vector<int> out;
  int top = is_zeckendorf() ? 2 : q_;
  for (int b = 0; b < top; ++b) out.push_back(b);
  return out;
}

std::string Numeration::to_string() const {
  return is_zeckendorf() ? "zeckendorf" : "base " + std::to_string(q_);
}

std::int64_t fib(int i) {
  if (i < -2 || i > kMaxFib) throw std::out_of_range("fib index out of range");
  return fib_table()[i + 2];
}

DigitWord canonical(std::int64_t n, const Numeration& kind) {
  if (n < 0) throw std::invalid_argument("canonical: negative integer");
  if (n == 0) return {0};
  DigitWord w;
  if (!kind.is_zeckendorf()) {
    while (n > 0) {
      w.push_back(static_cast<int>(n % kind.q()));
      n /= kind.q();
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
  int top = 0;
  while (top + 1 <= kMaxFib && fib(top + 1) <= n) ++top;
  for (int i = top; i >= 0; --i) {
    if (fib(i) <= n) {
      w.push_back(1);
      n -= fib(i);
    } else {
      w.push_back(0);
    }
  }
  return w;
}

std::int64_t value(const DigitWord& w, const Numeration& kind) {
  __int128 total = 0;
  const __int128 limit = static_cast<__int128>(INT64_MAX);
  if (kind.is_zeckendorf()) {
    const int len = static_cast<int>(w.size());
    for (int pos = 0; pos < len; ++pos) {
      int d = w[len - 1 - pos];
      if (d == 0) continue;
      if (pos > kMaxFib) throw std::overflow_error("Zeckendorf word too long");
      total += static_cast<__int128>(d) * fib(pos);
      if (total > limit || total < -limit) throw std::overflow_error("word value out of range");
    }
    return static_cast<std::int64_t>(total);
  }
  for (int d : w) {
    total = total * kind.q() + d;
    if (total > limit || total < -limit) throw std::overflow_error("word value out of range");
  }
  return static_cast<std::int64_t>(total);
}

std::int64_t floor_phi_multiple(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("floor_phi_multiple: negative argument");
  auto kk = static_cast<unsigned __int128>(k);
  return static_cast<std::int64_t>((kk + isqrt128(5 * kk * kk)) / 2);
}

std::int64_t phi_floor(std::int64_t n) { return floor_phi_multiple(n + 1) - 1; }

std::int64_t phi2_floor(std::int64_t n) { return n + floor_phi_multiple(n + 1) - 1; }

std::int64_t phi(std::int64_t n) {
  auto w = canonical(n, Numeration::zeckendorf());
  w.push_back(0);
  return value(w, Numeration::zeckendorf());
}

std::int64_t phi_iter(std::int64_t n, int i) {
  if (i < 0) throw std::invalid_argument("phi_iter: negative iteration count");
  if (n == 0) return 0;
  auto w = canonical(n, Numeration::zeckendorf());
  w.insert(w.end(), i, 0);
  return value(w, Numeration::zeckendorf());
}

std::optional<std::int64_t> phi_preimage(std::int64_t m, int i) {
  if (m < 0) return std::nullopt;
  if (i == 0 || m == 0) return m;
  auto w = canonical(m, Numeration::zeckendorf());
  if (static_cast<int>(w.size()) <= i) return std::nullopt;
  for (int t = 0; t < i; ++t) {
    if (w[w.size() - 1 - t] != 0) return std::nullopt;
  }
  w.resize(w.size() - i);
  return value(w, Numeration::zeckendorf());
}

std::int64_t lambda(std::int64_t n) {
  auto w = canonical(n, Numeration::zeckendorf());
  if (w.size() <= 1) return 0;
  w.pop_back();
  return value(w, Numeration::zeckendorf());
}

int delta(std::int64_t m, std::int64_t n) {
  return static_cast<int>(phi(m + n) - phi(m) - phi(n));
}

DigitWord pad_left(const DigitWord& w, std::size_t length) {
  if (w.size() >= length) return w;
  DigitWord out(length - w.size(), 0);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

DigitWord digit_add(const DigitWord& u, const DigitWord& v) {
  std::size_t len = std::max(u.size(), v.size());
  auto a = pad_left(u, len);
  auto b = pad_left(v, len);
  for (std::size_t i = 0; i < len; ++i) a[i] += b[i];
  return a;
}

DigitWord digit_sub(const DigitWord& u, const DigitWord& v) {
  std::size_t len = std::max(u.size(), v.size());
  auto a = pad_left(u, len);
  auto b = pad_left(v, len);
  for (std::size_t i = 0; i < len; ++i) a[i] -= b[i];
  return a;
}

bool disjoint_support(std::int64_t m, std::int64_t n) {
  auto z = Numeration::zeckendorf();
  auto a = canonical(m, z);
  auto b = canonical(n, z);
  std::size_t len = std::max(a.size(), b.size());
  a = pad_left(a, len);
  b = pad_left(b, len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

bool has_11(const DigitWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == 1 && w[i - 1] == 1) return true;
  }
  return false;
}

std::int64_t h_tilde(std::int64_t h) { return floor_phi_multiple(h + 2) - 1; }

std::string word_to_string(const DigitWord& w) {
  bool simple = std::all_of(w.begin(), w.end(), [](int d) { return d >= 0 && d <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (simple) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

DigitWord word_from_string(std::string_view text) {
  DigitWord w;
  bool separated = text.find_first_of(", ") != std::string_view::npos || text.find('-') != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad digit in word '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && text[j] != ' ') ++j;
    auto token = text.substr(i, j - i);
    if (token.starts_with('+')) token.remove_prefix(1);
    int d = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("bad digit '" + std::string(token) + "'");
    w.push_back(d);
    i = j;
  }
  return w;
}

}  // namespace mahler
