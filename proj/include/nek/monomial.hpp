#ifndef NEK_MONOMIAL_HPP
#define NEK_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace nek::alg {

// Packed exponent vector. Byte 0 holds the total degree, bytes 1..kMaxVars
// the per-variable exponents, so a single lexicographic byte comparison
// realizes the graded lexicographic order (variable 0 strongest).
struct Mono {
  static constexpr int kMaxVars = 15;
  std::array<uint8_t, 16> b{};

  int degree() const { return b[0]; }
  int exp(int v) const { return b[1 + v]; }

  void set_exp(int v, int e) {
    if (v < 0 || v >= kMaxVars) throw std::out_of_range("variable index");
    if (e < 0 || e > 255) throw std::overflow_error("exponent out of range");
    b[0] = static_cast<uint8_t>(b[0] - b[1 + v] + e);
    b[1 + v] = static_cast<uint8_t>(e);
  }

  bool is_one() const { return b == std::array<uint8_t, 16>{}; }

  friend Mono operator*(const Mono& x, const Mono& y) {
    Mono r;
    unsigned deg = unsigned(x.b[0]) + unsigned(y.b[0]);
    if (deg > 255) throw std::overflow_error("monomial degree overflow");
    for (int i = 0; i < 16; ++i)
      r.b[i] = static_cast<uint8_t>(x.b[i] + y.b[i]);
    return r;
  }

  // Exact quotient; caller must know y divides x.
  friend Mono operator/(const Mono& x, const Mono& y) {
    Mono r;
    for (int i = 0; i < 16; ++i) {
      if (x.b[i] < y.b[i]) throw std::domain_error("monomial not divisible");
      r.b[i] = static_cast<uint8_t>(x.b[i] - y.b[i]);
    }
    return r;
  }

  bool divisible_by(const Mono& y) const {
    for (int i = 1; i < 16; ++i)
      if (b[i] < y.b[i]) return false;
    return true;
  }

  friend bool operator==(const Mono& x, const Mono& y) { return x.b == y.b; }
  // Graded lex: higher degree first, then variable 0 exponent, etc.
  friend bool operator<(const Mono& x, const Mono& y) {
    return std::memcmp(x.b.data(), y.b.data(), 16) < 0;
  }
  friend bool operator>(const Mono& x, const Mono& y) { return y < x; }
};

struct MonoHash {
  size_t operator()(const Mono& m) const {
    uint64_t h = 1469598103934665603ull;
    for (uint8_t c : m.b) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace nek::alg

#endif
