#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hankel {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

// mpq_class(p, q) does not reduce; use this instead.
inline Rational ratio(long p, long q) {
  Rational out(p, q);
  out.canonicalize();
  return out;
}

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Prime field Z/(2^31 - 1). Used for the optional fast rank mode.
class ModP {
 public:
  static constexpr std::uint32_t modulus = 2147483647u;

  ModP() = default;
  ModP(long long v) {  // NOLINT(google-explicit-constructor)
    long long m = v % static_cast<long long>(modulus);
    if (m < 0) m += modulus;
    v_ = static_cast<std::uint32_t>(m);
  }
  static ModP raw(std::uint32_t v) {
    ModP x;
    x.v_ = v;
    return x;
  }
  std::uint32_t value() const { return v_; }

  friend ModP operator+(ModP a, ModP b) { return raw(reduce(std::uint64_t{a.v_} + b.v_)); }
  friend ModP operator-(ModP a, ModP b) { return raw(reduce(std::uint64_t{a.v_} + modulus - b.v_)); }
  friend ModP operator*(ModP a, ModP b) { return raw(reduce(std::uint64_t{a.v_} * b.v_)); }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : modulus - v_); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP inverse() const;

  static std::uint32_t reduce(std::uint64_t x) {
    x = (x & modulus) + (x >> 31);
    x = (x & modulus) + (x >> 31);
    return static_cast<std::uint32_t>(x >= modulus ? x - modulus : x);
  }

 private:
  std::uint32_t v_ = 0;
};

inline bool is_zero(ModP a) { return a.value() == 0; }
inline bool is_one(ModP a) { return a.value() == 1; }
std::string to_string(ModP a);

}  // namespace hankel
