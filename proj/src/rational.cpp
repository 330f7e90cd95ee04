#include "hankel/rational.hpp"

#include <stdexcept>

namespace hankel {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  q.canonicalize();
  return q;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero");
  ModP base = *this, out = raw(1);
  std::uint32_t e = modulus - 2;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::string to_string(ModP a) { return std::to_string(a.value()); }

}  // namespace hankel
