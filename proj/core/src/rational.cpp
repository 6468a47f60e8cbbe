#include "bernheight/rational.hpp"

#include <stdexcept>

namespace bernheight {

// GMP's C++ interface speaks `long`; this library assumes an LP64 target.
static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target required");

Integer make_integer(std::int64_t value) { return Integer(static_cast<long>(value)); }

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational q(make_integer(num), make_integer(den));
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational frac(const Rational& q) {
  Rational out = q - Rational(floor_of(q));
  return out;
}

Rational centered_mod1(const Rational& q) {
  static const Rational half(1, 2);
  return q - Rational(floor_of(q + half));
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  }
  return static_cast<std::int64_t>(z.get_si());
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty rational");
  }
  if (s.front() == '+') {
    s.erase(0, 1);
  }
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(num), d(den);
  if (d == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace bernheight
