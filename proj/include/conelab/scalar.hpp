#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace conelab {

// Exact arithmetic everywhere the order structure is decided; doubles only for
// spectra, eigenvalue floors and similar numeric reports.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using CRational = std::complex<Rational>;

enum class Mode { Exact, Approx };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input with inconsistent or unexpected dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Exact mode asked for a quantity that has no rational representation.
class ExactnessError : public Error {
 public:
  using Error::Error;
};

// Cone data that violates a construction precondition (zero generator,
// non-pointed cone, bad parameters).
class ConeError : public Error {
 public:
  using Error::Error;
};

// Malformed textual / JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

inline std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

// Accepts "p", "-p", "p/q" with optional sign on p; q must be positive.
// Validated character by character: the GMP string constructors ignore
// whitespace, which would let "1 2" slip through as 12.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  const auto digits = [](const std::string& t) {
    const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("not a rational literal: " + s);
  const BigInt n(num), d(den);
  if (d <= 0) throw ParseError("rational denominator must be positive: " + s);
  return Rational(n, d);
}

// Exact square root when one exists.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  auto n = exact_sqrt(numerator(x));
  if (!n) return std::nullopt;
  auto d = exact_sqrt(denominator(x));
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // divides exactly: r is a running binomial
  }
  return r;
}

// Best rational approximation via continued fractions, denominator capped.
// Used to promote numerically found witnesses to exact candidates.
inline Rational rationalize(double x, const BigInt& max_den = BigInt(1000000)) {
  if (!std::isfinite(x)) throw Error("cannot rationalize a non-finite value");
  bool neg = x < 0;
  double v = neg ? -x : x;
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e18) break;
    BigInt a(static_cast<long long>(fl));
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  return neg ? Rational(-r) : r;
}

// A report quantity that is either exactly known or carries a numeric value.
struct ScalarValue {
  std::variant<Rational, double> value;

  ScalarValue() : value(Rational(0)) {}
  explicit ScalarValue(Rational r) : value(std::move(r)) {}
  explicit ScalarValue(double d) : value(d) {}

  bool exact() const { return std::holds_alternative<Rational>(value); }
  const Rational& rational() const { return std::get<Rational>(value); }
  double as_double() const {
    return exact() ? to_double(std::get<Rational>(value)) : std::get<double>(value);
  }
};

}  // namespace conelab
