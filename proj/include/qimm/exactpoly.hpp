#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qimm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a" or "a/b" (optional sign) into a canonical rational.
Rational parse_rational(std::string_view text);
/// Always "num/den", e.g. "1/1", "-4/3".
std::string rational_to_fraction(const Rational& r);
/// "3" for integers, "4/3" otherwise.
std::string rational_to_string(const Rational& r);

Integer binomial(long n, long k);

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[p] is the coefficient of x^p. The zero polynomial is the empty
/// coefficient vector; every constructor strips trailing zeros, so the
/// highest stored coefficient is always nonzero.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  /// c * x^power
  static RatPoly monomial(const Rational& c, std::size_t power);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Zero for powers beyond the degree.
  Rational coeff(std::size_t power) const;

  Rational eval(const Rational& point) const;

  RatPoly& operator+=(const RatPoly& other);
  RatPoly& operator-=(const RatPoly& other);
  RatPoly& operator*=(const RatPoly& other);
  RatPoly& operator*=(const Rational& scalar);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  RatPoly operator-() const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in the given variable, e.g. "1 + 3q^2 + 4/3 q^4".
  std::string to_string(std::string_view var = "q") const;

private:
  void normalize();

  std::vector<Rational> coeffs_;
};

RatPoly pow(const RatPoly& base, unsigned exponent);

struct EvenNonneg {
  bool is_even = false;
  bool coeffs_nonneg = false;
};

/// is_even: every odd-power coefficient vanishes.
/// coeffs_nonneg: every coefficient is >= 0.
EvenNonneg is_even_nonneg(const RatPoly& p);

/// JSON array of "num/den" strings in ascending power order.
nlohmann::json to_json(const RatPoly& p);
RatPoly poly_from_json(const nlohmann::json& j);

/// Coefficient of x^k in `coeffs`, zero outside the stored range (including k < 0).
Integer coeff_or_zero(const std::vector<Integer>& coeffs, long k);

/// Integer coefficients of (1 + s x + x^2)^l.
std::vector<Integer> quadratic_power_coeffs(unsigned l, long s);

/// Integer coefficients of (1 + x)^a (1 + x + x^2)^b.
std::vector<Integer> binomial_trinomial_coeffs(unsigned a, unsigned b);

}  // namespace qimm
