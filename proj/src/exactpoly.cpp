#include "qimm/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qimm {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  auto check_digits = [&](std::string_view part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw std::invalid_argument("malformed rational literal: " + s);
      }
    }
  };
  auto strip_plus = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return part;
  };
  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_digits(num);
    check_digits(den);
    Integer d(strip_plus(den));
    if (d == 0) {
      throw std::invalid_argument("zero denominator: " + s);
    }
    r = Rational(Integer(strip_plus(num)), d);
  } else {
    check_digits(s);
    r = Rational(Integer(strip_plus(s)));
  }
  r.canonicalize();
  return r;
}

std::string rational_to_fraction(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return rational_to_fraction(r);
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return RatPoly(std::move(v));
}

void RatPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational RatPoly::eval(const Rational& point) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& other) { return *this = *this * other; }

RatPoly& RatPoly::operator*=(const Rational& scalar) {
  Rational s = scalar;
  s.canonicalize();
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RatPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    const Rational& c = coeffs_[p];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (p == 0) {
      out += rational_to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += rational_to_string(mag);
      if (mag.get_den() != 1) out += " ";
    }
    out += var;
    if (p > 1) out += "^" + std::to_string(p);
  }
  return out;
}

RatPoly pow(const RatPoly& base, unsigned exponent) {
  RatPoly result = RatPoly::constant(1);
  RatPoly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1u;
    if (exponent > 0) square *= square;
  }
  return result;
}

EvenNonneg is_even_nonneg(const RatPoly& p) {
  EvenNonneg out{true, true};
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1 && c[i] != 0) out.is_even = false;
    if (c[i] < 0) out.coeffs_nonneg = false;
  }
  return out;
}

nlohmann::json to_json(const RatPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_to_fraction(c));
  return arr;
}

RatPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    coeffs.push_back(parse_rational(e.get<std::string>()));
  }
  return RatPoly(std::move(coeffs));
}

Integer coeff_or_zero(const std::vector<Integer>& coeffs, long k) {
  if (k < 0 || k >= static_cast<long>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(k)];
}

namespace {

std::vector<Integer> integer_coeffs(const RatPoly& p) {
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw std::logic_error("expected an integer polynomial");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

std::vector<Integer> quadratic_power_coeffs(unsigned l, long s) {
  return integer_coeffs(pow(RatPoly{1, Rational(s), 1}, l));
}

std::vector<Integer> binomial_trinomial_coeffs(unsigned a, unsigned b) {
  return integer_coeffs(pow(RatPoly{1, 1}, a) * pow(RatPoly{1, 1, 1}, b));
}

}  // namespace qimm
