#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace eckart {

using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "p" or a plain decimal such as "-0.125" into an exact rational.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// Element of Q(i): re + im*i with exact rational parts.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(int re) : re_(re) {}                  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }
  /// i^k for any integer k.
  static Gaussian i_pow(int k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Gaussian conj() const { return {re_, -im_}; }
  Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const Gaussian& g);
std::complex<double> to_complex(const Gaussian& g);
inline std::complex<double> to_complex(const Rational& r) { return {to_double(r), 0.0}; }

/// Absolute value of a Gaussian rational as a double.
double magnitude(const Gaussian& g);

}  // namespace eckart
