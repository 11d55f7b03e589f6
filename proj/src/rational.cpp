#include "eckart/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace eckart {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    Rational d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational{std::string(num)} / d;
  } else {
    auto dot = body.find('.');
    auto whole = body.substr(0, dot);
    auto frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    value = whole.empty() ? Rational(0) : Rational{std::string(whole)};
    if (!frac.empty()) {
      Rational scale{1};
      for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
      value += Rational{std::string(frac)} / scale;
    }
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Gaussian Gaussian::i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

Gaussian Gaussian::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (norm == 0) throw std::domain_error("division by zero Gaussian rational");
  return {re_ / norm, -im_ / norm};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) { return *this *= o.inverse(); }

std::string to_string(const Gaussian& g) {
  if (g.is_real()) return to_string(g.re());
  if (g.re() == 0) return to_string(g.im()) + "*i";
  std::string im = to_string(g.im());
  if (im.front() != '-') im = "+" + im;
  return "(" + to_string(g.re()) + im + "*i)";
}

std::complex<double> to_complex(const Gaussian& g) {
  return {to_double(g.re()), to_double(g.im())};
}

double magnitude(const Gaussian& g) { return std::abs(to_complex(g)); }

}  // namespace eckart
