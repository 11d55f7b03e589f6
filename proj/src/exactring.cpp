#include "eckart/exactring.hpp"

#include <cmath>

namespace eckart {

namespace {

void require_same_signature(const SurfaceExpression& a, const SurfaceExpression& b) {
  if (a.signature() != b.signature()) {
    throw ring_error(std::string("signature mismatch: ") + to_string(a.signature()) + " vs " +
                     to_string(b.signature()));
  }
}

// Binomial coefficients of (1 - kappa s^2)^n, used to strip c^2 factors.
std::vector<Rational> relation_power(int kappa, int n) {
  std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(0));
  row[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int j = k; j >= 1; --j) row[j] = row[j] + row[j - 1] * Rational(-kappa);
  }
  return row;
}

std::complex<double> eval_coeff(const BPoly& p, const std::optional<std::complex<double>>& b) {
  if (p.is_constant()) return p.is_zero() ? std::complex<double>{} : to_complex(p[0]);
  if (!b) throw ring_error("expression depends on the coupling b but no value was supplied");
  return p.evaluate(*b);
}

}  // namespace

const char* to_string(Signature sig) {
  return sig == Signature::Hyperbolic ? "hyperbolic" : "trigonometric";
}

SurfaceExpression SurfaceExpression::constant(Signature sig, BPoly value) {
  return monomial(sig, 0, 0, std::move(value));
}

SurfaceExpression SurfaceExpression::monomial(Signature sig, int c_power, int s_power, BPoly coeff) {
  if (c_power < 0) throw ring_error("negative powers of c are not supported");
  SurfaceExpression out(sig);
  out.accumulate(c_power, s_power, coeff);
  return out;
}

SurfaceExpression SurfaceExpression::from_terms(Signature sig, const std::vector<Term>& terms) {
  SurfaceExpression out(sig);
  for (const auto& t : terms) {
    if (t.monomial.c_power < 0) throw ring_error("negative powers of c are not supported");
    out.accumulate(t.monomial.c_power, t.monomial.s_power, t.coeff);
  }
  return out;
}

SurfaceExpression SurfaceExpression::with_prefactor(BPoly exp_factor, int phase) const {
  SurfaceExpression out = *this;
  out.exp_factor_ = std::move(exp_factor);
  out.phase_ = phase;
  out.normalize_zero();
  return out;
}

BPoly SurfaceExpression::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BPoly{} : it->second;
}

SurfaceExpression SurfaceExpression::scaled(const BPoly& factor) const {
  SurfaceExpression out(sig_);
  out.exp_factor_ = exp_factor_;
  out.phase_ = phase_;
  for (const auto& [m, c] : terms_) {
    BPoly v = c * factor;
    if (!v.is_zero()) out.terms_.emplace(m, std::move(v));
  }
  out.normalize_zero();
  return out;
}

SurfaceExpression SurfaceExpression::at_coupling(const Rational& b) const {
  SurfaceExpression out(sig_);
  out.exp_factor_ = BPoly(evaluate_at(exp_factor_, b));
  out.phase_ = phase_;
  for (const auto& [m, c] : terms_) {
    Gaussian v = evaluate_at(c, b);
    if (!v.is_zero()) out.terms_.emplace(m, BPoly(v));
  }
  out.normalize_zero();
  return out;
}

bool SurfaceExpression::is_coupling_free() const {
  if (!exp_factor_.is_constant()) return false;
  for (const auto& [m, c] : terms_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

bool operator==(const SurfaceExpression& a, const SurfaceExpression& b) {
  return a.sig_ == b.sig_ && a.exp_factor_ == b.exp_factor_ && a.phase_ == b.phase_ &&
         a.terms_ == b.terms_;
}

void SurfaceExpression::accumulate(int c_power, int s_power, const BPoly& coeff) {
  if (coeff.is_zero()) return;
  // c^(2k + r) s^q = c^r s^q (1 - kappa s^2)^k
  const int r = c_power % 2;
  const int k = c_power / 2;
  const auto binom = relation_power(kappa(sig_), k);
  for (int j = 0; j <= k; ++j) {
    if (binom[j] == 0) continue;
    Monomial m{r, s_power + 2 * j};
    BPoly add = coeff.scaled(Gaussian(binom[j]));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(add));
    } else {
      it->second += add;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  normalize_zero();
}

void SurfaceExpression::normalize_zero() {
  if (terms_.empty()) {
    exp_factor_ = BPoly{};
    phase_ = 0;
  }
}

namespace {

SurfaceExpression combine(const SurfaceExpression& a, const SurfaceExpression& b, bool subtract) {
  require_same_signature(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? b.scaled(BPoly(-1)) : b;
  if (!(a.exp_factor() == b.exp_factor()) || a.phase() != b.phase()) {
    throw ring_error("cannot add expressions with different prefactors: exp(" +
                     to_string(a.exp_factor()) + "*t)*phase(" + std::to_string(a.phase()) +
                     ") vs exp(" + to_string(b.exp_factor()) + "*t)*phase(" +
                     std::to_string(b.phase()) + ")");
  }
  std::vector<Term> terms;
  for (const auto& [m, c] : a.terms()) terms.push_back({m, c});
  for (const auto& [m, c] : b.terms()) terms.push_back({m, subtract ? -c : c});
  return SurfaceExpression::from_terms(a.signature(), terms).with_prefactor(a.exp_factor(), a.phase());
}

}  // namespace

SurfaceExpression ring_add(const SurfaceExpression& a, const SurfaceExpression& b) {
  return combine(a, b, false);
}

SurfaceExpression ring_sub(const SurfaceExpression& a, const SurfaceExpression& b) {
  return combine(a, b, true);
}

SurfaceExpression ring_mul(const SurfaceExpression& a, const SurfaceExpression& b) {
  require_same_signature(a, b);
  if (a.is_zero() || b.is_zero()) return SurfaceExpression(a.signature());
  std::vector<Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      terms.push_back({{ma.c_power + mb.c_power, ma.s_power + mb.s_power}, ca * cb});
    }
  }
  return SurfaceExpression::from_terms(a.signature(), terms)
      .with_prefactor(a.exp_factor() + b.exp_factor(), a.phase() + b.phase());
}

SurfaceExpression differentiate(const SurfaceExpression& f) {
  if (f.is_zero()) return f;
  const int k = kappa(f.signature());
  std::vector<Term> terms;
  for (const auto& [m, c] : f.terms()) {
    // exponential rule
    terms.push_back({m, c * f.exp_factor()});
    // d(c^p s^q) = p c^(p-1) s^q dc + q c^p s^(q-1) ds, dc = -kappa s, ds = c
    if (m.c_power > 0) {
      terms.push_back({{m.c_power - 1, m.s_power + 1}, c.scaled(Gaussian(-k * m.c_power))});
    }
    if (m.s_power != 0) {
      terms.push_back({{m.c_power + 1, m.s_power - 1}, c.scaled(Gaussian(m.s_power))});
    }
  }
  return SurfaceExpression::from_terms(f.signature(), terms).with_prefactor(f.exp_factor(), f.phase());
}

SurfaceExpression substitute_complexify(const SurfaceExpression& f) {
  if (f.signature() != Signature::Hyperbolic) {
    throw ring_error("complexification expects a hyperbolic expression");
  }
  const Gaussian minus_i = -Gaussian::i();
  std::vector<Term> terms;
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({m, c.rescaled_argument(minus_i).scaled(Gaussian::i_pow(m.s_power))});
  }
  BPoly mu = f.exp_factor().rescaled_argument(minus_i).scaled(Gaussian::i());
  return SurfaceExpression::from_terms(Signature::Trigonometric, terms).with_prefactor(mu, f.phase());
}

namespace {

// std::pow(complex, int) goes through the complex overload, which maps 0^0 to 0.
std::complex<double> int_power(std::complex<double> base, int exponent) {
  if (exponent < 0) return 1.0 / int_power(base, -exponent);
  std::complex<double> acc{1.0, 0.0};
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) acc *= base;
    base *= base;
  }
  return acc;
}

}  // namespace

std::complex<double> evaluate(const SurfaceExpression& f, std::complex<double> t, double phi,
                              std::optional<std::complex<double>> coupling) {
  if (f.is_zero()) return {};
  const bool hyp = f.signature() == Signature::Hyperbolic;
  const std::complex<double> c = hyp ? std::cosh(t) : std::cos(t);
  const std::complex<double> s = hyp ? std::sinh(t) : std::sin(t);
  std::complex<double> acc{};
  for (const auto& [m, coeff] : f.terms()) {
    std::complex<double> term = eval_coeff(coeff, coupling);
    if (m.c_power == 1) term *= c;
    term *= int_power(s, m.s_power);
    acc += term;
  }
  const std::complex<double> mu = eval_coeff(f.exp_factor(), coupling);
  const std::complex<double> phase = std::polar(1.0, static_cast<double>(f.phase()) * phi);
  return acc * std::exp(mu * t) * phase;
}

double coefficient_norm(const SurfaceExpression& f) {
  double acc = 0.0;
  for (const auto& [m, c] : f.terms()) acc += coefficient_norm(c);
  return acc;
}

std::string to_string(const SurfaceExpression& f) {
  if (f.is_zero()) return "0";
  const std::string mu = to_string(f.exp_factor());
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c) + " * c^" + std::to_string(m.c_power) + " * s^" + std::to_string(m.s_power) +
           " * exp(" + mu + "*t) * phase(" + std::to_string(f.phase()) + ")";
  }
  return out;
}

}  // namespace eckart
