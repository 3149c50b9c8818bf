#include "descent/exppoly.hpp"

#include <algorithm>
#include <cmath>

namespace descent::expfun {

namespace {

bool term_order(const ExpTerm& x, const ExpTerm& y) {
  if (x.mu.real() != y.mu.real()) return x.mu.real() < y.mu.real();
  if (x.mu.imag() != y.mu.imag()) return x.mu.imag() < y.mu.imag();
  return x.degree < y.degree;
}

Complex snap(Complex mu) {
  return std::abs(mu) <= ExpPoly::kMergeTolerance ? Complex(0.0, 0.0) : mu;
}

}  // namespace

ExpPoly ExpPoly::constant(Complex c) {
  ExpPoly p;
  p.add(c, 0, Complex(0.0, 0.0));
  return p;
}

ExpPoly ExpPoly::term(Complex coef, int degree, Complex mu) {
  ExpPoly p;
  p.add(coef, degree, mu);
  return p;
}

void ExpPoly::add(Complex coef, int degree, Complex mu) {
  if (coef == Complex(0.0, 0.0)) return;
  mu = snap(mu);
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->degree == degree && std::abs(it->mu - mu) <= kMergeTolerance) {
      it->coef += coef;
      if (it->coef == Complex(0.0, 0.0)) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({coef, degree, mu});
  normalize();
}

void ExpPoly::normalize() { std::sort(terms_.begin(), terms_.end(), term_order); }

Complex ExpPoly::operator()(double x) const {
  Complex sum(0.0, 0.0);
  for (const auto& t : terms_) sum += t.coef * std::pow(x, t.degree) * std::exp(t.mu * x);
  return sum;
}

ExpPoly ExpPoly::antiderivative() const {
  ExpPoly out;
  for (const auto& t : terms_) {
    if (t.mu == Complex(0.0, 0.0)) {
      out.add(t.coef / static_cast<double>(t.degree + 1), t.degree + 1, t.mu);
      continue;
    }
    // int x^k e^{mu x} = e^{mu x} sum_j (-1)^j k!/(k-j)! x^{k-j} / mu^{j+1}
    Complex factor = t.coef / t.mu;
    for (int j = 0; j <= t.degree; ++j) {
      out.add(factor, t.degree - j, t.mu);
      factor *= -static_cast<double>(t.degree - j) / t.mu;
    }
    // subtract the value at 0, which is the j = k term without the exponential
    Complex at_zero = t.coef / t.mu;
    for (int j = 1; j <= t.degree; ++j) at_zero *= -static_cast<double>(t.degree - j + 1) / t.mu;
    out.add(-at_zero, 0, Complex(0.0, 0.0));
  }
  return out;
}

ExpPoly ExpPoly::reflected() const {
  ExpPoly out;
  for (const auto& t : terms_) {
    // c (1-x)^k e^{mu (1-x)} = c e^mu sum_j C(k,j) (-x)^j e^{-mu x}
    const Complex base = t.coef * std::exp(t.mu);
    double binom = 1.0;
    for (int j = 0; j <= t.degree; ++j) {
      out.add(base * (j % 2 == 0 ? binom : -binom), j, -t.mu);
      binom = binom * (t.degree - j) / (j + 1);
    }
  }
  return out;
}

ExpPoly ExpPoly::conj() const {
  ExpPoly out;
  for (const auto& t : terms_) out.add(std::conj(t.coef), t.degree, std::conj(t.mu));
  return out;
}

ExpPoly ExpPoly::pruned(double tol) const {
  ExpPoly out;
  for (const auto& t : terms_) {
    if (std::abs(t.coef) > tol) out.terms_.push_back(t);
  }
  return out;
}

double ExpPoly::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& t : terms_) best = std::max(best, std::abs(t.coef));
  return best;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
  for (const auto& t : rhs.terms_) add(t.coef, t.degree, t.mu);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& rhs) {
  for (const auto& t : rhs.terms_) add(-t.coef, t.degree, t.mu);
  return *this;
}

ExpPoly& ExpPoly::operator*=(Complex s) {
  if (s == Complex(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= s;
  return *this;
}

ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs) {
  ExpPoly out;
  for (const auto& x : lhs.terms_) {
    for (const auto& y : rhs.terms_) out.add(x.coef * y.coef, x.degree + y.degree, x.mu + y.mu);
  }
  return out;
}

// ---------------------------------------------------------------------------

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

void RationalPoly::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Rational RationalPoly::at_one() const {
  Rational acc(0);
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

RationalPoly RationalPoly::antiderivative() const {
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
  }
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::reflected() const {
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    BigInt binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      const Rational term = coeffs_[k] * Rational(binom);
      if (j % 2 == 0) out[j] += term;
      else out[j] -= term;
      binom = binom * static_cast<unsigned long>(k - j) / static_cast<unsigned long>(j + 1);
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

ExpPoly RationalPoly::to_exppoly() const {
  ExpPoly p;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    p.add(Complex(coeffs_[k].get_d(), 0.0), static_cast<int>(k), Complex(0.0, 0.0));
  }
  return p;
}

}  // namespace descent::expfun
