#pragma once

#include "prsd/poly.hpp"

namespace prsd {

/// Quotient of polynomials. Normalization divides out the rational content
/// of both parts and makes the leading denominator coefficient positive;
/// full multivariate gcd reduction is intentionally not attempted, and
/// equality is decided by exact cross-multiplication instead.
class RatFun {
 public:
  RatFun() : num_(0), den_(1) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("RatFun with zero denominator");
    normalize();
  }
  explicit RatFun(Poly num) : num_(std::move(num)), den_(1) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator-() const { return RatFun(-num_, den_); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.num_.is_zero()) throw ZeroDenominator("division by zero RatFun");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }

  /// Exact equality by cross-multiplication.
  bool operator==(const RatFun& o) const {
    return num_ * o.den_ == o.num_ * den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  template <class Lookup>
  Rat evaluate(Lookup&& lookup) const {
    Rat d = den_.evaluate(lookup);
    if (d.is_zero()) throw ZeroDenominator();
    return num_.evaluate(lookup) / d;
  }

  std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    // Rational content of the denominator (gcd of numerators over lcm of
    // denominators of its coefficients).
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : den_.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    Rat scale = Rat(mpq_class(num_gcd) / mpq_class(den_lcm)).inverse();
    if ((den_.terms().rbegin()->second * scale).sign() < 0) scale = -scale;
    num_ = scale * num_;
    den_ = scale * den_;
  }

  Poly num_, den_;
};

}  // namespace prsd
