#ifndef QUE_COMPLEXNUM_HPP
#define QUE_COMPLEXNUM_HPP

#include "que/real.hpp"

namespace que {

// Rectangular complex number on top of Real.  Precision follows the parts.
class Complex {
public:
  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}
  explicit Complex(const Real& re) : re_(re), im_(re.prec()) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& b);
  friend Complex operator*(const Real& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Real& b);
  friend Complex operator-(const Complex& a);

private:
  Real re_, im_;
};

Complex conj(const Complex& a);
Real abs(const Complex& a);
Real norm(const Complex& a);  // |a|^2
Real arg(const Complex& a);
Complex sqrt(const Complex& a);
Complex exp(const Complex& a);
Complex log(const Complex& a);  // principal branch
// exp(i*theta)
Complex unit_phase(const Real& theta);
// n^{-s} for integer n >= 1
Complex pow_int_neg(long n, const Complex& s);
// x^s for real x > 0
Complex pow_real(const Real& x, const Complex& s);
Complex to_prec(const Complex& a, mpfr_prec_t prec);

}  // namespace que

#endif
