#include "que/complexnum.hpp"

namespace que {

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re_ + b.re_, a.im_ + b.im_);
}
Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re_ - b.re_, a.im_ - b.im_);
}
Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                 (a.im_ * b.re_ - a.re_ * b.im_) / d);
}
Complex operator*(const Complex& a, const Real& b) {
  return Complex(a.re_ * b, a.im_ * b);
}
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, const Real& b) {
  return Complex(a.re_ / b, a.im_ / b);
}
Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }

Complex conj(const Complex& a) { return Complex(a.re(), -a.im()); }

Real abs(const Complex& a) {
  Real r(a.prec());
  mpfr_hypot(r.raw(), a.re().raw(), a.im().raw(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& a) { return a.re() * a.re() + a.im() * a.im(); }

Real arg(const Complex& a) { return atan2(a.im(), a.re()); }

Complex sqrt(const Complex& a) {
  // principal root, branch cut on the negative real axis
  Real r = abs(a);
  if (r.is_zero()) return Complex(a.prec());
  Real half(0.5, a.prec());
  Real m = sqrt(r);
  Real theta = arg(a) * half;
  Real s(a.prec()), c(a.prec());
  sin_cos(s, c, theta);
  return Complex(m * c, m * s);
}

Complex exp(const Complex& a) {
  Real m = exp(a.re());
  Real s(a.prec()), c(a.prec());
  sin_cos(s, c, a.im());
  return Complex(m * c, m * s);
}

Complex log(const Complex& a) { return Complex(log(abs(a)), arg(a)); }

Complex unit_phase(const Real& theta) {
  Real s(theta.prec()), c(theta.prec());
  sin_cos(s, c, theta);
  return Complex(c, s);
}

Complex pow_int_neg(long n, const Complex& s) {
  Real ln = log(Real(n, s.prec()));
  return exp(Complex(-s.re() * ln, -s.im() * ln));
}

Complex pow_real(const Real& x, const Complex& s) {
  Real lx = log(x);
  return exp(Complex(s.re() * lx, s.im() * lx));
}

Complex to_prec(const Complex& a, mpfr_prec_t prec) {
  return Complex(to_prec(a.re(), prec), to_prec(a.im(), prec));
}

}  // namespace que
