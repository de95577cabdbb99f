#include "que/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace que {

namespace {
mpfr_prec_t join(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

std::string Real::str(int digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRe", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Real& Real::operator+=(const Real& o) {
  if (o.prec() > prec()) { Real r = *this + o; return *this = std::move(r); }
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (o.prec() > prec()) { Real r = *this - o; return *this = std::move(r); }
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (o.prec() > prec()) { Real r = *this * o; return *this = std::move(r); }
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (o.prec() > prec()) { Real r = *this / o; return *this = std::move(r); }
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
Real Real::log2(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}
Real Real::euler(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}
Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Real log(const Real& a) {
  Real r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Real exp(const Real& a) {
  Real r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& a, long b) {
  Real r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real sin(const Real& a) {
  Real r(a.prec());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Real cos(const Real& a) {
  Real r(a.prec());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real floor(const Real& a) {
  Real r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}
Real min(const Real& a, const Real& b) { return (a <= b) ? a : b; }
Real max(const Real& a, const Real& b) { return (a >= b) ? a : b; }
Real zeta(const Real& s) {
  Real r(s.prec());
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}
void sin_cos(Real& s, Real& c, const Real& a) {
  mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}
Real to_prec(const Real& a, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

}  // namespace que
