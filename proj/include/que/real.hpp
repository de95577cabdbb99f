#ifndef QUE_REAL_HPP
#define QUE_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace que {

// Arbitrary-precision real backed by mpfr_t.  Every value carries its own
// precision in bits; binary operations produce results at the larger of the
// two operand precisions, rounding to nearest.
class Real {
public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;

  Real() { mpfr_init2(v_, kDefaultPrec); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const mpz_class& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
  Real(const mpq_class& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
  Real(const std::string& s, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Decimal string with the given number of significant digits, round-trip stable.
  std::string str(int digits = 40) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  static Real pi(mpfr_prec_t prec);
  static Real log2(mpfr_prec_t prec);
  static Real euler(mpfr_prec_t prec);
  // 2^e at the given precision (exact for any e in range).
  static Real pow2(long e, mpfr_prec_t prec);

private:
  mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real pow(const Real& a, const Real& b);
Real pow(const Real& a, long b);
Real sin(const Real& a);
Real cos(const Real& a);
Real atan2(const Real& y, const Real& x);
Real floor(const Real& a);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
// mpfr's real zeta, used for tail-bound majorants.
Real zeta(const Real& s);
void sin_cos(Real& s, Real& c, const Real& a);
// Round to a (usually different) precision.
Real to_prec(const Real& a, mpfr_prec_t prec);

}  // namespace que

#endif
