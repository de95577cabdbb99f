#ifndef QUE_LOCALFACTOR_HPP
#define QUE_LOCALFACTOR_HPP

#include <vector>

#include "que/complexnum.hpp"
#include "que/eigenform.hpp"

namespace que {

// Truncated power series in u = p^{-s} with complex coefficients.  Local
// Euler factors always have c_0 = 1.  The inverse roots of the factor's
// denominator polynomial are kept alongside so power sums a(p^k) come from
// the roots instead of root-finding.
struct LocalFactorSeries {
  long p = 0;
  long order = 0;  // highest retained u-power
  std::vector<Complex> c;  // c[j] = coefficient of u^j, j = 0..order
  std::vector<Complex> inverse_roots;
  mpfr_prec_t precision = 128;

  const Complex& coeff(long j) const { return c.at(static_cast<std::size_t>(j)); }
};

// Series helpers (exact truncated-series operations at the parts' precision).
std::vector<Complex> series_mul(const std::vector<Complex>& a, const std::vector<Complex>& b, long order);
// reciprocal of a series with invertible constant term
std::vector<Complex> series_reciprocal(const std::vector<Complex>& a, long order);
// substitute u -> u^2 (pads odd coefficients with zeros)
std::vector<Complex> series_in_u2(const std::vector<Complex>& a, long order);
// prod (1 - r_i u) expanded to the given order
std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots, long order, mpfr_prec_t prec);

// prod_{l=+-1} (1 - alpha^l u)^{-1}; coefficient of u^j is lambda_f(p^j).
LocalFactorSeries local_standard(const Eigenform& f, long p, long order, mpfr_prec_t precision);

// prod_{l=-1,0,1} (1 - alpha^{2l} u)^{-1}.
LocalFactorSeries local_adjoint(const Eigenform& f, long p, long order, mpfr_prec_t precision);

// 4-fold Rankin-Selberg product over Satake pairs.
LocalFactorSeries local_rankin(const Eigenform& f, const Eigenform& g, long p, long order,
                               mpfr_prec_t precision);

// 6-fold product prod_{l=-1,0,1} prod_{l'=+-1} (1 - alpha^{2l} beta^{l'} u)^{-1}
// with beta the |beta|>=1 root of x^2 - lam_phi x + 1.  lam_phi must satisfy
// |lam_phi| <= p^{7/64} + p^{-7/64}.
LocalFactorSeries local_rankin_ad_std(const Eigenform& f, const Real& lam_phi, long p, long order,
                                      mpfr_prec_t precision);

// zeta local factor (single inverse root 1)
LocalFactorSeries local_zeta(long p, long order, mpfr_prec_t precision);

}  // namespace que

#endif
