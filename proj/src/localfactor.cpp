#include "que/localfactor.hpp"

#include <stdexcept>

namespace que {

std::vector<Complex> series_mul(const std::vector<Complex>& a, const std::vector<Complex>& b, long order) {
  mpfr_prec_t prec = 64;
  if (!a.empty()) prec = std::max(prec, a[0].prec());
  if (!b.empty()) prec = std::max(prec, b[0].prec());
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(prec));
  for (long i = 0; i < static_cast<long>(a.size()) && i <= order; ++i) {
    for (long j = 0; j < static_cast<long>(b.size()) && i + j <= order; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Complex> series_reciprocal(const std::vector<Complex>& a, long order) {
  if (a.empty() || a[0].is_zero()) throw std::invalid_argument("series reciprocal needs invertible constant term");
  mpfr_prec_t prec = a[0].prec();
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(prec));
  Complex inv0 = Complex(1L, prec) / a[0];
  out[0] = inv0;
  for (long j = 1; j <= order; ++j) {
    Complex acc(prec);
    for (long i = 1; i <= j && i < static_cast<long>(a.size()); ++i) {
      acc += a[i] * out[j - i];
    }
    out[j] = -(acc * inv0);
  }
  return out;
}

std::vector<Complex> series_in_u2(const std::vector<Complex>& a, long order) {
  mpfr_prec_t prec = a.empty() ? 64 : a[0].prec();
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(prec));
  for (long j = 0; 2 * j <= order && j < static_cast<long>(a.size()); ++j) {
    out[2 * j] = a[j];
  }
  return out;
}

std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots, long order, mpfr_prec_t prec) {
  std::vector<Complex> out(1, Complex(1L, prec));
  for (const Complex& r : roots) {
    std::vector<Complex> factor{Complex(1L, prec), -to_prec(r, prec)};
    out = series_mul(out, factor, order);
  }
  if (static_cast<long>(out.size()) < order + 1) out.resize(static_cast<std::size_t>(order) + 1, Complex(prec));
  return out;
}

namespace {

LocalFactorSeries from_roots(long p, const std::vector<Complex>& roots, long order, mpfr_prec_t precision) {
  mpfr_prec_t work = precision + 64;
  std::vector<Complex> rw;
  rw.reserve(roots.size());
  for (const Complex& r : roots) rw.push_back(to_prec(r, work));
  auto poly = poly_from_roots(rw, order, work);
  auto series = series_reciprocal(poly, order);
  LocalFactorSeries out;
  out.p = p;
  out.order = order;
  out.precision = precision;
  out.c.reserve(static_cast<std::size_t>(order) + 1);
  for (auto& x : series) out.c.push_back(to_prec(x, precision));
  out.inverse_roots = roots;
  return out;
}

}  // namespace

LocalFactorSeries local_standard(const Eigenform& f, long p, long order, mpfr_prec_t precision) {
  SatakeLocalData s = satake(f, p, precision + 64);
  std::vector<Complex> roots{s.alpha, s.alpha_inv()};
  return from_roots(p, roots, order, precision);
}

LocalFactorSeries local_adjoint(const Eigenform& f, long p, long order, mpfr_prec_t precision) {
  SatakeLocalData s = satake(f, p, precision + 64);
  Complex a2 = s.alpha * s.alpha;
  std::vector<Complex> roots{a2, Complex(1L, precision + 64), conj(a2)};
  return from_roots(p, roots, order, precision);
}

LocalFactorSeries local_rankin(const Eigenform& f, const Eigenform& g, long p, long order,
                               mpfr_prec_t precision) {
  SatakeLocalData sf = satake(f, p, precision + 64);
  SatakeLocalData sg = satake(g, p, precision + 64);
  std::vector<Complex> roots{sf.alpha * sg.alpha, sf.alpha * sg.alpha_inv(),
                             sf.alpha_inv() * sg.alpha, sf.alpha_inv() * sg.alpha_inv()};
  return from_roots(p, roots, order, precision);
}

LocalFactorSeries local_rankin_ad_std(const Eigenform& f, const Real& lam_phi, long p, long order,
                                      mpfr_prec_t precision) {
  mpfr_prec_t work = precision + 64;
  Real pr(p, work);
  Real theta_exp = pow(pr, Real(7.0 / 64.0, work)) ;
  Real bound = theta_exp + Real(1L, work) / theta_exp;
  if (abs(lam_phi) > bound) throw std::invalid_argument("violates theta=7/64 bound");
  SatakeLocalData sf = satake(f, p, work);
  Complex a2 = sf.alpha * sf.alpha;
  Complex a2inv = conj(a2);
  Complex beta = satake_root(to_prec(lam_phi, work), work);
  Complex beta_inv = Complex(1L, work) / beta;
  std::vector<Complex> roots;
  for (const Complex& a : {a2inv, Complex(1L, work), a2}) {
    roots.push_back(a * beta);
    roots.push_back(a * beta_inv);
  }
  return from_roots(p, roots, order, precision);
}

LocalFactorSeries local_zeta(long p, long order, mpfr_prec_t precision) {
  std::vector<Complex> roots{Complex(1L, precision + 64)};
  return from_roots(p, roots, order, precision);
}

}  // namespace que
