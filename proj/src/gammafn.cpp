#include "que/gammafn.hpp"

#include <mutex>
#include <vector>

namespace que {

namespace {
std::mutex g_bern_mutex;
std::vector<mpq_class> g_bern;  // populated up to the largest index requested

void extend_bernoulli(unsigned n) {
  // sum_{j<=m} binom(m+1,j) B_j = 0 for m >= 1
  if (g_bern.empty()) {
    g_bern.emplace_back(1);
  }
  while (g_bern.size() <= n) {
    unsigned m = static_cast<unsigned>(g_bern.size());
    mpq_class acc(0);
    mpz_class binom(1);  // binom(m+1, j), built incrementally
    for (unsigned j = 0; j < m; ++j) {
      acc += g_bern[j] * mpq_class(binom);
      binom *= (m + 1 - j);
      binom /= (j + 1);
    }
    mpq_class b = -acc / mpq_class(binom);
    b.canonicalize();
    g_bern.push_back(b);
  }
}

// Stirling tail sum_{j>=1} B_{2j} / (2j(2j-1) w^{2j-1}); caller guarantees
// |w| is large enough for the terms to decay below 2^-work.
Complex stirling_tail(const Complex& w, mpfr_prec_t work) {
  Complex w2inv = Complex(1L, work) / (w * w);
  Complex wp = Complex(1L, work) / w;  // runs through w^{-(2j-1)}
  Complex acc(work);
  Real tol = Real::pow2(-static_cast<long>(work) - 8, work);
  for (unsigned j = 1; j < 4096; ++j) {
    mpq_class c = bernoulli(2 * j) / mpq_class(2 * j * (2 * j - 1));
    Complex term = wp * Real(c, work);
    acc += term;
    if (abs(term) < tol) break;
    wp *= w2inv;
  }
  return acc;
}

Complex log_gamma_right(const Complex& z, mpfr_prec_t prec) {
  mpfr_prec_t work = prec + 64;
  double z0 = 8.0 + 0.4 * static_cast<double>(work);
  Complex w = to_prec(z, work);
  Complex shift_log(work);
  while (abs(w).to_double() < z0) {
    shift_log += log(w);
    w += Complex(1L, work);
  }
  Real half(0.5, work);
  Complex res = (w - Complex(half)) * log(w) - w;
  res += Complex(log(Real(2L, work) * Real::pi(work)) * half);
  res += stirling_tail(w, work);
  res -= shift_log;
  return to_prec(res, prec);
}

}  // namespace

mpq_class bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(g_bern_mutex);
  extend_bernoulli(n);
  return g_bern[n];
}

Complex log_gamma(const Complex& z, mpfr_prec_t prec) {
  if (z.re().to_double() >= 0.5) return log_gamma_right(z, prec);
  // Reflection log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1-z); adequate
  // away from the real-axis poles, which the contours here never approach.
  mpfr_prec_t work = prec + 64;
  Complex zc = to_prec(z, work);
  Real pi = Real::pi(work);
  Complex piz = zc * Complex(pi);
  Real s(work), c(work);
  sin_cos(s, c, piz.re());
  Real sh(work), ch(work);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), piz.im().raw(), MPFR_RNDN);
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  Complex sinpiz(s * ch, c * sh);
  Complex res = log(Complex(pi) / sinpiz) - log_gamma_right(Complex(1L, work) - zc, work);
  return to_prec(res, prec);
}

Real log_gamma(const Real& x, mpfr_prec_t prec) {
  Real xc = to_prec(x, prec + 64);
  Real tmp(prec + 64);
  int sign = 0;
  mpfr_lgamma(tmp.raw(), &sign, xc.raw(), MPFR_RNDN);
  return to_prec(tmp, prec);
}

}  // namespace que
