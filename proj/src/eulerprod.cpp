#include "que/eulerprod.hpp"

#include <stdexcept>

#include "que/parallel.hpp"
#include "que/primes.hpp"

namespace que {

namespace {

// blockwise product over a prime list, reduced in fixed block order
Real ordered_product(const std::vector<std::int64_t>& ps, mpfr_prec_t work,
                     const std::function<Real(std::int64_t)>& factor) {
  const std::size_t kBlock = 4096;
  std::size_t nblocks = (ps.size() + kBlock - 1) / kBlock;
  std::vector<Real> partial(nblocks, Real(1L, work));
  parallel_for(nblocks, [&](std::size_t b) {
    Real acc(1L, work);
    std::size_t lo = b * kBlock;
    std::size_t hi = std::min(ps.size(), lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) acc *= factor(ps[i]);
    partial[b] = acc;
  });
  Real out(1L, work);
  for (std::size_t b = 0; b < nblocks; ++b) out *= partial[b];
  return out;
}

}  // namespace

MertensResult mertens_product(const Real& delta, double x, mpfr_prec_t precision) {
  mpfr_prec_t work = precision + 32;
  Real d = to_prec(delta, work);
  if (d.is_negative()) throw std::invalid_argument("delta must be nonnegative");
  if (d >= Real(2L, work)) throw std::invalid_argument("factor at p=2 would not be positive");
  if (x < 3) throw std::invalid_argument("x must be at least 3");
  auto ps = primes_up_to(static_cast<std::int64_t>(x));
  Real prod = ordered_product(ps, work, [&](std::int64_t p) {
    return Real(1L, work) - d / Real(static_cast<long>(p), work);
  });
  MertensResult out{to_prec(prod, precision), Real(precision), static_cast<long>(ps.size())};
  Real lx = log(Real(x, work));
  out.normalized = to_prec(prod * pow(lx, d), precision);
  return out;
}

CorrelationResult correlation_products_from(const LambdaProvider& lam_f,
                                            const LambdaProvider& lam_g, double x,
                                            mpfr_prec_t precision) {
  mpfr_prec_t work = precision + 32;
  auto ps = primes_up_to(static_cast<std::int64_t>(x));

  Real sound = ordered_product(ps, work, [&](std::int64_t p) {
    Real lf = lam_f(p);
    Real lg = lam_g(p);
    Real num = lf * lf + lg * lg - Real(1L, work);
    return Real(1L, work) - num / Real(2 * static_cast<long>(p), work);
  });
  Real holo = ordered_product(ps, work, [&](std::int64_t p) {
    Real lf = abs(lam_f(p)) - Real(1L, work);
    Real lg = abs(lam_g(p)) - Real(1L, work);
    Real num = lf * lf + lg * lg;
    return Real(1L, work) - num / Real(4 * static_cast<long>(p), work);
  });

  CorrelationResult out;
  out.prime_count = static_cast<long>(ps.size());
  out.sound_product = to_prec(sound, precision);
  out.holo_product = to_prec(holo, precision);
  out.combined_min = to_prec(min(sound, holo), precision);
  Real alpha = Real(2L, work) / sqrt(Real(3L, work)) - Real(1L, work);
  out.interpolated = to_prec(pow(sound, alpha) * pow(holo, Real(1L, work) - alpha), precision);
  return out;
}

CorrelationResult correlation_products(const Eigenform& f, const Eigenform& g, double x,
                                       mpfr_prec_t precision) {
  long xl = static_cast<long>(x);
  if (xl > f.truncation() || xl > g.truncation()) throw std::invalid_argument("table too short");
  mpfr_prec_t work = precision + 32;
  return correlation_products_from(
      [&f, work](long p) { return eigen_lambda(f, p, work); },
      [&g, work](long p) { return eigen_lambda(g, p, work); }, x, precision);
}

}  // namespace que
