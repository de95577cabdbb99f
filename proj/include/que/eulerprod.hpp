#ifndef QUE_EULERPROD_HPP
#define QUE_EULERPROD_HPP

#include <functional>

#include "que/eigenform.hpp"

namespace que {

struct MertensResult {
  Real product;      // prod_{p<=x} (1 - delta/p)
  Real normalized;   // product * (log x)^delta
  long prime_count = 0;
};

// Exact sieve product; requires 0 <= delta < 2 (delta/2 < 1 at p = 2).
MertensResult mertens_product(const Real& delta, double x, mpfr_prec_t precision);

struct CorrelationResult {
  Real sound_product;   // prod (1 - (lf^2 + lg^2 - 1) / 2p)
  Real holo_product;    // prod (1 - ((|lf|-1)^2 + (|lg|-1)^2) / 4p)
  Real combined_min;    // min of the two
  Real interpolated;    // sound^alpha * holo^(1-alpha), alpha = 2/sqrt(3)-1
  long prime_count = 0;
};

CorrelationResult correlation_products(const Eigenform& f, const Eigenform& g, double x,
                                       mpfr_prec_t precision);

// Same products over arbitrary eigenvalue providers (lam(p) per prime).
using LambdaProvider = std::function<Real(long p)>;
CorrelationResult correlation_products_from(const LambdaProvider& lam_f,
                                            const LambdaProvider& lam_g, double x,
                                            mpfr_prec_t precision);

}  // namespace que

#endif
