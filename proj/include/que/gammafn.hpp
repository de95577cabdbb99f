#ifndef QUE_GAMMAFN_HPP
#define QUE_GAMMAFN_HPP

#include <gmpxx.h>

#include "que/complexnum.hpp"

namespace que {

// Exact Bernoulli number B_n (B_1 = -1/2 convention).  Cached, thread-safe.
mpq_class bernoulli(unsigned n);

// Principal-branch log Gamma(z), Stirling series with recurrence shift.
// Accurate to roughly 2^-prec for Re(z) > 0; the reflection formula is used
// for Re(z) < 1/2 away from the poles.
Complex log_gamma(const Complex& z, mpfr_prec_t prec);

Real log_gamma(const Real& x, mpfr_prec_t prec);

}  // namespace que

#endif
