#ifndef QUE_ICHINO_HPP
#define QUE_ICHINO_HPP

#include <gmpxx.h>

#include "que/real.hpp"

namespace que {

enum class IchinoCase { kUnramified, kRamifiedEqual, kRamifiedDistinct };

// Local data of the normalized triple-product integral: n_p = ord_p(q),
// m_p = ord_p(q / sqrt(Q)), theta the Ramanujan bound toward the Maass slot.
struct IchinoInput {
  long p = 2;
  long n_p = 0;
  long m_p = 0;
  IchinoCase kind = IchinoCase::kUnramified;
  double theta = 7.0 / 64.0;
};

struct IchinoValue {
  bool is_bound = false;   // exact value when false, upper bound when true
  mpq_class exact;         // set when !is_bound
  Real bound;              // set when is_bound
};

// Unramified: exactly 1.  Ramified, distinct forms, squarefree level: exactly
// 1/p.  Ramified, equal forms: the bound 10^5 p^{-n_p} tau(p^{m_p})^2 p^{2 theta m_p}.
IchinoValue ichino_local(const IchinoInput& input, mpfr_prec_t precision);

}  // namespace que

#endif
