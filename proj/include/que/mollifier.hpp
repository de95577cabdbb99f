#ifndef QUE_MOLLIFIER_HPP
#define QUE_MOLLIFIER_HPP

#include "que/lfunction.hpp"

namespace que {

// Parameters of the alternating binomial combination
// O_l(x,w;tau) = sum_{j<=l} (-1)^{|j|} binom(l,j) w^{sum j_r(1+i tau_r)} S(x / w^{|j|}).
struct MollifierConfig {
  int R = 1;
  std::vector<long> l;   // length R, entries >= 0
  Real w;                // > 1
  std::vector<Real> tau; // length R
  Real X;                // anchor for the successive-maxima box
};

// R = floor(72 m^2 / eps^2) + 1 (documented formula; desk-scale runs pick R directly).
long paper_r_parameter(int m, double eps);

// S(x) = sum_{n<=x} lambda(n), weighted variant multiplies by log n.
Complex partial_sum(const DirichletCoeffTable& table, const Real& x, bool weighted);

Complex mollified_sum(const DirichletCoeffTable& table, const Real& x, const MollifierConfig& cfg,
                      bool weighted);

// L(s) (truncated) times prod_j (1 - w^{1 + i tau_j - s})^{l_j}.
Complex mollified_lfunction(const LFunctionData& data, const Complex& s, const MollifierConfig& cfg,
                            long truncation);

struct MaximaResult {
  std::vector<Real> tau;
  bool separation_ok = false;
  Real separation;       // (log X)^{-1/R}
  std::vector<Real> values;  // |L(1 + 1/log X + i tau_j)|
};

// Greedy successive maxima of |L(1 + 1/log X + it)| on [-T, T] with
// T = exp((log log X)^2), removing an interval of radius (log X)^{-1/R}
// around each chosen point.
MaximaResult successive_maxima(const LFunctionData& data, const Real& x_anchor, int r_count,
                               mpfr_prec_t precision, long truncation);

}  // namespace que

#endif
