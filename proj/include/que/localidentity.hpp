#ifndef QUE_LOCALIDENTITY_HPP
#define QUE_LOCALIDENTITY_HPP

#include <cstdint>
#include <vector>

#include "que/localfactor.hpp"

namespace que {

// Satake data for one prime: alpha on the unit circle (holomorphic side),
// beta in the annulus p^{-7/64} <= |beta| <= p^{7/64} (Maass side).
struct LocalParams {
  long p = 19;
  Complex alpha;
  Complex beta;
  mpfr_prec_t precision = 128;
};

bool admissible(const LocalParams& params);

struct IdentityReport {
  long order = 0;
  Real max_residual;
  long witness = -1;  // u-power of the worst residual
  bool pass = false;
};

// H_p(s) = L_p(s,phi) / ((1 + lam_phi(p) u - lam_f(p^2) u^2)
//          L_p(2s, Ad f) L_p(2s, Ad phi)) as a truncated series in u;
// the "2s" parts enter as series in u^2.  Throws "denominator root inside
// disk" when the quadratic has a zero of modulus <= p^{-sigma_min}.
LocalFactorSeries hp_series(const LocalParams& params, long order, double sigma_min = 0.4);

// L_p(s, Ad f x phi) = [L_p(s,phi) / (1 + lam_phi u - lam_f(p^2) u^2)]
//                      * sum_j lam_f(p^{2j}) lam_phi(p^j) u^j,
// both sides expanded independently to the given order.
IdentityReport verify_key_identity(const LocalParams& params, long order, double sigma_min = 0.4);

// L_p(s, Ad f x phi) = H_p(s) L_p(2s, Ad f) L_p(2s, Ad phi)
//                      * sum_j lam_f(p^{2j}) lam_phi(p^j) u^j.
IdentityReport verify_thm1_identity(const LocalParams& params, long order, double sigma_min = 0.4);

struct ScanGrid {
  int n_sigma = 24;
  int n_theta = 48;
  int n_lam_phi = 33;
  int n_lam_f2 = 17;
  double sigma_min = 0.4;
  double sigma_max = 3.0;
};

struct ScanResult {
  Real minimum;
  long argmin_p = 0;
  double argmin_sigma = 0;
  double argmin_theta = 0;    // phase of p^{-it}
  double argmin_lam_phi = 0;
  double argmin_lam_f2 = 0;
  ScanGrid grid;
  // values for sigma > sigma_max are dominated by the sigma_max row
  bool sigma_tail_dominated = true;
};

// Grid scan plus golden-section coordinate refinement of
// |1 + lam_phi p^{-s} - lam_f(p^2) p^{-2s}| over p in p_set,
// sigma in [sigma_min, sigma_max], all phases, lam_phi in the admissible
// interval, lam_f(p^2) in [-1, 3].  Deterministic for a fixed grid.
ScanResult denominator_min_scan(const std::vector<long>& p_set, const ScanGrid& grid,
                                mpfr_prec_t precision);

// Reproducible admissible sample: uniform phase for alpha, log-uniform
// modulus and uniform phase for beta.
LocalParams sample_admissible(long p, std::uint64_t& state, mpfr_prec_t precision);

// xorshift-style generator state step, shared by all seeded fuzzing here.
std::uint64_t split_mix(std::uint64_t& state);

}  // namespace que

#endif
