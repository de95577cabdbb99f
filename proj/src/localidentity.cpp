#include "que/localidentity.hpp"

#include <cmath>
#include <stdexcept>

#include "que/parallel.hpp"

namespace que {

namespace {

Complex lam_phi_c(const LocalParams& pr, mpfr_prec_t work) {
  Complex b = to_prec(pr.beta, work);
  return b + Complex(1L, work) / b;
}

Complex lam_f2_c(const LocalParams& pr, mpfr_prec_t work) {
  Complex a = to_prec(pr.alpha, work);
  Complex a2 = a * a;
  return a2 + Complex(1L, work) + Complex(1L, work) / a2;
}

// lambda(p^j) for a GL2 pair (gamma, 1/gamma): lam(0)=1, lam(1)=gamma+1/gamma,
// lam(j+1) = lam(1) lam(j) - lam(j-1).
std::vector<Complex> gl2_lambda_seq(const Complex& gamma, long jmax, mpfr_prec_t work) {
  std::vector<Complex> lam(static_cast<std::size_t>(jmax) + 1, Complex(work));
  lam[0] = Complex(1L, work);
  if (jmax >= 1) lam[1] = gamma + Complex(1L, work) / gamma;
  for (long j = 2; j <= jmax; ++j) lam[j] = lam[1] * lam[j - 1] - lam[j - 2];
  return lam;
}

// the quadratic 1 + lam_phi u - lam_f2 u^2; roots checked against the
// working disk |u| <= p^{-sigma_min}
void check_denominator(const Complex& lam_phi, const Complex& lam_f2, long p, double sigma_min,
                       mpfr_prec_t work) {
  Real radius = pow(Real(p, work), Real(-sigma_min, work));
  Complex b = lam_phi;
  Complex a = -lam_f2;
  if (abs(a).to_double() < 1e-300) {
    if (abs(b).to_double() < 1e-300) return;  // constant 1, no roots
    Complex root = -Complex(1L, work) / b;
    if (abs(root) <= radius) throw std::runtime_error("denominator root inside disk");
    return;
  }
  Complex disc = sqrt(b * b - Real(4L, work) * a);
  Complex two_a = Real(2L, work) * a;
  Complex r1 = (-b + disc) / two_a;
  Complex r2 = (-b - disc) / two_a;
  if (abs(r1) <= radius || abs(r2) <= radius) {
    throw std::runtime_error("denominator root inside disk");
  }
}

std::vector<Complex> adjoint_poly(const Complex& gamma2, mpfr_prec_t work, long order) {
  std::vector<Complex> roots{gamma2, Complex(1L, work), Complex(1L, work) / gamma2};
  return poly_from_roots(roots, order, work);
}

struct Pieces {
  mpfr_prec_t work;
  Complex lam_phi, lam_f2;
  std::vector<Complex> lphi_series;   // L_p(s, phi)
  std::vector<Complex> denom;         // 1 + lam_phi u - lam_f2 u^2
  std::vector<Complex> sum_series;    // sum_j lam_f(p^{2j}) lam_phi(p^j) u^j
  std::vector<Complex> six_fold;      // L_p(s, Ad f x phi)
  std::vector<Complex> adf_poly_u2;   // prod (1 - alpha^{2l} u^2)
  std::vector<Complex> adphi_poly_u2; // prod (1 - beta^{2l'} u^2)
};

Pieces build_pieces(const LocalParams& pr, long order, double sigma_min) {
  Pieces pc;
  mpfr_prec_t work = pr.precision + 64;
  pc.work = work;
  Complex alpha = to_prec(pr.alpha, work);
  Complex beta = to_prec(pr.beta, work);
  pc.lam_phi = lam_phi_c(pr, work);
  pc.lam_f2 = lam_f2_c(pr, work);
  check_denominator(pc.lam_phi, pc.lam_f2, pr.p, sigma_min, work);

  std::vector<Complex> phi_roots{beta, Complex(1L, work) / beta};
  pc.lphi_series = series_reciprocal(poly_from_roots(phi_roots, order, work), order);

  pc.denom.assign(3, Complex(work));
  pc.denom[0] = Complex(1L, work);
  pc.denom[1] = pc.lam_phi;
  pc.denom[2] = -pc.lam_f2;

  auto lam_f_seq = gl2_lambda_seq(alpha, 2 * order, work);
  auto lam_phi_seq = gl2_lambda_seq(beta, order, work);
  pc.sum_series.assign(static_cast<std::size_t>(order) + 1, Complex(work));
  for (long j = 0; j <= order; ++j) pc.sum_series[j] = lam_f_seq[2 * j] * lam_phi_seq[j];

  Complex a2 = alpha * alpha;
  Complex b2 = beta * beta;
  std::vector<Complex> six_roots;
  for (const Complex& x : {a2, Complex(1L, work), Complex(1L, work) / a2}) {
    six_roots.push_back(x * beta);
    six_roots.push_back(x / beta);
  }
  pc.six_fold = series_reciprocal(poly_from_roots(six_roots, order, work), order);

  pc.adf_poly_u2 = series_in_u2(adjoint_poly(a2, work, order), order);
  pc.adphi_poly_u2 = series_in_u2(adjoint_poly(b2, work, order), order);
  return pc;
}

IdentityReport report_from_diff(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs,
                                long order, mpfr_prec_t precision) {
  IdentityReport rep;
  rep.order = order;
  rep.max_residual = Real(0.0, precision + 64);
  for (long j = 0; j <= order; ++j) {
    Real r = abs(lhs[j] - rhs[j]);
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.witness = j;
    }
  }
  rep.pass = rep.max_residual < Real::pow2(-static_cast<long>(precision) + 16, precision + 64);
  return rep;
}

double unit_double(std::uint64_t& state) {
  return static_cast<double>(split_mix(state) >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t split_mix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool admissible(const LocalParams& params) {
  mpfr_prec_t work = params.precision + 32;
  Real tol = Real::pow2(-static_cast<long>(params.precision) + 10, work);
  Real one(1L, work);
  if (abs(abs(to_prec(params.alpha, work)) - one) > tol) return false;
  Real bmod = abs(to_prec(params.beta, work));
  if (bmod.is_zero()) return false;
  Real big = max(bmod, one / bmod);
  Real cap = pow(Real(params.p, work), Real(7.0 / 64.0, work));
  return big <= cap * (one + tol);
}

LocalFactorSeries hp_series(const LocalParams& params, long order, double sigma_min) {
  Pieces pc = build_pieces(params, order, sigma_min);
  // H_p = L_p(s,phi) * (1/denominator) * prod(1 - a^{2l} u^2) * prod(1 - b^{2l'} u^2)
  auto h = series_mul(pc.lphi_series, series_reciprocal(pc.denom, order), order);
  h = series_mul(h, pc.adf_poly_u2, order);
  h = series_mul(h, pc.adphi_poly_u2, order);
  LocalFactorSeries out;
  out.p = params.p;
  out.order = order;
  out.precision = params.precision;
  for (auto& x : h) out.c.push_back(to_prec(x, params.precision));
  return out;
}

IdentityReport verify_key_identity(const LocalParams& params, long order, double sigma_min) {
  Pieces pc = build_pieces(params, order, sigma_min);
  auto rhs = series_mul(pc.lphi_series, series_reciprocal(pc.denom, order), order);
  rhs = series_mul(rhs, pc.sum_series, order);
  return report_from_diff(pc.six_fold, rhs, order, params.precision);
}

IdentityReport verify_thm1_identity(const LocalParams& params, long order, double sigma_min) {
  Pieces pc = build_pieces(params, order, sigma_min);
  auto h = series_mul(pc.lphi_series, series_reciprocal(pc.denom, order), order);
  h = series_mul(h, pc.adf_poly_u2, order);
  h = series_mul(h, pc.adphi_poly_u2, order);
  auto rhs = series_mul(h, series_reciprocal(pc.adf_poly_u2, order), order);
  rhs = series_mul(rhs, series_reciprocal(pc.adphi_poly_u2, order), order);
  rhs = series_mul(rhs, pc.sum_series, order);
  return report_from_diff(pc.six_fold, rhs, order, params.precision);
}

namespace {

double denom_abs(double p, double sigma, double theta, double lam_phi, double lam_f2) {
  double x = std::pow(p, -sigma);
  double x2 = x * x;
  double re = 1.0 + lam_phi * x * std::cos(theta) - lam_f2 * x2 * std::cos(2 * theta);
  double im = lam_phi * x * std::sin(theta) - lam_f2 * x2 * std::sin(2 * theta);
  return std::sqrt(re * re + im * im);
}

}  // namespace

ScanResult denominator_min_scan(const std::vector<long>& p_set, const ScanGrid& grid,
                                mpfr_prec_t precision) {
  if (p_set.empty() || grid.n_sigma < 2 || grid.n_theta < 2 || grid.n_lam_phi < 2 ||
      grid.n_lam_f2 < 2) {
    throw std::invalid_argument("empty grid");
  }
  struct Candidate {
    double value = 1e300;
    double sigma = 0, theta = 0, lam_phi = 0, lam_f2 = 0;
    long p = 0;
  };
  std::vector<Candidate> per_p(p_set.size());

  const double two_pi = 6.283185307179586476925286766559;
  parallel_for(p_set.size(), [&](std::size_t pi) {
    long p = p_set[pi];
    double lam_cap = std::pow(p, 7.0 / 64.0) + std::pow(p, -7.0 / 64.0);
    Candidate best;
    best.p = p;
    for (int is = 0; is < grid.n_sigma; ++is) {
      double sigma = grid.sigma_min + (grid.sigma_max - grid.sigma_min) * is / (grid.n_sigma - 1);
      for (int it = 0; it < grid.n_theta; ++it) {
        double theta = two_pi * it / grid.n_theta;
        for (int il = 0; il < grid.n_lam_phi; ++il) {
          double lam_phi = -lam_cap + 2 * lam_cap * il / (grid.n_lam_phi - 1);
          for (int jf = 0; jf < grid.n_lam_f2; ++jf) {
            double lam_f2 = -1.0 + 4.0 * jf / (grid.n_lam_f2 - 1);
            double v = denom_abs(p, sigma, theta, lam_phi, lam_f2);
            if (v < best.value) {
              best.value = v;
              best.sigma = sigma;
              best.theta = theta;
              best.lam_phi = lam_phi;
              best.lam_f2 = lam_f2;
            }
          }
        }
      }
    }
    // golden-section coordinate refinement around the incumbent
    auto refine = [&](double lo, double hi, double cur, auto eval) {
      const double gr = 0.6180339887498949;
      double a = std::max(lo, cur - (hi - lo) * 0.1);
      double b = std::min(hi, cur + (hi - lo) * 0.1);
      double c = b - gr * (b - a);
      double d = a + gr * (b - a);
      for (int iter = 0; iter < 120; ++iter) {
        if (eval(c) < eval(d)) b = d; else a = c;
        c = b - gr * (b - a);
        d = a + gr * (b - a);
      }
      return 0.5 * (a + b);
    };
    for (int round = 0; round < 4; ++round) {
      best.sigma = refine(grid.sigma_min, grid.sigma_max, best.sigma, [&](double s) {
        return denom_abs(p, s, best.theta, best.lam_phi, best.lam_f2);
      });
      best.theta = refine(0.0, two_pi, best.theta, [&](double t) {
        return denom_abs(p, best.sigma, t, best.lam_phi, best.lam_f2);
      });
      best.lam_phi = refine(-lam_cap, lam_cap, best.lam_phi, [&](double l) {
        return denom_abs(p, best.sigma, best.theta, l, best.lam_f2);
      });
      best.lam_f2 = refine(-1.0, 3.0, best.lam_f2, [&](double l) {
        return denom_abs(p, best.sigma, best.theta, best.lam_phi, l);
      });
      best.value = denom_abs(p, best.sigma, best.theta, best.lam_phi, best.lam_f2);
    }
    per_p[pi] = best;
  });

  Candidate global;
  for (const auto& c : per_p) {
    if (c.value < global.value) global = c;
  }

  // re-evaluate the refined argmin at full precision
  mpfr_prec_t work = precision + 32;
  Real pr(global.p, work);
  Real x = pow(pr, Real(-global.sigma, work));
  Real theta(global.theta, work);
  Real s1(work), c1(work), s2(work), c2(work);
  sin_cos(s1, c1, theta);
  sin_cos(s2, c2, theta + theta);
  Real lam_phi(global.lam_phi, work), lam_f2(global.lam_f2, work);
  Real re = Real(1L, work) + lam_phi * x * c1 - lam_f2 * x * x * c2;
  Real im = lam_phi * x * s1 - lam_f2 * x * x * s2;
  ScanResult out;
  out.minimum = to_prec(sqrt(re * re + im * im), precision);
  out.argmin_p = global.p;
  out.argmin_sigma = global.sigma;
  out.argmin_theta = global.theta;
  out.argmin_lam_phi = global.lam_phi;
  out.argmin_lam_f2 = global.lam_f2;
  out.grid = grid;
  return out;
}

LocalParams sample_admissible(long p, std::uint64_t& state, mpfr_prec_t precision) {
  mpfr_prec_t work = precision + 32;
  double u1 = unit_double(state);
  double u2 = unit_double(state);
  double u3 = unit_double(state);
  Real two_pi = Real(2L, work) * Real::pi(work);
  LocalParams out;
  out.p = p;
  out.precision = precision;
  out.alpha = unit_phase(two_pi * Real(u1, work));
  Real log_mod = Real(7.0 / 64.0, work) * Real(2 * u2 - 1, work) * log(Real(p, work));
  Real mod = exp(log_mod);
  out.beta = Complex(mod) * unit_phase(two_pi * Real(u3, work));
  return out;
}

}  // namespace que
