#include "que/afe.hpp"

#include <cmath>
#include <stdexcept>

#include "que/gammafn.hpp"
#include "que/parallel.hpp"

namespace que {

namespace {

Complex kernel_value(const AfeConfig& cfg, const Complex& s, bool mirrored) {
  mpfr_prec_t work = s.prec();
  Complex z = mirrored ? -s : s;
  if (cfg.kernel == AfeKernel::kGaussian) {
    return exp(s * s);  // even, mirror = same
  }
  Complex lz = z * Complex(Real(cfg.perron_lambda, work));
  Complex num = exp(lz) - Complex(1L, work);
  Complex base = num / lz;
  Complex out(1L, work);
  for (int i = 0; i < cfg.perron_k; ++i) out *= base;
  return out;
}

struct NodeGrid {
  long count;
  Real t0;  // first node
  Real h;
};

NodeGrid make_grid(const AfeConfig& cfg, mpfr_prec_t work) {
  long half = static_cast<long>(cfg.half_width / cfg.step + 0.5);
  NodeGrid g{2 * half + 1, Real(0.0, work), Real(cfg.step, work)};
  g.t0 = -(g.h * Real(half, work));
  return g;
}

// completed-function integral (1/2pi) sum_j Lambda(1/2 + c + i t_j) k(+-s_j)/s_j h.
// The mirror integral of the functional equation reuses the same line values
// (all shipped kinds are self-dual) with the kernel reflected.
Complex contour_integral(const LFunctionData& data, const AfeConfig& cfg, bool mirrored,
                         mpfr_prec_t work, const std::vector<Complex>& lvals) {
  NodeGrid grid = make_grid(cfg, work);
  Real c(cfg.abscissa, work);
  Real half(0.5, work);

  std::vector<Complex> node_vals(static_cast<std::size_t>(grid.count), Complex(work));
  parallel_for(static_cast<std::size_t>(grid.count), [&](std::size_t j) {
    Real t = grid.t0 + grid.h * Real(static_cast<long>(j), work);
    Complex s(c, t);
    Complex shalf = Complex(half) + s;  // 1/2 + s
    Complex prefactor(1L, work);
    for (int r = 0; r < data.pole_order; ++r) {
      prefactor *= shalf * (Complex(1L, work) - shalf);
    }
    Complex lg = log_gamma_factor(data, shalf, work);
    Complex nag = pow_real(Real(data.conductor, work), shalf * Complex(half));
    Complex lambda_val = prefactor * nag * lvals[j] * exp(lg);
    node_vals[j] = lambda_val * kernel_value(cfg, s, mirrored) / s;
  });

  // trapezoid endpoints carry half weight; fixed-order tree reduction
  node_vals.front() = node_vals.front() * Real(0.5, work);
  node_vals.back() = node_vals.back() * Real(0.5, work);

  Real edge = max(abs(node_vals.front()), abs(node_vals.back()));
  if (edge.to_double() > cfg.target_accuracy) throw std::runtime_error("increase T_max");

  Complex total = tree_reduce(node_vals, Complex(work),
                              [](const Complex& a, const Complex& b) { return a + b; });
  Real two_pi = Real(2L, work) * Real::pi(work);
  return total * grid.h / two_pi;
}

}  // namespace

double afe_abscissa_from_choices(double a, double eps) { return (2 * a + 6) / eps + 0.5; }

Complex afe_central_value(const LFunctionData& data, const AfeConfig& cfg) {
  mpfr_prec_t work = cfg.precision + 64;
  if (!data.self_dual) throw std::invalid_argument("only self-dual data shipped");
  if (cfg.kernel == AfeKernel::kGaussian &&
      std::exp(-cfg.half_width * cfg.half_width) > cfg.target_accuracy) {
    throw std::runtime_error("increase T_max");
  }
  NodeGrid grid = make_grid(cfg, work);
  Complex s_lo(Real(0.5, work) + Real(cfg.abscissa, work), grid.t0);
  auto lvals = dirichlet_line_values(data.coeffs, s_lo, grid.h, grid.count, cfg.truncation);
  Complex i1 = contour_integral(data, cfg, false, work, lvals);
  // even kernel + self-dual data: the mirror integral coincides
  Complex i2 = (cfg.kernel == AfeKernel::kGaussian) ? i1
                                                    : contour_integral(data, cfg, true, work, lvals);
  Complex total = i1 + to_prec(data.root_number, work) * i2;

  // G(1/2) = (1/4)^r N^{1/4} L_oo(1/2)
  Real half(0.5, work);
  Complex g = exp(log_gamma_factor(data, Complex(half), work));
  g = g * pow_real(Real(data.conductor, work), Complex(Real(0.25, work)));
  for (int r = 0; r < data.pole_order; ++r) g = g * Real(0.25, work);
  return to_prec(total / g, cfg.precision);
}

std::vector<Complex> afe_weight_table(const std::vector<long>& ns, const LFunctionData& data,
                                      const AfeConfig& cfg) {
  mpfr_prec_t work = cfg.precision + 64;
  NodeGrid grid = make_grid(cfg, work);
  Real b(cfg.abscissa, work);
  Real half(0.5, work);

  // D(1 + 2s) across nodes: base point 1 + 2b + 2i t0, step 2h
  Complex d_lo(Real(1L, work) + b + b, grid.t0 + grid.t0);
  auto dvals = dirichlet_line_values(data.coeffs, d_lo, grid.h + grid.h, grid.count, cfg.truncation);

  Complex lg_center = log_gamma_factor(data, Complex(half), work);
  std::vector<Complex> base(static_cast<std::size_t>(grid.count), Complex(work));
  parallel_for(static_cast<std::size_t>(grid.count), [&](std::size_t j) {
    Real t = grid.t0 + grid.h * Real(static_cast<long>(j), work);
    Complex s(b, t);
    Complex shalf = Complex(half) + s;
    Complex ratio = exp(log_gamma_factor(data, shalf, work) - lg_center);
    base[j] = dvals[j] * ratio * kernel_value(cfg, s, false) / s;
  });
  base.front() = base.front() * Real(0.5, work);
  base.back() = base.back() * Real(0.5, work);

  Real edge = max(abs(base.front()), abs(base.back()));
  if (edge.to_double() > cfg.target_accuracy) throw std::runtime_error("increase T_max");

  Real two_pi = Real(2L, work) * Real::pi(work);
  Real scale = Real(cfg.step, work) / two_pi;

  std::vector<Complex> out(ns.size(), Complex(cfg.precision));
  parallel_for(ns.size(), [&](std::size_t idx) {
    long n = ns[idx];
    Real ln = log(Real(n, work));
    Complex cur = exp(Complex(-b * ln, -(grid.t0 * ln)));
    Complex rot = unit_phase(-(grid.h * ln));
    std::vector<Complex> terms(static_cast<std::size_t>(grid.count), Complex(work));
    for (long j = 0; j < grid.count; ++j) {
      terms[j] = base[j] * cur;
      cur *= rot;
    }
    Complex total = tree_reduce(terms, Complex(work),
                                [](const Complex& a, const Complex& b2) { return a + b2; });
    out[idx] = to_prec(total * scale, cfg.precision);
  });
  return out;
}

Complex afe_weight(long n, const LFunctionData& data, const AfeConfig& cfg) {
  return afe_weight_table({n}, data, cfg)[0];
}

}  // namespace que
