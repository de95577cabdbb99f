#include "que/mollifier.hpp"

#include <cmath>
#include <stdexcept>

namespace que {

long paper_r_parameter(int m, double eps) {
  return static_cast<long>(std::floor(72.0 * m * m / (eps * eps))) + 1;
}

Complex partial_sum(const DirichletCoeffTable& table, const Real& x, bool weighted) {
  mpfr_prec_t work = table.precision + 32;
  long xf = floor(x).to_long();
  if (xf > table.truncation) throw std::invalid_argument("x beyond table");
  Complex acc(work);
  for (long n = 1; n <= xf; ++n) {
    if (weighted) {
      acc += table.lam(n) * log(Real(n, work));
    } else {
      acc += table.lam(n);
    }
  }
  return acc;
}

Complex mollified_sum(const DirichletCoeffTable& table, const Real& x, const MollifierConfig& cfg,
                      bool weighted) {
  if (static_cast<int>(cfg.l.size()) != cfg.R || static_cast<int>(cfg.tau.size()) != cfg.R) {
    throw std::invalid_argument("mollifier dimensions mismatch");
  }
  mpfr_prec_t work = table.precision + 32;
  Real logw = log(to_prec(cfg.w, work));
  if (!(cfg.w > Real(1L, work))) throw std::invalid_argument("w must exceed 1");

  // iterate the multi-index j <= l in mixed-radix order
  std::vector<long> j(cfg.l.size(), 0);
  Complex acc(work);
  mpz_class binom_prod;
  while (true) {
    long total = 0;
    binom_prod = 1;
    for (int r = 0; r < cfg.R; ++r) {
      total += j[r];
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(cfg.l[r]),
                   static_cast<unsigned long>(j[r]));
      binom_prod *= b;
    }
    // w^{sum j_r (1 + i tau_r)}
    Complex expo(work);
    for (int r = 0; r < cfg.R; ++r) {
      if (j[r] == 0) continue;
      expo += Complex(Real(j[r], work), Real(j[r], work) * to_prec(cfg.tau[r], work));
    }
    Complex wpow = exp(expo * Complex(logw));
    Real xr = to_prec(x, work) / pow(to_prec(cfg.w, work), total);
    Complex s_val = partial_sum(table, xr, weighted);
    Complex term = wpow * s_val * Real(binom_prod, work);
    if (total % 2 == 1) term = -term;
    acc += term;

    int r = 0;
    while (r < cfg.R && j[r] == cfg.l[r]) { j[r] = 0; ++r; }
    if (r == cfg.R) break;
    ++j[r];
  }
  return acc;
}

Complex mollified_lfunction(const LFunctionData& data, const Complex& s, const MollifierConfig& cfg,
                            long truncation) {
  mpfr_prec_t work = data.coeffs.precision + 32;
  TruncatedValue base = truncated_L(data, s, truncation);
  Complex out = base.value;
  Real logw = log(to_prec(cfg.w, work));
  for (int r = 0; r < cfg.R; ++r) {
    // (1 - w^{1 + i tau_r - s})^{l_r}
    Complex expo = Complex(Real(1L, work), to_prec(cfg.tau[r], work)) - to_prec(s, work);
    Complex factor = Complex(1L, work) - exp(expo * Complex(logw));
    for (long e = 0; e < cfg.l[r]; ++e) out *= factor;
  }
  return out;
}

MaximaResult successive_maxima(const LFunctionData& data, const Real& x_anchor, int r_count,
                               mpfr_prec_t precision, long truncation) {
  if (r_count < 1) throw std::invalid_argument("need at least one maximum");
  mpfr_prec_t work = precision + 32;
  Real logx = log(to_prec(x_anchor, work));
  Real loglogx = log(logx);
  Real t_cap = exp(loglogx * loglogx);
  Real sep = pow(logx, Real(-1.0 / r_count, work));
  Real sigma0 = Real(1L, work) + Real(1L, work) / logx;

  // grid step at a fraction of the separation radius
  double t_cap_d = t_cap.to_double();
  double sep_d = sep.to_double();
  double step_d = sep_d / 8.0;
  long half = static_cast<long>(t_cap_d / step_d) + 1;
  long count = 2 * half + 1;
  Real step(step_d, work);
  Real t0 = -(step * Real(half, work));

  Complex s_lo(sigma0, t0);
  auto lvals = dirichlet_line_values(data.coeffs, s_lo, step, count, truncation);

  std::vector<double> mags(static_cast<std::size_t>(count));
  for (long j = 0; j < count; ++j) mags[j] = abs(lvals[j]).to_double();

  auto lmag = [&](const Real& t) {
    TruncatedValue v = truncated_L(data, Complex(sigma0, to_prec(t, work)), truncation);
    return abs(v.value);
  };

  MaximaResult out;
  out.separation = to_prec(sep, precision);
  std::vector<std::pair<double, double>> removed;  // open intervals (lo, hi)
  for (int pick = 0; pick < r_count; ++pick) {
    long best = -1;
    double best_mag = -1;
    for (long j = 0; j < count; ++j) {
      double t = t0.to_double() + step_d * j;
      bool blocked = false;
      for (const auto& [lo, hi] : removed) {
        if (t > lo && t < hi) { blocked = true; break; }
      }
      if (blocked) continue;
      if (mags[j] > best_mag) { best_mag = mags[j]; best = j; }
    }
    if (best < 0) throw std::runtime_error("compact set exhausted");

    // golden-section polish within one grid cell, clamped to the compact set
    double lo = t0.to_double() + step_d * (best - 1);
    double hi = t0.to_double() + step_d * (best + 1);
    lo = std::max(lo, -t_cap_d);
    hi = std::min(hi, t_cap_d);
    for (const auto& [rlo, rhi] : removed) {
      if (lo > rlo && lo < rhi) lo = rhi;
      if (hi > rlo && hi < rhi) hi = rlo;
    }
    const double gr = 0.6180339887498949;
    double a = lo, bnd = hi;
    for (int iter = 0; iter < 60 && bnd - a > 1e-12; ++iter) {
      double cc = bnd - gr * (bnd - a);
      double dd = a + gr * (bnd - a);
      if (lmag(Real(cc, work)) > lmag(Real(dd, work))) bnd = dd; else a = cc;
    }
    double tstar = 0.5 * (a + bnd);
    out.tau.push_back(Real(tstar, precision));
    out.values.push_back(to_prec(lmag(Real(tstar, work)), precision));
    removed.emplace_back(tstar - sep_d, tstar + sep_d);
  }

  out.separation_ok = true;
  for (std::size_t i = 0; i < out.tau.size(); ++i) {
    for (std::size_t j = i + 1; j < out.tau.size(); ++j) {
      if (abs(out.tau[i] - out.tau[j]) < out.separation) out.separation_ok = false;
    }
  }
  return out;
}

}  // namespace que
