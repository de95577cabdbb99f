#include "que/lfunction.hpp"

#include <stdexcept>

#include "que/gammafn.hpp"
#include "que/parallel.hpp"

namespace que {

LFunctionData make_lfunction_data(LKind kind, const Eigenform* f, const Eigenform* g,
                                  long N, mpfr_prec_t precision) {
  LFunctionData d;
  mpfr_prec_t work = precision;
  switch (kind) {
    case LKind::kZeta: {
      d.coeffs = zeta_table(N, precision);
      d.degree = 1;
      d.gamma_shifts = {Complex(0L, work)};
      d.conductor = 1;
      d.root_number = Complex(1L, work);
      d.pole_order = 1;
      d.self_dual = true;
      return d;
    }
    case LKind::kStandard: {
      if (!f) throw std::invalid_argument("standard kind needs a form");
      int k = f->weight();
      d.coeffs = standard_table(*f, N, precision);
      d.degree = 2;
      d.gamma_shifts = {Complex(Real((k - 1) / 2.0, work)), Complex(Real((k + 1) / 2.0, work))};
      d.conductor = 1;
      // classical sign for level-1 weight-k forms
      d.root_number = Complex((k % 4 == 0) ? 1L : -1L, work);
      d.pole_order = 0;
      d.self_dual = true;
      return d;
    }
    case LKind::kAdjoint: {
      if (!f) throw std::invalid_argument("adjoint kind needs a form");
      int k = f->weight();
      d.coeffs = adjoint_table(*f, N, precision);
      d.degree = 3;
      d.gamma_shifts = {Complex(1L, work), Complex(static_cast<long>(k - 1), work),
                        Complex(static_cast<long>(k), work)};
      d.conductor = 1;
      d.root_number = Complex(1L, work);
      d.pole_order = 0;
      d.self_dual = true;
      return d;
    }
    case LKind::kRankin: {
      if (!f || !g) throw std::invalid_argument("rankin kind needs two forms");
      int k = std::max(f->weight(), g->weight());
      int l = std::min(f->weight(), g->weight());
      d.coeffs = rankin_table(*f, *g, N, precision);
      d.degree = 4;
      d.gamma_shifts = {Complex(Real((k - l) / 2.0, work)), Complex(Real((k - l) / 2.0 + 1, work)),
                        Complex(Real((k + l) / 2.0 - 1, work)), Complex(Real((k + l) / 2.0, work))};
      d.conductor = 1;
      d.root_number = Complex(1L, work);
      // one-dimensional weights: equal weight means the same eigenform
      bool same = (f == g) || (f->weight() == g->weight());
      d.pole_order = same ? 1 : 0;
      d.self_dual = true;
      return d;
    }
  }
  throw std::invalid_argument("unsupported kind");
}

LFunctionData weight_table_data(const Eigenform& f, double t_phi, long N, mpfr_prec_t precision) {
  LFunctionData d;
  DirichletCoeffTable ad = adjoint_table(f, N, precision);
  d.coeffs = product_table(ad, ad);
  d.degree = 6;
  int k = f.weight();
  Real t(t_phi, precision);
  for (long mu : {1L, static_cast<long>(k - 1), static_cast<long>(k)}) {
    d.gamma_shifts.push_back(Complex(Real(mu, precision), t));
    d.gamma_shifts.push_back(Complex(Real(mu, precision), -t));
  }
  d.conductor = 1;
  d.root_number = Complex(1L, precision);
  d.pole_order = 0;
  d.self_dual = true;
  return d;
}

Real analytic_conductor(const LFunctionData& data, const Real& t) {
  mpfr_prec_t work = t.prec() + 32;
  Real out(data.conductor, work);
  Complex it(Real(0.0, work), to_prec(t, work));
  for (const Complex& mu : data.gamma_shifts) {
    out *= Real(3L, work) + abs(it + to_prec(mu, work));
  }
  return out;
}

Complex log_gamma_factor(const LFunctionData& data, const Complex& s, mpfr_prec_t prec) {
  mpfr_prec_t work = prec + 32;
  Complex acc(work);
  Real half(0.5, work);
  for (const Complex& mu : data.gamma_shifts) {
    acc += log_gamma((to_prec(s, work) + to_prec(mu, work)) * Complex(half), work);
  }
  Real d_half(data.degree * 0.5, work);
  acc -= to_prec(s, work) * Complex(d_half * log(Real::pi(work)));
  return to_prec(acc, prec);
}

TruncatedValue truncated_L(const LFunctionData& data, const Complex& s, long N) {
  mpfr_prec_t prec = data.coeffs.precision;
  mpfr_prec_t work = prec + 32;
  Real sigma = to_prec(s.re(), work);
  if (sigma <= Real(1L, work)) throw std::invalid_argument("outside absolute convergence");
  if (N > data.coeffs.truncation) throw std::invalid_argument("table too short");

  auto vals = dirichlet_line_values(data.coeffs, s, Real(0.0, work), 1, N);

  // tail <= N^{1+delta-sigma} zeta(1+delta)^d with delta = min(1/log N, eta/2)
  Real eta = sigma - Real(1L, work);
  Real delta = min(Real(1L, work) / log(Real(N, work)), eta * Real(0.5, work));
  Real tail = pow(Real(N, work), Real(1L, work) + delta - sigma) *
              pow(zeta(Real(1L, work) + delta), static_cast<long>(data.degree));
  TruncatedValue out;
  out.value = vals[0];
  out.tail_bound = to_prec(tail, prec);
  return out;
}

std::vector<Complex> dirichlet_line_values(const DirichletCoeffTable& table, const Complex& s0,
                                           const Real& step, long count, long N) {
  mpfr_prec_t work = table.precision + 32;
  if (N > table.truncation) throw std::invalid_argument("table too short");
  const long kBlock = 2048;
  long nblocks = (N + kBlock - 1) / kBlock;
  std::vector<std::vector<Complex>> partial(static_cast<std::size_t>(nblocks));

  Complex s0w = to_prec(s0, work);
  Real stepw = to_prec(step, work);
  parallel_for(static_cast<std::size_t>(nblocks), [&](std::size_t b) {
    long lo = static_cast<long>(b) * kBlock + 1;
    long hi = std::min(N, lo + kBlock - 1);
    std::vector<Complex> acc(static_cast<std::size_t>(count), Complex(work));
    for (long n = lo; n <= hi; ++n) {
      const Complex& lam = table.lam(n);
      if (lam.is_zero()) continue;
      Real ln = log(Real(n, work));
      Complex cur = lam * exp(Complex(-s0w.re() * ln, -s0w.im() * ln));
      if (count == 1) {
        acc[0] += cur;
        continue;
      }
      Complex rot = unit_phase(-(stepw * ln));
      for (long j = 0; j < count; ++j) {
        acc[j] += cur;
        cur *= rot;
      }
    }
    partial[b] = std::move(acc);
  });

  std::vector<Complex> out(static_cast<std::size_t>(count), Complex(work));
  for (long b = 0; b < nblocks; ++b) {
    for (long j = 0; j < count; ++j) out[j] += partial[b][j];
  }
  return out;
}

}  // namespace que
