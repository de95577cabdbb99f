#include "que/dirichlet.hpp"

#include <stdexcept>

#include "que/primes.hpp"

namespace que {

std::string table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::kZeta: return "zeta";
    case TableKind::kStandard: return "standard";
    case TableKind::kAdjoint: return "adjoint";
    case TableKind::kRankin: return "rankin";
    case TableKind::kProductComposite: return "product-composite";
  }
  return "unknown";
}

DirichletCoeffTable global_coeffs(TableKind kind, const LocalFactory& factory, long N,
                                  mpfr_prec_t precision) {
  DirichletCoeffTable t;
  t.kind = kind;
  t.precision = precision;
  t.truncation = N;
  t.lambda.assign(static_cast<std::size_t>(N), Complex(precision));
  if (N >= 1) t.lambda[0] = Complex(1L, precision);

  mpfr_prec_t work = precision + 32;
  auto spf = spf_table(static_cast<std::int32_t>(N));
  for (long p = 2; p <= N; ++p) {
    if (spf[p] != p) continue;
    long order = 0;
    for (long q = 1; q <= N / p; q *= p) ++order;  // p^order <= N
    LocalFactorSeries loc = factory(p, order);

    long q = 1;
    for (long j = 1; j <= order; ++j) {
      q *= p;
      t.lambda[q - 1] = loc.coeff(j);
    }
    // power sums of the inverse roots give a(p^k)
    Real logp = log(Real(p, work));
    std::vector<Complex> rp;
    for (const Complex& r : loc.inverse_roots) rp.push_back(to_prec(r, work));
    std::vector<Complex> cur = rp;
    q = 1;
    for (long k = 1; k <= order; ++k) {
      q *= p;
      Complex psum(work);
      for (std::size_t i = 0; i < cur.size(); ++i) psum += cur[i];
      t.von_mangoldt[q] = to_prec(psum * logp, precision);
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] *= rp[i];
    }
  }
  // multiplicative fill
  for (long n = 2; n <= N; ++n) {
    long p = spf[n];
    long pe = 1;
    long m = n;
    while (m % p == 0) { m /= p; pe *= p; }
    if (m == 1) continue;
    t.lambda[n - 1] = t.lambda[pe - 1] * t.lambda[m - 1];
  }
  return t;
}

DirichletCoeffTable zeta_table(long N, mpfr_prec_t precision) {
  return global_coeffs(TableKind::kZeta,
                       [precision](long p, long order) { return local_zeta(p, order, precision); },
                       N, precision);
}

DirichletCoeffTable standard_table(const Eigenform& f, long N, mpfr_prec_t precision) {
  return global_coeffs(TableKind::kStandard,
                       [&f, precision](long p, long order) { return local_standard(f, p, order, precision); },
                       N, precision);
}

DirichletCoeffTable adjoint_table(const Eigenform& f, long N, mpfr_prec_t precision) {
  return global_coeffs(TableKind::kAdjoint,
                       [&f, precision](long p, long order) { return local_adjoint(f, p, order, precision); },
                       N, precision);
}

DirichletCoeffTable rankin_table(const Eigenform& f, const Eigenform& g, long N, mpfr_prec_t precision) {
  return global_coeffs(TableKind::kRankin,
                       [&f, &g, precision](long p, long order) { return local_rankin(f, g, p, order, precision); },
                       N, precision);
}

DirichletCoeffTable product_table(const DirichletCoeffTable& a, const DirichletCoeffTable& b) {
  DirichletCoeffTable t;
  t.kind = TableKind::kProductComposite;
  t.precision = std::min(a.precision, b.precision);
  t.truncation = std::min(a.truncation, b.truncation);
  long N = t.truncation;
  t.lambda.assign(static_cast<std::size_t>(N), Complex(t.precision));
  for (long i = 1; i <= N; ++i) {
    for (long j = 1; i * j <= N; ++j) {
      t.lambda[i * j - 1] += a.lam(i) * b.lam(j);
    }
  }
  // -L'/L adds over a product, so the von Mangoldt data is the sum
  for (const auto& [pk, v] : a.von_mangoldt) {
    t.von_mangoldt[pk] = v;
  }
  for (const auto& [pk, v] : b.von_mangoldt) {
    auto it = t.von_mangoldt.find(pk);
    if (it == t.von_mangoldt.end()) t.von_mangoldt[pk] = v;
    else it->second += v;
  }
  return t;
}

namespace {

void require_self_dual_nonneg(const Complex& v, const Real& tol) {
  if (abs(v.im()) > tol || v.re() < -tol) {
    throw std::runtime_error("self-dual table must be nonnegative");
  }
}

IneqReport run_ineq(const DirichletCoeffTable& aa, const DirichletCoeffTable& bb,
                    const DirichletCoeffTable& ab, long n_max, bool von_mangoldt) {
  mpfr_prec_t prec = ab.precision;
  mpfr_prec_t work = prec + 32;
  Real tol = Real::pow2(-static_cast<long>(prec) + 24, work);
  IneqReport rep{Real(0.0, work), 0, 0, false};

  auto consider = [&](long n, const Complex& va, const Complex& vb, const Complex& vab) {
    require_self_dual_nonneg(va, tol);
    require_self_dual_nonneg(vb, tol);
    Real denom = sqrt(max(va.re(), Real(0.0, work)) * max(vb.re(), Real(0.0, work)));
    if (denom <= tol) return;
    Real ratio = abs(vab) / denom;
    ++rep.checked;
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst_n = n;
    }
  };

  if (von_mangoldt) {
    for (const auto& [n, vab] : ab.von_mangoldt) {
      if (n > n_max) continue;
      auto ia = aa.von_mangoldt.find(n);
      auto ib = bb.von_mangoldt.find(n);
      if (ia == aa.von_mangoldt.end() || ib == bb.von_mangoldt.end()) continue;
      consider(n, ia->second, ib->second, vab);
    }
  } else {
    long N = std::min({n_max, aa.truncation, bb.truncation, ab.truncation});
    for (long n = 1; n <= N; ++n) consider(n, aa.lam(n), bb.lam(n), ab.lam(n));
  }
  Real thresh = Real(1L, work) + Real::pow2(-static_cast<long>(prec) + 16, work);
  rep.pass = rep.worst_ratio <= thresh;
  return rep;
}

}  // namespace

IneqReport check_vonmangoldt_ineq(const DirichletCoeffTable& aa, const DirichletCoeffTable& bb,
                                  const DirichletCoeffTable& ab, long n_max) {
  return run_ineq(aa, bb, ab, n_max, true);
}

IneqReport check_lambda_ineq(const DirichletCoeffTable& aa, const DirichletCoeffTable& bb,
                             const DirichletCoeffTable& ab, long n_max) {
  return run_ineq(aa, bb, ab, n_max, false);
}

FactorizationReport verify_ff_factorization(const Eigenform& f, long n_max, mpfr_prec_t precision) {
  DirichletCoeffTable ff = rankin_table(f, f, n_max, precision);
  DirichletCoeffTable ad = adjoint_table(f, n_max, precision);
  mpfr_prec_t work = precision + 32;
  // zeta * adjoint as a Dirichlet convolution: rhs(n) = sum_{d|n} lambda_ad(d)
  std::vector<Complex> rhs(static_cast<std::size_t>(n_max), Complex(work));
  for (long d = 1; d <= n_max; ++d) {
    for (long m = d; m <= n_max; m += d) rhs[m - 1] += ad.lam(d);
  }
  FactorizationReport rep{Real(0.0, work), 0, false};
  for (long n = 1; n <= n_max; ++n) {
    Real resid = abs(ff.lam(n) - rhs[n - 1]);
    if (resid > rep.max_residual) {
      rep.max_residual = resid;
      rep.worst_n = n;
    }
  }
  rep.pass = rep.max_residual < Real::pow2(-static_cast<long>(precision) + 16, work);
  return rep;
}

}  // namespace que
