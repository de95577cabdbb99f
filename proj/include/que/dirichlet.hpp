#ifndef QUE_DIRICHLET_HPP
#define QUE_DIRICHLET_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "que/localfactor.hpp"

namespace que {

enum class TableKind { kZeta, kStandard, kAdjoint, kRankin, kProductComposite };

std::string table_kind_name(TableKind k);

// Global Dirichlet data assembled multiplicatively from local factors:
// lambda(n) for n <= truncation and von Mangoldt values Lambda(p^k) =
// a(p^k) log p on prime powers.
struct DirichletCoeffTable {
  TableKind kind = TableKind::kZeta;
  mpfr_prec_t precision = 128;
  long truncation = 0;
  std::vector<Complex> lambda;            // lambda[n-1] = lambda(n)
  std::map<long, Complex> von_mangoldt;   // keyed by prime power

  const Complex& lam(long n) const { return lambda.at(static_cast<std::size_t>(n - 1)); }
};

using LocalFactory = std::function<LocalFactorSeries(long p, long order)>;

DirichletCoeffTable global_coeffs(TableKind kind, const LocalFactory& factory, long truncation,
                                  mpfr_prec_t precision);

// Ready-made tables for the shipped kinds.
DirichletCoeffTable zeta_table(long truncation, mpfr_prec_t precision);
DirichletCoeffTable standard_table(const Eigenform& f, long truncation, mpfr_prec_t precision);
DirichletCoeffTable adjoint_table(const Eigenform& f, long truncation, mpfr_prec_t precision);
DirichletCoeffTable rankin_table(const Eigenform& f, const Eigenform& g, long truncation,
                                 mpfr_prec_t precision);
// Coefficients of the product L_A(s) L_B(s) (Dirichlet convolution).
DirichletCoeffTable product_table(const DirichletCoeffTable& a, const DirichletCoeffTable& b);

struct IneqReport {
  Real worst_ratio;
  long worst_n = 0;
  long checked = 0;
  bool pass = false;
};

// |Lambda_{AB}(n)| <= sqrt(Lambda_{AA~}(n) Lambda_{BB~}(n)) over prime powers.
IneqReport check_vonmangoldt_ineq(const DirichletCoeffTable& aa, const DirichletCoeffTable& bb,
                                  const DirichletCoeffTable& ab, long n_max);

// |lambda_{AB}(n)| <= sqrt(lambda_{AA~}(n) lambda_{BB~}(n)) over all n.
IneqReport check_lambda_ineq(const DirichletCoeffTable& aa, const DirichletCoeffTable& bb,
                             const DirichletCoeffTable& ab, long n_max);

struct FactorizationReport {
  Real max_residual;
  long worst_n = 0;
  bool pass = false;
};

// lambda_{f x f}(n) = sum_{d|n} lambda_{ad f}(d), both sides built
// independently (Rankin product vs adjoint product convolved with zeta).
FactorizationReport verify_ff_factorization(const Eigenform& f, long n_max, mpfr_prec_t precision);

}  // namespace que

#endif
