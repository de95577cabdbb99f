#ifndef QUE_LFUNCTION_HPP
#define QUE_LFUNCTION_HPP

#include <string>

#include "que/dirichlet.hpp"

namespace que {

// Completed-L data: Dirichlet coefficients, gamma shifts mu_j (so that
// L_oo(s) = pi^{-ds/2} prod Gamma((s+mu_j)/2)), integer conductor, root
// number, pole order r in {0,1}.
struct LFunctionData {
  DirichletCoeffTable coeffs;
  int degree = 1;
  std::vector<Complex> gamma_shifts;
  long conductor = 1;
  Complex root_number;
  int pole_order = 0;
  bool self_dual = true;
};

enum class LKind { kZeta, kStandard, kAdjoint, kRankin };

// Gamma data: zeta {0}; standard(f) {(k-1)/2, (k+1)/2}; adjoint(f)
// {1, k-1, k}; rankin(f,g) {(k-l)/2, (k-l)/2+1, (k+l)/2-1, (k+l)/2}.
LFunctionData make_lfunction_data(LKind kind, const Eigenform* f, const Eigenform* g,
                                  long truncation, mpfr_prec_t precision);

// Degree-6 configuration for weight tables: Dirichlet factor
// adjoint(f) * adjoint(f) (product-composite), shifts
// {1 +- i t, k-1 +- i t, k +- i t}.
LFunctionData weight_table_data(const Eigenform& f, double t_phi, long truncation,
                                mpfr_prec_t precision);

// N prod_j (3 + |it + mu_j|).
Real analytic_conductor(const LFunctionData& data, const Real& t);

// log L_oo(s) and L_oo(s) with the pi^{-ds/2} factor included.
Complex log_gamma_factor(const LFunctionData& data, const Complex& s, mpfr_prec_t prec);

struct TruncatedValue {
  Complex value;
  Real tail_bound;
};

// sum_{n<=N} lambda(n) n^{-s} plus a divisor-majorant tail bound; requires
// Re(s) > 1 and N within the stored table.
TruncatedValue truncated_L(const LFunctionData& data, const Complex& s, long N);

// Values of sum lambda(n) n^{-(s0 + i j step)} for j = 0..count-1, evaluated
// with a fixed block decomposition so results do not depend on thread count.
std::vector<Complex> dirichlet_line_values(const DirichletCoeffTable& table, const Complex& s0,
                                           const Real& step, long count, long N);

}  // namespace que

#endif
