#ifndef QUE_EIGENFORM_HPP
#define QUE_EIGENFORM_HPP

#include <gmpxx.h>

#include <vector>

#include "que/complexnum.hpp"
#include "que/qexpansion.hpp"

namespace que {

// Normalized level-1 Hecke eigenform with exact integer coefficients
// a(n) = lambda(n) n^{(k-1)/2}, 1 <= n <= truncation.  Immutable once built.
class Eigenform {
public:
  Eigenform(int weight, std::vector<mpz_class> a)
      : weight_(weight), a_(std::move(a)) {}

  int weight() const { return weight_; }
  long truncation() const { return static_cast<long>(a_.size()); }
  // Exact a(n); throws "out of table" past the truncation.
  const mpz_class& a(long n) const;

private:
  int weight_;
  std::vector<mpz_class> a_;  // a_[n-1] = a(n)
};

struct SatakeLocalData {
  long p = 0;
  Complex alpha;          // canonical root of x^2 - lambda x + 1
  mpfr_prec_t precision = 128;

  Complex alpha_inv() const { return conj(alpha); }
};

// dim S_k(Gamma_0(1)) for even k; 0 for odd or small k.
int cusp_dim(int k);

// Echelonized basis of S_k(Gamma_0(1)) from E4/E6 monomials times powers of
// Delta, exact row reduction.  Element i = q^i + O(q^{d+1}).
std::vector<QExpansion> miller_basis(int k, long truncation);

// T_m via a_{T_m f}(n) = sum_{d | gcd(m,n)} d^{k-1} a_f(m n / d^2).
QExpansion hecke_apply(long m, const QExpansion& f);

// The unique normalized eigenform for the one-dimensional weights
// {12, 16, 18, 20, 22, 26}.
Eigenform eigenform(int k, long truncation);

// lambda_f(n) = a(n) / n^{(k-1)/2} rounded at the requested precision.
Real eigen_lambda(const Eigenform& f, long n, mpfr_prec_t precision);

// Satake parameter at p: root of x^2 - lambda_f(p) x + 1 with Im >= 0,
// real ties broken by |alpha| >= 1.
SatakeLocalData satake(const Eigenform& f, long p, mpfr_prec_t precision);

// Same root convention for a free real trace value (used for the Maass slot,
// where |lam| may exceed 2).
Complex satake_root(const Real& lam, mpfr_prec_t precision);

}  // namespace que

#endif
