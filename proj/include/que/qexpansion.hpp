#ifndef QUE_QEXPANSION_HPP
#define QUE_QEXPANSION_HPP

#include <gmpxx.h>

#include <vector>

namespace que {

// Truncated q-expansion of a cusp form: exact rational coefficients a(n) for
// 1 <= n <= truncation (no constant term).  Arithmetic never reads past the
// stored truncation and records the truncation valid for the result.
class QExpansion {
public:
  QExpansion(int weight, long truncation)
      : weight_(weight), trunc_(truncation), c_(static_cast<std::size_t>(truncation), mpq_class(0)) {}

  int weight() const { return weight_; }
  long truncation() const { return trunc_; }

  const mpq_class& coeff(long n) const;
  void set_coeff(long n, const mpq_class& v);

  QExpansion& operator+=(const QExpansion& o);  // truncation shrinks to min
  QExpansion& operator*=(const mpq_class& s);
  friend QExpansion operator+(QExpansion a, const QExpansion& b) { return a += b; }
  friend QExpansion operator*(QExpansion a, const mpq_class& s) { return a *= s; }

  // Cusp-form product; weight adds, truncation = min(Na, Nb) + 1.
  friend QExpansion mul(const QExpansion& a, const QExpansion& b);

private:
  int weight_;
  long trunc_;
  std::vector<mpq_class> c_;  // c_[n-1] = a(n)
};

}  // namespace que

#endif
