#include "que/qexpansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace que {

const mpq_class& QExpansion::coeff(long n) const {
  if (n < 1 || n > trunc_) throw std::out_of_range("coefficient index outside truncation");
  return c_[static_cast<std::size_t>(n - 1)];
}

void QExpansion::set_coeff(long n, const mpq_class& v) {
  if (n < 1 || n > trunc_) throw std::out_of_range("coefficient index outside truncation");
  c_[static_cast<std::size_t>(n - 1)] = v;
}

QExpansion& QExpansion::operator+=(const QExpansion& o) {
  if (weight_ != o.weight_) throw std::invalid_argument("weight mismatch in sum");
  long n = std::min(trunc_, o.trunc_);
  c_.resize(static_cast<std::size_t>(n));
  trunc_ = n;
  for (long i = 1; i <= n; ++i) c_[i - 1] += o.c_[i - 1];
  return *this;
}

QExpansion& QExpansion::operator*=(const mpq_class& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

QExpansion mul(const QExpansion& a, const QExpansion& b) {
  // both factors vanish at q^0, so coefficient n needs indices <= n-1 only
  long n = std::min(a.trunc_, b.trunc_) + 1;
  QExpansion out(a.weight_ + b.weight_, n);
  for (long i = 1; i <= a.trunc_; ++i) {
    if (a.c_[i - 1] == 0) continue;
    for (long j = 1; i + j <= n && j <= b.trunc_; ++j) {
      out.c_[i + j - 1] += a.c_[i - 1] * b.c_[j - 1];
    }
  }
  return out;
}

}  // namespace que
