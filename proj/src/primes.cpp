#include "que/primes.hpp"

namespace que {

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (comp[p]) continue;
    out.push_back(p);
    for (std::int64_t q = p * p; q <= n; q += p) comp[q] = true;
  }
  return out;
}

std::vector<std::int32_t> spf_table(std::int32_t n) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
  for (std::int32_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t divisor_count(std::int64_t n) {
  std::int64_t count = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    count *= (e + 1);
  }
  if (n > 1) count *= 2;
  return count;
}

}  // namespace que
