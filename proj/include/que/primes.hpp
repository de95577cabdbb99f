#ifndef QUE_PRIMES_HPP
#define QUE_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace que {

// Primes up to and including n (simple Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t n);

// Smallest-prime-factor table for 0..n; spf[0] = spf[1] = 0.
std::vector<std::int32_t> spf_table(std::int32_t n);

bool is_prime(std::int64_t n);

// Divisor count tau(n).
std::int64_t divisor_count(std::int64_t n);

}  // namespace que

#endif
