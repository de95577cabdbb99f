#include "que/eigenform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "que/primes.hpp"

namespace que {

namespace {

// sigma_r(n) for n = 1..N as exact integers
std::vector<mpz_class> sigma_table(long N, int r) {
  std::vector<mpz_class> s(static_cast<std::size_t>(N) + 1, mpz_class(0));
  for (long d = 1; d <= N; ++d) {
    mpz_class dr;
    mpz_ui_pow_ui(dr.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r));
    for (long m = d; m <= N; m += d) s[m] += dr;
  }
  return s;
}

// Dense integral series c[0..N] (index = q-power).
using Dense = std::vector<mpz_class>;

Dense dense_mul(const Dense& a, const Dense& b, long N) {
  Dense out(static_cast<std::size_t>(N) + 1, mpz_class(0));
  for (long i = 0; i <= N && i < static_cast<long>(a.size()); ++i) {
    if (a[i] == 0) continue;
    long jmax = std::min<long>(N - i, static_cast<long>(b.size()) - 1);
    for (long j = 0; j <= jmax; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Normalized Eisenstein series of one-dimensional weight w as a dense series.
Dense eisenstein(int w, long N) {
  Dense e(static_cast<std::size_t>(N) + 1, mpz_class(0));
  e[0] = 1;
  if (w == 0) return e;
  int r;
  long c;
  switch (w) {
    case 4: r = 3; c = 240; break;
    case 6: r = 5; c = -504; break;
    case 8: r = 7; c = 480; break;
    case 10: r = 9; c = -264; break;
    case 14: r = 13; c = -24; break;
    default: throw std::invalid_argument("no one-dimensional Eisenstein series of this weight");
  }
  auto s = sigma_table(N, r);
  for (long n = 1; n <= N; ++n) e[n] = c * s[n];
  return e;
}

// Delta = q prod (1-q^n)^24 up to q^N, via the logarithmic-derivative
// recurrence m F_m = -24 sum sigma_1(j) F_{m-j} for F = prod (1-q^n)^24.
Dense delta_series(long N) {
  Dense d(static_cast<std::size_t>(N) + 1, mpz_class(0));
  if (N < 1) return d;
  long M = N - 1;  // F needed to q^M
  std::vector<long> sig1(static_cast<std::size_t>(M) + 1, 0);
  for (long dd = 1; dd <= M; ++dd) {
    for (long m = dd; m <= M; m += dd) sig1[m] += dd;
  }
  Dense F(static_cast<std::size_t>(M) + 1, mpz_class(0));
  F[0] = 1;
  mpz_class acc;
  for (long m = 1; m <= M; ++m) {
    acc = 0;
    for (long j = 1; j <= m; ++j) {
      if (F[m - j] == 0) continue;
      mpz_addmul_ui(acc.get_mpz_t(), F[m - j].get_mpz_t(), static_cast<unsigned long>(sig1[j]));
    }
    acc *= -24;
    mpz_divexact_ui(F[m].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
  }
  for (long n = 1; n <= N; ++n) d[n] = F[n - 1];
  return d;
}

// Weight w = 4a + 6b with b in {0,1}; valid for even w >= 0, w != 2.
void split_weight(int w, int& a, int& b) {
  b = (w % 4 == 2) ? 1 : 0;
  a = (w - 6 * b) / 4;
  if (a < 0) throw std::invalid_argument("weight not representable");
}

Dense dense_pow(const Dense& base, int e, long N) {
  Dense out(static_cast<std::size_t>(N) + 1, mpz_class(0));
  out[0] = 1;
  for (int i = 0; i < e; ++i) out = dense_mul(out, base, N);
  return out;
}

const std::vector<int> kExactWeights = {12, 16, 18, 20, 22, 26};

}  // namespace

const mpz_class& Eigenform::a(long n) const {
  if (n < 1 || n > truncation()) throw std::out_of_range("out of table");
  return a_[static_cast<std::size_t>(n - 1)];
}

int cusp_dim(int k) {
  if (k % 2 != 0 || k < 12) return 0;
  // monomials E4^a E6^b Delta^c of weight k with b in {0,1}, c >= 1
  int count = 0;
  for (int c = 1; 12 * c <= k; ++c) {
    int w = k - 12 * c;
    if (w == 2) continue;
    ++count;
  }
  return count;
}

std::vector<QExpansion> miller_basis(int k, long N) {
  std::vector<QExpansion> out;
  int d = cusp_dim(k);
  if (d == 0) return out;
  if (N < d) throw std::invalid_argument("truncation below dimension");

  Dense e4 = eisenstein(4, N);
  Dense e6 = eisenstein(6, N);
  Dense e4cube = dense_pow(e4, 3, N);
  Dense e6sq = dense_mul(e6, e6, N);
  Dense delta(static_cast<std::size_t>(N) + 1, mpz_class(0));
  for (long n = 0; n <= N; ++n) {
    mpz_class t = e4cube[n] - e6sq[n];
    mpz_divexact_ui(delta[n].get_mpz_t(), t.get_mpz_t(), 1728);
  }

  std::vector<Dense> rows;
  Dense dp = delta;  // Delta^j
  for (int j = 1; j <= d; ++j) {
    int w = k - 12 * j;
    int a = 0, b = 0;
    split_weight(w, a, b);
    Dense m = dp;
    for (int i = 0; i < a; ++i) m = dense_mul(m, e4, N);
    if (b) m = dense_mul(m, e6, N);
    rows.push_back(std::move(m));
    if (j < d) dp = dense_mul(dp, delta, N);
  }

  // rows[j-1] = q^j + ...; clear columns 1..d above/below each pivot
  std::vector<std::vector<mpq_class>> rq(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    rq[i].assign(static_cast<std::size_t>(N) + 1, mpq_class(0));
    for (long n = 0; n <= N; ++n) rq[i][n] = mpq_class(rows[i][n]);
  }
  for (int piv = 0; piv < d; ++piv) {
    for (int i = 0; i < d; ++i) {
      if (i == piv) continue;
      mpq_class factor = rq[i][piv + 1];
      if (factor == 0) continue;
      for (long n = piv + 1; n <= N; ++n) rq[i][n] -= factor * rq[piv][n];
    }
  }

  for (int i = 0; i < d; ++i) {
    QExpansion f(k, N);
    for (long n = 1; n <= N; ++n) f.set_coeff(n, rq[i][n]);
    out.push_back(std::move(f));
  }
  return out;
}

QExpansion hecke_apply(long m, const QExpansion& f) {
  if (m < 1) throw std::invalid_argument("Hecke index must be positive");
  long Nout = f.truncation() / m;
  if (Nout < 1) throw std::invalid_argument("insufficient truncation");
  int k = f.weight();
  QExpansion out(k, Nout);
  for (long n = 1; n <= Nout; ++n) {
    mpq_class acc(0);
    long g = std::gcd(m, n);
    for (long dd = 1; dd <= g; ++dd) {
      if (g % dd != 0) continue;
      mpz_class dk;
      mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(dd), static_cast<unsigned long>(k - 1));
      acc += mpq_class(dk) * f.coeff(m * n / (dd * dd));
    }
    out.set_coeff(n, acc);
  }
  return out;
}

Eigenform eigenform(int k, long N) {
  if (std::find(kExactWeights.begin(), kExactWeights.end(), k) == kExactWeights.end()) {
    throw std::invalid_argument("nontrivial coefficient field; exact mode unavailable");
  }
  if (N < 1) throw std::invalid_argument("truncation must be positive");

  Dense delta = delta_series(N);
  std::vector<mpz_class> a(static_cast<std::size_t>(N), mpz_class(0));

  if (k == 12) {
    for (long n = 1; n <= N; ++n) a[n - 1] = delta[n];
    return Eigenform(k, std::move(a));
  }

  Dense e = eisenstein(k - 12, N);
  auto direct = [&](long n) {
    mpz_class acc(0);
    for (long j = 0; j <= n - 1; ++j) {
      if (e[j] == 0) continue;
      acc += e[j] * delta[n - j];
    }
    return acc;
  };

  // Direct convolution on a prefix plus all primes; prime powers by the
  // Hecke recursion, composites by multiplicativity.
  long direct_to = std::min<long>(N, 2048);
  for (long n = 1; n <= direct_to; ++n) a[n - 1] = direct(n);

  auto spf = spf_table(static_cast<std::int32_t>(N));
  mpz_class pk1;
  for (long p = 2; p <= N; ++p) {
    if (spf[p] != p) continue;
    if (p > direct_to) a[p - 1] = direct(p);
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k - 1));
    // a(p^{j+1}) = a(p) a(p^j) - p^{k-1} a(p^{j-1})
    for (mpz_class q = mpz_class(p) * p; q <= N; q *= p) {
      long qn = q.get_si();
      long prev = qn / p;
      a[qn - 1] = a[p - 1] * a[prev - 1] - pk1 * a[prev / p - 1];
    }
  }
  // composites by multiplicativity
  for (long n = 2; n <= N; ++n) {
    if (n <= direct_to) continue;
    long p = spf[n];
    long pe = 1;
    long m = n;
    while (m % p == 0) { m /= p; pe *= p; }
    if (m == 1) continue;  // prime power, already set
    a[n - 1] = a[pe - 1] * a[m - 1];
  }
  return Eigenform(k, std::move(a));
}

Real eigen_lambda(const Eigenform& f, long n, mpfr_prec_t precision) {
  const mpz_class& an = f.a(n);  // throws "out of table" if needed
  mpfr_prec_t work = precision + 32;
  mpz_class nk;
  mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(f.weight() - 1));
  Real num(an, work);
  Real den = sqrt(Real(nk, work));
  return to_prec(num / den, precision);
}

Complex satake_root(const Real& lam, mpfr_prec_t precision) {
  mpfr_prec_t work = precision + 32;
  Real l = to_prec(lam, work);
  Real half(0.5, work);
  Real disc = Real(4L, work) - l * l;
  if (disc.sign() >= 0) {
    // conjugate pair on the unit circle; take Im >= 0
    return to_prec(Complex((l * half), (sqrt(disc) * half)), precision);
  }
  // real roots; tie rule |alpha| >= 1
  Real root = sqrt(-disc);
  Real r1 = (l + root) * half;
  Real r2 = (l - root) * half;
  Real pick = (abs(r1) >= abs(r2)) ? r1 : r2;
  return to_prec(Complex(pick, Real(0.0, work)), precision);
}

SatakeLocalData satake(const Eigenform& f, long p, mpfr_prec_t precision) {
  if (!is_prime(p)) throw std::invalid_argument("Satake parameter requires a prime index");
  Real lam = eigen_lambda(f, p, precision + 32);
  SatakeLocalData out;
  out.p = p;
  out.alpha = to_prec(satake_root(lam, precision + 32), precision);
  out.precision = precision;
  return out;
}

}  // namespace que
