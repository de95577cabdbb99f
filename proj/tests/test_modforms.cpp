#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "que/eigenform.hpp"
#include "que/primes.hpp"

using namespace que;

namespace {

// Independent oracle: Delta = q prod (1-q^n)^24 through the pentagonal-number
// expansion of prod (1-q^n), raised to the 24th power by repeated squaring of
// dense integer series.  No shared code with the library construction.
std::vector<mpz_class> eta24_oracle(long N) {
  long M = N - 1;
  std::vector<mpz_class> euler(static_cast<std::size_t>(M) + 1, mpz_class(0));
  euler[0] = 1;
  for (long j = 1;; ++j) {
    long g1 = j * (3 * j - 1) / 2;
    long g2 = j * (3 * j + 1) / 2;
    if (g1 > M && g2 > M) break;
    mpz_class sign = (j % 2 == 0) ? 1 : -1;
    if (g1 <= M) euler[g1] += sign;
    if (g2 <= M) euler[g2] += sign;
  }
  auto mul = [M](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(static_cast<std::size_t>(M) + 1, mpz_class(0));
    for (long i = 0; i <= M; ++i) {
      if (a[i] == 0) continue;
      for (long j = 0; i + j <= M; ++j) {
        if (b[j] == 0) continue;
        c[i + j] += a[i] * b[j];
      }
    }
    return c;
  };
  auto p2 = mul(euler, euler);   // ^2
  auto p4 = mul(p2, p2);         // ^4
  auto p8 = mul(p4, p4);         // ^8
  auto p16 = mul(p8, p8);        // ^16
  auto p24 = mul(p16, p8);       // ^24
  std::vector<mpz_class> delta(static_cast<std::size_t>(N) + 1, mpz_class(0));
  for (long n = 1; n <= N; ++n) delta[n] = p24[n - 1];
  return delta;
}

}  // namespace

TEST_CASE("delta matches the eta-product oracle") {
  const long N = 300;
  auto oracle = eta24_oracle(N);
  Eigenform f = eigenform(12, N);
  for (long n = 1; n <= N; ++n) CHECK(f.a(n) == oracle[n]);
  auto basis = miller_basis(12, N);
  REQUIRE(basis.size() == 1);
  for (long n = 1; n <= N; ++n) CHECK(basis[0].coeff(n) == mpq_class(oracle[n]));
}

TEST_CASE("miller basis dimensions and echelon structure") {
  CHECK(miller_basis(10, 10).empty());
  CHECK(miller_basis(14, 10).empty());
  CHECK(miller_basis(7, 10).empty());

  auto b12 = miller_basis(12, 10);
  REQUIRE(b12.size() == 1);
  CHECK(b12[0].coeff(1) == 1);
  CHECK(b12[0].coeff(2) == -24);
  CHECK(b12[0].coeff(3) == 252);
  CHECK(b12[0].coeff(4) == -1472);

  auto b24 = miller_basis(24, 10);
  REQUIRE(b24.size() == 2);
  CHECK(b24[0].coeff(1) == 1);
  CHECK(b24[0].coeff(2) == 0);
  CHECK(b24[1].coeff(1) == 0);
  CHECK(b24[1].coeff(2) == 1);

  // dimension oracle: count monomials E4^a E6^b Delta^c, b in {0,1}, c >= 1
  for (int k = 12; k <= 60; k += 2) {
    int count = 0;
    for (int c = 1; 12 * c <= k; ++c) {
      for (int b = 0; b <= 1; ++b) {
        int rem = k - 12 * c - 6 * b;
        if (rem >= 0 && rem % 4 == 0) ++count;
      }
    }
    CHECK(cusp_dim(k) == count);
    auto basis = miller_basis(k, 16);
    CHECK(static_cast<int>(basis.size()) == count);
    // exact echelon structure: element i is q^{i+1} + O(q^{d+1})
    for (int i = 0; i < count; ++i) {
      for (int j = 1; j <= count; ++j) {
        CHECK(basis[i].coeff(j) == (j == i + 1 ? 1 : 0));
      }
    }
  }

  CHECK_THROWS_WITH(miller_basis(24, 1), "truncation below dimension");
}

TEST_CASE("hecke operator action") {
  auto b12 = miller_basis(12, 60);
  const QExpansion& delta = b12[0];

  QExpansion t1 = hecke_apply(1, delta);
  for (long n = 1; n <= 60; ++n) CHECK(t1.coeff(n) == delta.coeff(n));

  QExpansion t2 = hecke_apply(2, delta);
  for (long n = 1; n <= t2.truncation(); ++n) CHECK(t2.coeff(n) == -24 * delta.coeff(n));

  // T_2 T_3 = T_6 for coprime indices
  QExpansion t3 = hecke_apply(3, delta);
  QExpansion t23 = hecke_apply(2, t3);
  QExpansion t6 = hecke_apply(6, delta);
  for (long n = 1; n <= t6.truncation(); ++n) CHECK(t23.coeff(n) == t6.coeff(n));

  CHECK_THROWS_WITH(hecke_apply(100, miller_basis(12, 50)[0]), "insufficient truncation");

  // eigenform relation a(m) f = T_m f for every m <= 50
  Eigenform f = eigenform(12, 3000);
  auto big = miller_basis(12, 2600);
  for (long m = 1; m <= 50; ++m) {
    QExpansion tm = hecke_apply(m, big[0]);
    for (long n = 1; n <= tm.truncation(); ++n) {
      CHECK(tm.coeff(n) == mpq_class(f.a(m)) * big[0].coeff(n));
    }
  }
}

TEST_CASE("eigenform values and errors") {
  Eigenform f = eigenform(12, 5);
  const long expect[5] = {1, -24, 252, -1472, 4830};
  for (long n = 1; n <= 5; ++n) CHECK(f.a(n) == expect[n - 1]);

  Eigenform g = eigenform(12, 3000);
  CHECK(g.a(6) == g.a(2) * g.a(3));
  CHECK(g.a(2000) == g.a(16) * g.a(125));

  CHECK_THROWS_WITH(eigenform(24, 10), "nontrivial coefficient field; exact mode unavailable");
  CHECK_THROWS_WITH(eigenform(11, 10), "nontrivial coefficient field; exact mode unavailable");
  CHECK_THROWS_AS((void)g.a(3001), std::out_of_range);
}

TEST_CASE("eigenform agrees with the miller construction for every weight") {
  for (int k : {12, 16, 18, 20, 22, 26}) {
    Eigenform f = eigenform(k, 200);
    auto basis = miller_basis(k, 200);
    REQUIRE(basis.size() == 1);
    for (long n = 1; n <= 200; ++n) CHECK(mpq_class(f.a(n)) == basis[0].coeff(n));
  }
}

TEST_CASE("recursion fill agrees with direct convolution past the prefix") {
  // direct prefix ends at 2048; check across the boundary against miller
  Eigenform f = eigenform(16, 2500);
  auto basis = miller_basis(16, 2500);
  for (long n = 2040; n <= 2500; ++n) CHECK(mpq_class(f.a(n)) == basis[0].coeff(n));
}

TEST_CASE("normalized eigenvalues") {
  Eigenform f = eigenform(12, 2000);
  mpfr_prec_t p = 128;
  CHECK(eigen_lambda(f, 1, p) == Real(1, p));
  // lambda(2) = -24 / 2^{11/2}
  Real expect = Real(-24, p + 32) / sqrt(pow(Real(2, p + 32), 11L));
  CHECK(abs(eigen_lambda(f, 2, p) - expect).to_double() < 1e-36);
  // lambda(4) = -1472/2^11 = -0.71875 exactly
  CHECK(eigen_lambda(f, 4, p) == Real(-0.71875, p));
  // Deligne bound at the lambda level
  for (long n = 1; n <= 2000; ++n) {
    CHECK(abs(eigen_lambda(f, n, 64)).to_double() <= divisor_count(n) + 1e-12);
  }
  CHECK_THROWS_AS(eigen_lambda(f, 2001, p), std::out_of_range);
}

TEST_CASE("deligne bound in exact integer form") {
  for (int k : {12, 16, 26}) {
    Eigenform f = eigenform(k, 2000);
    mpz_class nk, t2;
    for (long n = 1; n <= 2000; ++n) {
      mpz_ui_pow_ui(nk.get_mpz_t(), n, k - 1);
      t2 = divisor_count(n);
      t2 *= t2;
      CHECK(f.a(n) * f.a(n) <= t2 * nk);
    }
  }
}

TEST_CASE("satake parameters") {
  mpfr_prec_t p = 128;
  // double root cases
  Complex a1 = satake_root(Real(2, p), p);
  CHECK(abs(a1 - Complex(1L, p)).to_double() < 1e-30);
  Complex a0 = satake_root(Real(0, p), p);
  CHECK(abs(a0 - Complex(Real(0, p), Real(1, p))).to_double() < 1e-30);
  // |lam| > 2 picks the root of modulus >= 1
  Complex abig = satake_root(Real(2.5, p), p);
  CHECK(abs(abig).to_double() >= 1.0);
  CHECK(abig.im().is_zero());

  Eigenform f = eigenform(12, 100);
  SatakeLocalData s = satake(f, 2, p);
  CHECK(abs(abs(s.alpha) - Real(1, p)).to_double() < 1e-30);
  Real lam = eigen_lambda(f, 2, p);
  CHECK(abs(s.alpha + s.alpha_inv() - Complex(lam)).to_double() < 1e-30);
  CHECK(s.alpha.im().sign() >= 0);
  CHECK_THROWS_AS(satake(f, 4, p), std::invalid_argument);
}

TEST_CASE("qexpansion bookkeeping") {
  auto b12 = miller_basis(12, 40);
  QExpansion d = b12[0];
  CHECK_THROWS_AS(d.coeff(41), std::out_of_range);
  CHECK_THROWS_AS(d.coeff(0), std::out_of_range);
  QExpansion prod = mul(d, d);
  CHECK(prod.weight() == 24);
  CHECK(prod.truncation() == 41);
  CHECK(prod.coeff(2) == 1);    // q * q
  CHECK(prod.coeff(3) == -48);  // 2 a(1) a(2)
  QExpansion sum = d + d;
  CHECK(sum.truncation() == 40);
  CHECK(sum.coeff(2) == -48);
}
