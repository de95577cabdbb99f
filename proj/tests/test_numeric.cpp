#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "que/gammafn.hpp"
#include "que/localfactor.hpp"
#include "que/parallel.hpp"

using namespace que;

namespace {
double d(const Real& x) { return x.to_double(); }
}

TEST_CASE("real arithmetic and precision propagation") {
  Real a(3, 128), b(2, 256);
  CHECK((a + b).prec() == 256);
  CHECK(d(a / b) == doctest::Approx(1.5));
  CHECK(d(pow(a, 4L)) == doctest::Approx(81));
  CHECK(Real("0.5", 128) == Real(0.5, 128));
  CHECK(d(Real::pow2(-10, 64)) == doctest::Approx(1.0 / 1024));
  CHECK(d(abs(Real(-7, 64))) == 7);
  Real mp = Real(mpq_class(1, 3), 128);
  CHECK(d(mp * Real(3, 128)) == doctest::Approx(1.0));
}

TEST_CASE("complex arithmetic identities") {
  mpfr_prec_t p = 128;
  Complex i(Real(0, p), Real(1, p));
  CHECK(d(abs(i * i + Complex(1L, p))) < 1e-35);
  Complex z(Real(1.25, p), Real(-0.75, p));
  CHECK(d(abs(exp(log(z)) - z)) < 1e-35);
  CHECK(d(abs(sqrt(z) * sqrt(z) - z)) < 1e-35);
  CHECK(d(abs(conj(z) * z)) == doctest::Approx(d(norm(z))));
  // n^{-s} against direct pow
  Complex s(Real(2.5, p), Real(1.5, p));
  Complex v = pow_int_neg(7, s);
  Complex w = exp(-(s * Complex(log(Real(7, p)))));
  CHECK(d(abs(v - w)) < 1e-36);
}

TEST_CASE("bernoulli numbers are exact") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
}

TEST_CASE("complex log gamma against the real axis and identities") {
  mpfr_prec_t p = 128;
  // matches mpfr's real lgamma at scattered points
  for (double x : {0.75, 1.0, 2.5, 6.25, 41.0}) {
    Complex z(Real(x, p), Real(0, p));
    Real ref = log_gamma(Real(x, p), p);
    CHECK(d(abs(log_gamma(z, p).re() - ref)) < 1e-35);
    CHECK(d(abs(log_gamma(z, p).im())) < 1e-35);
  }
  // Gamma(1/2) = sqrt(pi)
  Complex half(Real(0.5, p), Real(0, p));
  CHECK(d(abs(log_gamma(half, p).re() - log(sqrt(Real::pi(p))))) < 1e-35);
  // recurrence at complex arguments
  for (double t : {0.5, 3.0, 11.0}) {
    Complex z(Real(1.75, p), Real(t, p));
    Complex r = log_gamma(z + Complex(1L, p), p) - log_gamma(z, p) - log(z);
    CHECK(d(abs(r)) < 1e-35);
  }
  // |Gamma(i)|^2 = pi / sinh(pi)
  Complex zi(Real(0, p), Real(1, p));
  Real lhs = log_gamma(zi, p).re() * Real(2, p);
  Real sh(p), ch(p);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), Real::pi(p).raw(), MPFR_RNDN);
  CHECK(d(abs(lhs - log(Real::pi(p) / sh))) < 1e-35);
}

TEST_CASE("truncated series reciprocal round-trip") {
  mpfr_prec_t p = 128;
  std::uint64_t state = 42;
  auto rnd = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53 * 2 - 1;
  };
  std::vector<Complex> a;
  a.push_back(Complex(1L, p));
  for (int j = 1; j <= 14; ++j) a.push_back(Complex(Real(rnd(), p), Real(rnd(), p)));
  auto inv = series_reciprocal(a, 14);
  auto back = series_reciprocal(inv, 14);
  for (int j = 0; j <= 14; ++j) {
    CHECK(d(abs(back[j] - a[j])) < 1e-30);
  }
  auto prod = series_mul(a, inv, 14);
  CHECK(d(abs(prod[0] - Complex(1L, p))) < 1e-30);
  for (int j = 1; j <= 14; ++j) CHECK(d(abs(prod[j])) < 1e-30);
}

TEST_CASE("series in u^2 embedding") {
  mpfr_prec_t p = 64;
  std::vector<Complex> a{Complex(1L, p), Complex(2L, p), Complex(3L, p)};
  auto e = series_in_u2(a, 5);
  CHECK(d(e[0].re()) == 1);
  CHECK(d(e[1].re()) == 0);
  CHECK(d(e[2].re()) == 2);
  CHECK(d(e[3].re()) == 0);
  CHECK(d(e[4].re()) == 3);
}

TEST_CASE("tree reduction is independent of thread cap") {
  std::vector<std::string> outs;
  for (int cap : {1, 2, 8}) {
    set_thread_cap(cap);
    std::vector<Real> slots;
    for (int i = 0; i < 37; ++i) slots.push_back(Real(1.0 / (i + 1), 128));
    Real total = tree_reduce(slots, Real(0, 128), [](const Real& a, const Real& b) { return a + b; });
    outs.push_back(total.str(40));
  }
  set_thread_cap(1);
  CHECK(outs[0] == outs[1]);
  CHECK(outs[0] == outs[2]);
}
