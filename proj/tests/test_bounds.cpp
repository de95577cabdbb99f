#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "que/constants.hpp"
#include "que/eulerprod.hpp"
#include "que/ichino.hpp"
#include "que/minimax.hpp"

using namespace que;

namespace {
const mpfr_prec_t kPrec = 128;
double d(const Real& x) { return x.to_double(); }
}

TEST_CASE("two-variable minimax recovers the closed form") {
  MinimaxProblem p;
  p.objective = MinimaxObjective::kHolQue2Var;
  MinimaxResult r = solve_minimax(p);
  double target = 3.5 - 2 * std::sqrt(3.0);
  double alpha_target = 2 / std::sqrt(3.0) - 1;
  CHECK(std::fabs(r.value - target) < 1e-9);
  CHECK(std::fabs(r.alpha_star - alpha_target) < 1e-6);
  // inner minimizer sits at lambda = sqrt(3) - 1 in both coordinates
  REQUIRE(r.inner_argmin.size() == 2);
  for (double l : r.inner_argmin) CHECK(std::fabs(l - (std::sqrt(3.0) - 1)) < 1e-4);
}

TEST_CASE("appendix minimax value and argmin report") {
  MinimaxProblem p;
  p.objective = MinimaxObjective::kAppendix1Var;
  MinimaxResult r = solve_minimax(p);
  CHECK(std::fabs(r.value - 0.00348) < 5e-4);
  CHECK(r.value < 0.007359);
  REQUIRE(r.inner_argmin.size() == 1);
  CHECK(!r.inner_at_endpoint);  // interior point near the kink, not 0 or 2
}

TEST_CASE("degenerate inner objective") {
  MinimaxProblem p;
  p.objective = MinimaxObjective::kDegenerateQuadratic;
  std::vector<double> arg;
  double v = minimax_inner_min(p, 0.5, &arg);
  CHECK(std::fabs(v) < 1e-18);
  REQUIRE(arg.size() == 1);
  CHECK(std::fabs(arg[0] - 1.0) < 1e-7);
}

TEST_CASE("minimax is grid-stable and the envelope is concave") {
  MinimaxProblem p;
  p.objective = MinimaxObjective::kAppendix1Var;
  MinimaxResult r1 = solve_minimax(p);
  MinimaxProblem p2 = p;
  p2.outer_grid *= 2;
  p2.inner_grid *= 2;
  MinimaxResult r2 = solve_minimax(p2);
  CHECK(std::fabs(r1.value - r2.value) < p.tolerance);

  // midpoint concavity of the inner-min envelope on sampled triples
  for (double a : {0.1, 0.3, 0.5, 0.7}) {
    double g0 = minimax_inner_min(p, a);
    double g1 = minimax_inner_min(p, a + 0.1);
    double gm = minimax_inner_min(p, a + 0.05);
    CHECK(gm >= 0.5 * (g0 + g1) - 1e-9);
  }
}

TEST_CASE("mertens product basics") {
  MertensResult one = mertens_product(Real(0, kPrec), 1000, kPrec);
  CHECK(d(one.product) == 1.0);

  // strictly decreasing in x for positive delta
  MertensResult a = mertens_product(Real(0.5, kPrec), 1000, kPrec);
  MertensResult b = mertens_product(Real(0.5, kPrec), 5000, kPrec);
  CHECK(b.product < a.product);
  CHECK(b.prime_count > a.prime_count);

  CHECK_THROWS_AS(mertens_product(Real(2, kPrec), 100, kPrec), std::invalid_argument);
  CHECK_THROWS_AS(mertens_product(Real(-0.5, kPrec), 100, kPrec), std::invalid_argument);
}

TEST_CASE("normalized mertens products stay in a fixed bracket") {
  for (double delta : {0.25, 0.5, 1.0}) {
    for (double x : {1e3, 1e4, 1e5, 1e6}) {
      MertensResult r = mertens_product(Real(delta, kPrec), x, kPrec);
      double norm = d(r.normalized);
      CHECK(norm > 0.1);
      CHECK(norm < 10.0);
    }
  }
}

TEST_CASE("correlation products for delta") {
  Eigenform f = eigenform(12, 10000);
  CorrelationResult c = correlation_products(f, f, 1e4, kPrec);
  CHECK(d(c.sound_product) > 0);
  CHECK(d(c.sound_product) <= 1.0);
  CHECK(d(c.holo_product) > 0);
  CHECK(d(c.holo_product) <= 1.0);
  CHECK(c.combined_min <= c.sound_product);
  CHECK(c.combined_min <= c.holo_product);
  // exponent proxy lands within the coarse window around 7/2 - 2 sqrt(3)
  double expo = -std::log(d(c.interpolated)) / std::log(std::log(1e4));
  double target = 3.5 - 2 * std::sqrt(3.0);
  CHECK(std::fabs(expo - target) >= 0.01);
  CHECK(std::fabs(expo - target) <= 0.2);

  CHECK_THROWS_AS(correlation_products(f, f, 2e4, kPrec), std::invalid_argument);
}

TEST_CASE("correlation product degenerate providers") {
  // lambda = 1 everywhere: every holomorphic factor is exactly 1
  auto ones = [](long) { return Real(1, kPrec); };
  CorrelationResult c1 = correlation_products_from(ones, ones, 1000, kPrec);
  CHECK(d(c1.holo_product) == 1.0);
  // sound factor: 1 - (1+1-1)/2p < 1
  CHECK(d(c1.sound_product) < 1.0);

  // lambda = 0 everywhere: sound factor 1 + 1/2p exceeds 1 per prime
  auto zeros = [](long) { return Real(0, kPrec); };
  CorrelationResult c0 = correlation_products_from(zeros, zeros, 1000, kPrec);
  CHECK(d(c0.sound_product) > 1.0);
}

TEST_CASE("ichino local values") {
  IchinoValue u = ichino_local({7, 0, 0, IchinoCase::kUnramified, 7.0 / 64.0}, kPrec);
  CHECK(!u.is_bound);
  CHECK(u.exact == 1);

  IchinoValue rd = ichino_local({5, 1, 0, IchinoCase::kRamifiedDistinct, 7.0 / 64.0}, kPrec);
  CHECK(!rd.is_bound);
  CHECK(rd.exact == mpq_class(1, 5));

  IchinoValue re = ichino_local({5, 1, 0, IchinoCase::kRamifiedEqual, 7.0 / 64.0}, kPrec);
  CHECK(re.is_bound);
  CHECK(d(re.bound) == doctest::Approx(100000.0 / 5));

  // theta enters through p^{2 theta m}
  IchinoValue rt = ichino_local({5, 2, 1, IchinoCase::kRamifiedEqual, 0.0}, kPrec);
  CHECK(d(rt.bound) == doctest::Approx(100000.0 / 25 * 4));

  CHECK_THROWS_AS(ichino_local({5, 0, 0, IchinoCase::kRamifiedEqual, 7.0 / 64.0}, kPrec),
                  std::invalid_argument);
  CHECK_THROWS_AS(ichino_local({5, 1, 2, IchinoCase::kRamifiedEqual, 7.0 / 64.0}, kPrec),
                  std::invalid_argument);
  CHECK_THROWS_AS(ichino_local({5, 1, 0, IchinoCase::kUnramified, 7.0 / 64.0}, kPrec),
                  std::invalid_argument);
}

TEST_CASE("named constants registry") {
  auto regs = named_constants();
  REQUIRE(regs.size() == 6);
  auto find = [&](const std::string& name) -> const NamedConstant& {
    for (const auto& r : regs) {
      if (r.name == name) return r;
    }
    REQUIRE(false);
    return regs[0];
  };
  CHECK(find("7/2 - 2*sqrt(3)").value.str(25).substr(0, 16) == "3.58983848622454");
  CHECK(find("(23 - 2*sqrt(3))/12").value.str(25).substr(0, 16) == "1.62799153207185");
  CHECK(find("31/2 - 4*sqrt(15)").value.str(25).substr(0, 16) == "8.06661517033245");
  CHECK(find("2/sqrt(3) - 1").value.str(25).substr(0, 16) == "1.54700538379251");
  CHECK(std::fabs(d(find("appendix minimax value").value) - 0.00348) < 5e-4);
  CHECK(find("appendix minimax value").computed);
  for (const auto& r : regs) CHECK(!r.provenance.empty());
  // 50 significant digits survive the round trip
  CHECK(find("7/2 - 2*sqrt(3)").value.str(50).size() >= 50);
}
