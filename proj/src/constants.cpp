#include "que/constants.hpp"

#include "que/minimax.hpp"

namespace que {

std::vector<NamedConstant> named_constants() {
  // ~50 decimal digits needs ~170 bits; use 200
  const mpfr_prec_t prec = 200;
  Real three(3L, prec);
  Real fifteen(15L, prec);
  std::vector<NamedConstant> out;

  out.push_back({"7/2 - 2*sqrt(3)",
                 "decorrelation log-power exponent; closed form of the two-variable minimax",
                 Real(3.5, prec) - Real(2L, prec) * sqrt(three), false});
  out.push_back({"(23 - 2*sqrt(3))/12",
                 "test-function norm exponent in the level-1 equal-form refinement",
                 (Real(23L, prec) - Real(2L, prec) * sqrt(three)) / Real(12L, prec), false});
  out.push_back({"31/2 - 4*sqrt(15)",
                 "previously best log-power exponent, superseded by 7/2 - 2*sqrt(3)",
                 Real(15.5, prec) - Real(4L, prec) * sqrt(fifteen), false});
  out.push_back({"2/sqrt(3) - 1",
                 "maximizing interpolation weight of the two-variable minimax",
                 Real(2L, prec) / sqrt(three) - Real(1L, prec), false});

  MinimaxProblem appendix;
  appendix.objective = MinimaxObjective::kAppendix1Var;
  MinimaxResult r = solve_minimax(appendix);
  out.push_back({"appendix minimax value",
                 "one-variable kinked minimax, computed here; reported elsewhere as approximately 0.00348",
                 Real(r.value, prec), true});
  out.push_back({"0.007359",
                 "superseded one-variable exponent value corrected by the appendix optimization",
                 Real("0.007359", prec), false});
  return out;
}

}  // namespace que
