#ifndef QUE_MINIMAX_HPP
#define QUE_MINIMAX_HPP

#include <string>
#include <vector>

#include "que/real.hpp"

namespace que {

enum class MinimaxObjective {
  kHolQue2Var,     // alpha (lf^2+lg^2-1)/2 + (1-alpha)((lf-1)^2+(lg-1)^2)/4
  kAppendix1Var,   // xi/2 (l-1)^2 + (1-xi)(l^2-1 - |l^2-1|/2 + (1-(l^2-1)^2)/4)
  kDegenerateQuadratic,  // (l-1)^2 alone (inner-solver check)
};

struct MinimaxProblem {
  MinimaxObjective objective = MinimaxObjective::kHolQue2Var;
  double tolerance = 1e-10;
  int outer_grid = 64;    // coarse alpha scan before ternary refinement
  int inner_grid = 2048;  // inner lambda grid per variable
};

struct MinimaxResult {
  double value = 0;
  double alpha_star = 0;
  std::vector<double> inner_argmin;
  bool inner_at_endpoint = false;
};

// max over the outer variable of the inner minimum: outer ternary search on
// the concave envelope, inner dense grid (stratified at the |l^2-1| kink)
// with golden-section refinement.
MinimaxResult solve_minimax(const MinimaxProblem& problem);

// Inner minimum at a fixed outer value (exposed for the degenerate check).
double minimax_inner_min(const MinimaxProblem& problem, double alpha,
                         std::vector<double>* argmin = nullptr);

std::string objective_name(MinimaxObjective o);

}  // namespace que

#endif
