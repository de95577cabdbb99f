#include "que/minimax.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace que {

namespace {

double holque_term(double alpha, double lf, double lg) {
  return alpha * (lf * lf + lg * lg - 1) / 2 +
         (1 - alpha) * ((lf - 1) * (lf - 1) + (lg - 1) * (lg - 1)) / 4;
}

double appendix_term(double xi, double l) {
  double u = l * l - 1;
  return xi / 2 * (l - 1) * (l - 1) + (1 - xi) * (u - 0.5 * std::fabs(u) + 0.25 * (1 - u * u));
}

// 1-d golden-section minimization on [lo, hi]
double golden_min(double lo, double hi, const std::function<double(double)>& f, double tol) {
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  while (b - a > tol) {
    if (f(c) < f(d)) b = d; else a = c;
    c = b - gr * (b - a);
    d = a + gr * (b - a);
  }
  return 0.5 * (a + b);
}

// inner min over one lambda in [0,2] for a fixed outer value; the grid is
// stratified at the kink lambda = 1 and both endpoints are always evaluated
double min_over_lambda(const std::function<double(double)>& f, int grid, double tol,
                       double* argmin) {
  double best = f(0.0);
  double best_l = 0.0;
  for (double l : {1.0, 2.0}) {
    double v = f(l);
    if (v < best) { best = v; best_l = l; }
  }
  for (int half = 0; half < 2; ++half) {
    double lo = half == 0 ? 0.0 : 1.0;
    double hi = half == 0 ? 1.0 : 2.0;
    int cell = -1;
    double cell_best = 1e300;
    for (int i = 0; i <= grid; ++i) {
      double l = lo + (hi - lo) * i / grid;
      double v = f(l);
      if (v < cell_best) { cell_best = v; cell = i; }
    }
    double a = lo + (hi - lo) * std::max(0, cell - 1) / grid;
    double b = lo + (hi - lo) * std::min(grid, cell + 1) / grid;
    double l = golden_min(a, b, f, tol * 1e-3);
    double v = f(l);
    if (v < best) { best = v; best_l = l; }
    if (cell_best < best) { best = cell_best; best_l = lo + (hi - lo) * cell / grid; }
  }
  if (argmin) *argmin = best_l;
  return best;
}

}  // namespace

double minimax_inner_min(const MinimaxProblem& problem, double alpha, std::vector<double>* argmin) {
  double tol = problem.tolerance;
  switch (problem.objective) {
    case MinimaxObjective::kHolQue2Var: {
      // separable in lf, lg; minimize each coordinate over [0,2]
      double arg_f = 0, arg_g = 0;
      auto f_only = [&](double l) { return holque_term(alpha, l, 1.0); };
      min_over_lambda(f_only, problem.inner_grid, tol, &arg_f);
      auto g_only = [&](double l) { return holque_term(alpha, arg_f, l); };
      double v = min_over_lambda(g_only, problem.inner_grid, tol, &arg_g);
      // one more sweep over lf with lg fixed (coordinate descent is exact
      // for this separable convex objective; the sweep confirms it)
      auto f_again = [&](double l) { return holque_term(alpha, l, arg_g); };
      v = min_over_lambda(f_again, problem.inner_grid, tol, &arg_f);
      if (argmin) *argmin = {arg_f, arg_g};
      return v;
    }
    case MinimaxObjective::kAppendix1Var: {
      double arg = 0;
      auto f = [&](double l) { return appendix_term(alpha, l); };
      double v = min_over_lambda(f, problem.inner_grid, tol, &arg);
      if (argmin) *argmin = {arg};
      return v;
    }
    case MinimaxObjective::kDegenerateQuadratic: {
      double arg = 0;
      auto f = [&](double l) { return (l - 1) * (l - 1); };
      double v = min_over_lambda(f, problem.inner_grid, tol, &arg);
      if (argmin) *argmin = {arg};
      return v;
    }
  }
  throw std::invalid_argument("unknown objective");
}

MinimaxResult solve_minimax(const MinimaxProblem& problem) {
  auto envelope = [&](double alpha) { return minimax_inner_min(problem, alpha, nullptr); };

  // coarse scan, then ternary refinement on the concave envelope
  double best_alpha = 0, best_val = -1e300;
  for (int i = 0; i <= problem.outer_grid; ++i) {
    double a = static_cast<double>(i) / problem.outer_grid;
    double v = envelope(a);
    if (v > best_val) { best_val = v; best_alpha = a; }
  }
  double lo = std::max(0.0, best_alpha - 2.0 / problem.outer_grid);
  double hi = std::min(1.0, best_alpha + 2.0 / problem.outer_grid);
  while (hi - lo > problem.tolerance * 1e-2) {
    double m1 = lo + (hi - lo) / 3;
    double m2 = hi - (hi - lo) / 3;
    if (envelope(m1) < envelope(m2)) lo = m1; else hi = m2;
  }
  MinimaxResult out;
  out.alpha_star = 0.5 * (lo + hi);
  // parabola polish through three nearby samples; the envelope is smooth
  // around an interior maximizer even though the inner objective has a kink
  double h = 1e-4;
  if (out.alpha_star - h >= 0 && out.alpha_star + h <= 1) {
    double fm = envelope(out.alpha_star - h);
    double f0 = envelope(out.alpha_star);
    double fp = envelope(out.alpha_star + h);
    double curv = fm + fp - 2 * f0;
    if (curv < 0) {
      double shift = h * (fm - fp) / (2 * curv);
      if (std::fabs(shift) < h) out.alpha_star += shift;
    }
  }
  out.value = minimax_inner_min(problem, out.alpha_star, &out.inner_argmin);
  out.inner_at_endpoint = false;
  for (double l : out.inner_argmin) {
    if (l < 1e-9 || l > 2 - 1e-9) out.inner_at_endpoint = true;
  }
  return out;
}

std::string objective_name(MinimaxObjective o) {
  switch (o) {
    case MinimaxObjective::kHolQue2Var: return "holQUE-2var";
    case MinimaxObjective::kAppendix1Var: return "appendix-1var";
    case MinimaxObjective::kDegenerateQuadratic: return "degenerate-quadratic";
  }
  return "unknown";
}

}  // namespace que
