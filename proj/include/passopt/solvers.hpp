#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace passopt {

using Matrix = std::vector<std::vector<double>>;

/// Balanced transportation problem: every row ships one unit, column j
/// accepts col_capacity[j] units, sum of capacities equals the row count.
struct TransportationInstance {
  Matrix cost;
  std::vector<int> col_capacity;

  int rows() const { return static_cast<int>(cost.size()); }
  int cols() const { return cost.empty() ? 0 : static_cast<int>(cost[0].size()); }
  void validate() const;  // throws std::invalid_argument when unbalanced or non-finite
};

/// Exact minimum-cost assignment via successive shortest paths. Returns the
/// destination column of each row; the solution is an integral vertex of the
/// transportation polytope.
std::vector<int> solve_transportation(const TransportationInstance& instance);

Matrix assignment_to_matrix(std::span<const int> col_of_row, int cols);

struct FrankWolfeResult {
  Matrix x;
  double objective = 0.0;
  double gap = 0.0;
  int iterations = 0;
};

/// Conditional-gradient ascent of a concave objective over the instance's
/// transportation polytope. The linear oracle is solve_transportation on the
/// negated gradient; steps start at 2/(iter+2) and are halved until the
/// objective does not decrease. Stops at gap <= tol or max_iter.
FrankWolfeResult frank_wolfe_maximize(const std::function<double(const Matrix&)>& value,
                                      const std::function<Matrix(const Matrix&)>& gradient,
                                      const TransportationInstance& polytope, Matrix x0,
                                      int max_iter, double tol);

/// Scale w onto the ball ||w||^2 <= P when it lies outside; identity inside.
std::vector<std::complex<double>> project_power_ball(std::span<const std::complex<double>> w,
                                                     double P);
std::vector<double> project_power_ball(std::span<const double> x, double P);

struct SmoothFunction {
  std::function<double(std::span<const double>)> value;
  std::function<void(std::span<const double>, std::span<double>)> gradient;
};

struct BallConstraint {
  double radius_sq;  // P
};

struct MaximizeOptions {
  double penalty_init = 10.0;
  double penalty_growth = 5.0;
  int max_outer_rounds = 8;
  int max_inner_iters = 400;
  double constraint_tol = 1e-6;
  double pg_tol = 1e-6;
  double armijo_shrink = 0.5;
  double armijo_c = 1e-4;
};

struct MaximizeResult {
  std::vector<double> x;
  double objective = 0.0;
  bool feasible = false;     // max_j g_j <= constraint_tol at x
  double max_violation = 0.0;
  double pg_norm = 0.0;
  int outer_rounds = 0;
};

/// Augmented-Lagrangian maximization of a smooth concave objective subject
/// to smooth convex constraints g_j(x) <= 0 and the ball ||x||^2 <= P. The
/// inner loop is projected gradient ascent with Armijo backtracking. Returns
/// the best feasible iterate seen; result.feasible is false when no iterate
/// met the constraint tolerance.
MaximizeResult constrained_concave_maximize(const SmoothFunction& objective,
                                            std::span<const SmoothFunction> constraints,
                                            BallConstraint ball, std::vector<double> start,
                                            const MaximizeOptions& opts = {});

}  // namespace passopt
