#include "passopt/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace passopt {

void TransportationInstance::validate() const {
  const int R = rows();
  const int C = cols();
  if (R == 0 || C == 0) throw std::invalid_argument("empty transportation instance");
  if (static_cast<int>(col_capacity.size()) != C)
    throw std::invalid_argument("capacity vector does not match cost columns");
  long long total = 0;
  for (int cap : col_capacity) {
    if (cap < 0) throw std::invalid_argument("negative column capacity");
    total += cap;
  }
  if (total != R) throw std::invalid_argument("unbalanced transportation instance");
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != C) throw std::invalid_argument("ragged cost matrix");
    for (double c : row)
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite transportation cost");
  }
}

namespace {

// Min-cost flow on the bipartite supply/demand graph, one shortest-path
// augmentation per row (SPFA handles the negative reduced costs that appear
// when the oracle is called on a negated gradient).
struct MinCostFlow {
  struct Edge {
    int to;
    int cap;
    double cost;
    int rev;
  };

  explicit MinCostFlow(int n) : graph(n) {}

  void add_edge(int from, int to, int cap, double cost) {
    graph[from].push_back({to, cap, cost, static_cast<int>(graph[to].size())});
    graph[to].push_back({from, 0, -cost, static_cast<int>(graph[from].size()) - 1});
  }

  // Sends `amount` units from s to t, returns false if disconnected.
  bool run(int s, int t, int amount) {
    const int n = static_cast<int>(graph.size());
    while (amount > 0) {
      std::vector<double> dist(n, std::numeric_limits<double>::infinity());
      std::vector<int> prev_node(n, -1), prev_edge(n, -1);
      std::vector<char> in_queue(n, 0);
      std::deque<int> queue;
      dist[s] = 0.0;
      queue.push_back(s);
      in_queue[s] = 1;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        in_queue[u] = 0;
        for (int ei = 0; ei < static_cast<int>(graph[u].size()); ++ei) {
          const Edge& e = graph[u][ei];
          if (e.cap <= 0) continue;
          const double nd = dist[u] + e.cost;
          if (nd < dist[e.to] - 1e-15) {
            dist[e.to] = nd;
            prev_node[e.to] = u;
            prev_edge[e.to] = ei;
            if (!in_queue[e.to]) {
              in_queue[e.to] = 1;
              queue.push_back(e.to);
            }
          }
        }
      }
      if (!std::isfinite(dist[t])) return false;
      int push = amount;
      for (int v = t; v != s; v = prev_node[v])
        push = std::min(push, graph[prev_node[v]][prev_edge[v]].cap);
      for (int v = t; v != s; v = prev_node[v]) {
        Edge& e = graph[prev_node[v]][prev_edge[v]];
        e.cap -= push;
        graph[e.to][e.rev].cap += push;
      }
      amount -= push;
    }
    return true;
  }

  std::vector<std::vector<Edge>> graph;
};

}  // namespace

std::vector<int> solve_transportation(const TransportationInstance& instance) {
  instance.validate();
  const int R = instance.rows();
  const int C = instance.cols();
  const int source = R + C;
  const int sink = R + C + 1;
  MinCostFlow flow(R + C + 2);
  for (int r = 0; r < R; ++r) {
    flow.add_edge(source, r, 1, 0.0);
    for (int c = 0; c < C; ++c) flow.add_edge(r, R + c, 1, instance.cost[r][c]);
  }
  for (int c = 0; c < C; ++c) flow.add_edge(R + c, sink, instance.col_capacity[c], 0.0);
  if (!flow.run(source, sink, R)) throw std::runtime_error("transportation instance disconnected");

  std::vector<int> col_of_row(R, -1);
  for (int r = 0; r < R; ++r)
    for (const auto& e : flow.graph[r])
      if (e.to >= R && e.to < R + C && e.cap == 0) col_of_row[r] = e.to - R;
  return col_of_row;
}

Matrix assignment_to_matrix(std::span<const int> col_of_row, int cols) {
  Matrix x(col_of_row.size(), std::vector<double>(cols, 0.0));
  for (size_t r = 0; r < col_of_row.size(); ++r) x[r][col_of_row[r]] = 1.0;
  return x;
}

FrankWolfeResult frank_wolfe_maximize(const std::function<double(const Matrix&)>& value,
                                      const std::function<Matrix(const Matrix&)>& gradient,
                                      const TransportationInstance& polytope, Matrix x0,
                                      int max_iter, double tol) {
  polytope.validate();
  const int R = polytope.rows();
  const int C = polytope.cols();
  FrankWolfeResult out;
  out.x = std::move(x0);
  out.objective = value(out.x);
  out.gap = std::numeric_limits<double>::infinity();

  TransportationInstance oracle = polytope;
  for (int it = 0; it < max_iter; ++it) {
    const Matrix g = gradient(out.x);
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c) {
        if (!std::isfinite(g[r][c])) throw std::runtime_error("non-finite gradient in Frank-Wolfe");
        oracle.cost[r][c] = -g[r][c];
      }
    const auto vertex = solve_transportation(oracle);

    double gap = 0.0;
    for (int r = 0; r < R; ++r) {
      gap += g[r][vertex[r]];
      for (int c = 0; c < C; ++c) gap -= g[r][c] * out.x[r][c];
    }
    out.gap = gap;
    out.iterations = it;
    if (gap <= tol) break;

    double step = 2.0 / (it + 2.0);
    Matrix candidate = out.x;
    for (int halvings = 0; halvings < 40; ++halvings) {
      for (int r = 0; r < R; ++r) {
        for (int c = 0; c < C; ++c)
          candidate[r][c] = out.x[r][c] * (1.0 - step) + (vertex[r] == c ? step : 0.0);
      }
      const double cand_value = value(candidate);
      if (cand_value >= out.objective) {
        out.x = candidate;
        out.objective = cand_value;
        break;
      }
      step *= 0.5;
    }
    out.iterations = it + 1;
  }
  return out;
}

std::vector<std::complex<double>> project_power_ball(std::span<const std::complex<double>> w,
                                                     double P) {
  double norm_sq = 0.0;
  for (const auto& wi : w) norm_sq += std::norm(wi);
  std::vector<std::complex<double>> out(w.begin(), w.end());
  if (norm_sq > P) {
    const double scale = std::sqrt(P / norm_sq);
    for (auto& wi : out) wi *= scale;
  }
  return out;
}

std::vector<double> project_power_ball(std::span<const double> x, double P) {
  double norm_sq = 0.0;
  for (double xi : x) norm_sq += xi * xi;
  std::vector<double> out(x.begin(), x.end());
  if (norm_sq > P) {
    const double scale = std::sqrt(P / norm_sq);
    for (auto& xi : out) xi *= scale;
  }
  return out;
}

namespace {

void project_ball_inplace(std::vector<double>& x, double radius_sq) {
  double norm_sq = 0.0;
  for (double xi : x) norm_sq += xi * xi;
  if (norm_sq > radius_sq) {
    const double scale = std::sqrt(radius_sq / norm_sq);
    for (auto& xi : x) xi *= scale;
  }
}

}  // namespace

MaximizeResult constrained_concave_maximize(const SmoothFunction& objective,
                                            std::span<const SmoothFunction> constraints,
                                            BallConstraint ball, std::vector<double> start,
                                            const MaximizeOptions& opts) {
  const size_t dim = start.size();
  const size_t J = constraints.size();
  project_ball_inplace(start, ball.radius_sq);

  std::vector<double> x = std::move(start);
  std::vector<double> multipliers(J, 0.0);
  double rho = opts.penalty_init;

  std::vector<double> grad(dim), cgrad(dim), trial(dim);
  std::vector<double> gvals(J);

  auto eval_constraints = [&](const std::vector<double>& p, std::vector<double>& vals) {
    double worst = 0.0;
    for (size_t j = 0; j < J; ++j) {
      vals[j] = constraints[j].value(p);
      worst = std::max(worst, vals[j]);
    }
    return worst;
  };

  // augmented Lagrangian value at the current multipliers/penalty
  auto al_value = [&](const std::vector<double>& p, std::vector<double>& vals) {
    double v = objective.value(p);
    eval_constraints(p, vals);
    for (size_t j = 0; j < J; ++j) {
      const double s = std::max(0.0, multipliers[j] + rho * vals[j]);
      v -= (s * s - multipliers[j] * multipliers[j]) / (2.0 * rho);
    }
    return v;
  };

  auto al_gradient = [&](const std::vector<double>& p, const std::vector<double>& vals,
                         std::vector<double>& out) {
    objective.gradient(p, out);
    for (size_t j = 0; j < J; ++j) {
      const double s = std::max(0.0, multipliers[j] + rho * vals[j]);
      if (s <= 0.0) continue;
      constraints[j].gradient(p, cgrad);
      for (size_t i = 0; i < dim; ++i) out[i] -= s * cgrad[i];
    }
  };

  MaximizeResult result;
  result.x = x;
  result.objective = -std::numeric_limits<double>::infinity();
  bool have_feasible = false;

  std::vector<double> xvals(J);
  double step = 1.0;
  for (int round = 0; round < opts.max_outer_rounds; ++round) {
    result.outer_rounds = round + 1;
    double cur = al_value(x, xvals);
    for (int it = 0; it < opts.max_inner_iters; ++it) {
      al_gradient(x, xvals, grad);

      // projected-gradient stationarity at unit reference step
      double pg = 0.0;
      trial = x;
      for (size_t i = 0; i < dim; ++i) trial[i] += grad[i];
      project_ball_inplace(trial, ball.radius_sq);
      for (size_t i = 0; i < dim; ++i) {
        const double d = trial[i] - x[i];
        pg += d * d;
      }
      result.pg_norm = std::sqrt(pg);
      if (result.pg_norm <= opts.pg_tol) break;

      bool moved = false;
      double t = std::max(step, 1e-12);
      for (int bt = 0; bt < 60; ++bt) {
        trial = x;
        for (size_t i = 0; i < dim; ++i) trial[i] += t * grad[i];
        project_ball_inplace(trial, ball.radius_sq);
        double inner = 0.0;
        for (size_t i = 0; i < dim; ++i) inner += grad[i] * (trial[i] - x[i]);
        const double cand = al_value(trial, gvals);
        if (cand >= cur + opts.armijo_c * inner) {
          x = trial;
          xvals = gvals;
          cur = cand;
          step = t * 2.0;
          moved = true;
          break;
        }
        t *= opts.armijo_shrink;
      }
      if (!moved) break;
    }

    const double worst = eval_constraints(x, xvals);
    const double fx = objective.value(x);
    if (worst <= opts.constraint_tol) {
      if (!have_feasible || fx > result.objective) {
        result.x = x;
        result.objective = fx;
        result.max_violation = worst;
        have_feasible = true;
      }
      if (result.pg_norm <= opts.pg_tol) break;
    }
    if (J == 0) break;
    for (size_t j = 0; j < J; ++j)
      multipliers[j] = std::max(0.0, multipliers[j] + rho * xvals[j]);
    rho *= opts.penalty_growth;
  }

  if (!have_feasible) {
    result.x = x;
    result.objective = objective.value(x);
    result.max_violation = eval_constraints(x, xvals);
    result.feasible = false;
  } else {
    result.feasible = true;
  }
  return result;
}

}  // namespace passopt
