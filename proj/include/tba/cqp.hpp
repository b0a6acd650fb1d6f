#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <limits>
#include <optional>
#include <string>

namespace tba {

// Separable convex quadratic program
//   minimize    sum_i (quad[i]*x[i]^2 + linear[i]*x[i]) + constant
//   subject to  A x = b,  lower <= x <= upper
// quad entries must be >= 0. Bounds may be +-infinity. Equality rows may be
// linearly dependent as long as they are consistent.
struct QpProblem {
  Eigen::VectorXd quad;    // coefficient of x^2 (not the 1/2 convention)
  Eigen::VectorXd linear;
  double constant = 0.0;
  Eigen::SparseMatrix<double> A;  // m x n
  Eigen::VectorXd b;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  int num_vars() const { return static_cast<int>(linear.size()); }
  int num_rows() const { return static_cast<int>(b.size()); }
  double objective_at(const Eigen::VectorXd& x) const;
  void validate() const;  // dimension checks + convexity; throws StructuralError

  static constexpr double kInf = std::numeric_limits<double>::infinity();
};

struct SolveTolerances {
  double primal = 1e-9;        // relative equality residual target
  double dual = 1e-9;          // relative stationarity target
  double comp = 1e-9;          // relative complementarity target
  double kkt_cert = 1e-8;      // certificate: optimal status requires this
  double feasibility = 1e-6;   // phase-1 verdict threshold (relative)
  int max_iterations = 200;    // interior-point iteration cap per phase
  bool polish = true;          // active-set refinement after convergence
};

enum class SolveStatus { optimal, infeasible, iteration_limit };

const char* to_string(SolveStatus s);

// Residual summary of a candidate point against the KKT conditions.
// All three are relative to the problem scale.
struct KktResidual {
  double stationarity = 0.0;
  double primal = 0.0;
  double complementarity = 0.0;
  double max() const;
};

struct QpSolution {
  SolveStatus status = SolveStatus::iteration_limit;
  Eigen::VectorXd x;
  Eigen::VectorXd y;        // equality multipliers
  Eigen::VectorXd z_lower;  // bound multipliers, >= 0
  Eigen::VectorXd z_upper;
  double objective = 0.0;
  KktResidual kkt;
  int iterations = 0;            // interior-point iterations, both phases
  double infeasibility = 0.0;    // phase-1 residual when status == infeasible
  std::string message;
};

// Primal-dual interior-point solve with an explicit feasibility phase.
// The returned status is `optimal` only if the independently recomputed KKT
// residuals meet tol.kkt_cert; `infeasible` carries the certified minimal
// constraint violation. Deterministic for fixed inputs and tolerances.
//
// `known_feasible` may name a point that already satisfies all constraints
// (verified before use); it lets the solver skip the feasibility phase.
QpSolution solve_cqp(const QpProblem& p, const SolveTolerances& tol = {},
                     const std::optional<Eigen::VectorXd>& known_feasible = {});

// KKT residuals of a candidate. If duals are not supplied they are fitted by
// least squares over the (near-)active bound multipliers before measuring.
KktResidual kkt_residual(const QpProblem& p, const Eigen::VectorXd& x);
KktResidual kkt_residual(const QpProblem& p, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y,
                         const Eigen::VectorXd& z_lower,
                         const Eigen::VectorXd& z_upper);

}  // namespace tba
