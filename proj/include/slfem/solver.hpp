#pragma once

#include "slfem/assembly.hpp"

namespace slfem {

struct PicardConfig {
  int max_iterations = 100;
  double tolerance = 1e-5;  // max nodal difference between iterates
  double mu = 0.5;
  int quadrature_degree = 8;
  // Keep the flux coefficient frozen at 1/(2 mu), turning every iteration
  // into the same linear problem.  Test hook; off in production runs.
  bool freeze_coefficient = false;
};

struct IterationTrace {
  std::vector<double> diffs;  // diffs[k] = max_i |phi^{k+1}_i - phi^k_i|
  bool converged = false;
  int iterations_used = 0;
};

struct Solution {
  CoefficientField nodal_values;
  IterationTrace trace;
};

/// Direct sparse LDLT solve of the constrained system.  Throws SolverError
/// when the matrix is singular or indefinite, or when the solution fails
/// the residual check ||K u - b||_inf / max(1, ||b||_inf) <= 1e-10.
Eigen::VectorXd solve_linear(const SparseSystem& system);

/// Max nodal absolute difference; the Picard stopping quantity.
double residual(const CoefficientField& phi_new, const CoefficientField& phi_old);

/// Solution of the linear problem: flux coefficient frozen at 1/(2 mu),
/// Dirichlet data applied.  This seeds the Picard loop.
CoefficientField initial_guess(const Mesh& mesh, const BoundaryData& bc,
                               const PicardConfig& config, const ScalarField& f = {},
                               const ScalarField& g = {},
                               const std::set<std::string>& g_labels = {});

/// Fixed-point loop: phi^{n+1} solves the problem with the coefficient
/// frozen at phi^n, starting from initial_guess.  Non-convergence within
/// max_iterations is reported in the trace, not thrown.
Solution picard_solve(const Mesh& mesh, const BoundaryData& bc, const ScalarField& f,
                      const ScalarField& g, const PicardConfig& config,
                      const std::set<std::string>& g_labels = {});

}  // namespace slfem
