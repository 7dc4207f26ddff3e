#include "slfem/solver.hpp"

#include <Eigen/SparseCholesky>

namespace slfem {

namespace {

void check_config(const PicardConfig& config) {
  if (config.max_iterations <= 0) throw ConfigError("max_iterations must be positive");
  if (!(config.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (!(config.mu > 0.0)) throw ConfigError("mu must be positive");
}

CoefficientField solve_frozen(const Mesh& mesh, const BoundaryData& bc,
                              const CoefficientField& phi_n, const PicardConfig& config,
                              const Eigen::VectorXd& load) {
  const QuadratureRule& rule = quadrature_rule(config.quadrature_degree);
  SparseSystem system;
  system.matrix = assemble_bilinear(mesh, phi_n, config.mu, rule);
  system.rhs = load;
  const Eigen::VectorXd u = solve_linear(apply_dirichlet(system, bc, mesh));
  return {u.data(), u.data() + u.size()};
}

}  // namespace

Eigen::VectorXd solve_linear(const SparseSystem& system) {
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(system.matrix);
  if (ldlt.info() != Eigen::Success) {
    throw SolverError("sparse factorization failed (singular or structurally deficient matrix)");
  }
  if (ldlt.vectorD().minCoeff() <= 0.0) {
    throw SolverError("matrix is not positive definite on the free DOFs");
  }
  Eigen::VectorXd u = ldlt.solve(system.rhs);
  if (ldlt.info() != Eigen::Success) {
    throw SolverError("sparse triangular solve failed");
  }
  const double res = (system.matrix * u - system.rhs).lpNorm<Eigen::Infinity>() /
                     std::max(1.0, system.rhs.lpNorm<Eigen::Infinity>());
  if (!(res <= 1e-10)) {
    throw SolverError("direct solve residual " + std::to_string(res) + " exceeds 1e-10");
  }
  // Identity rows solve to their rhs up to factorization roundoff; pin the
  // prescribed values so constrained nodes are bit-exact.
  for (const auto& [id, value] : system.constrained) {
    u[id] = value;
  }
  return u;
}

double residual(const CoefficientField& phi_new, const CoefficientField& phi_old) {
  if (phi_new.size() != phi_old.size()) {
    throw ContractError("field sizes differ: " + std::to_string(phi_new.size()) + " vs " +
                        std::to_string(phi_old.size()));
  }
  double worst = 0.0;
  for (size_t i = 0; i < phi_new.size(); ++i) {
    worst = std::max(worst, std::abs(phi_new[i] - phi_old[i]));
  }
  return worst;
}

CoefficientField initial_guess(const Mesh& mesh, const BoundaryData& bc,
                               const PicardConfig& config, const ScalarField& f,
                               const ScalarField& g, const std::set<std::string>& g_labels) {
  check_config(config);
  const CoefficientField zero(mesh.n_dof(), 0.0);
  return solve_frozen(mesh, bc, zero, config, assemble_load(mesh, f, g, g_labels));
}

Solution picard_solve(const Mesh& mesh, const BoundaryData& bc, const ScalarField& f,
                      const ScalarField& g, const PicardConfig& config,
                      const std::set<std::string>& g_labels) {
  check_config(config);
  const Eigen::VectorXd load = assemble_load(mesh, f, g, g_labels);
  const CoefficientField zero(mesh.n_dof(), 0.0);

  Solution sol;
  sol.nodal_values = solve_frozen(mesh, bc, zero, config, load);
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    const CoefficientField& frozen = config.freeze_coefficient ? zero : sol.nodal_values;
    CoefficientField next = solve_frozen(mesh, bc, frozen, config, load);
    const double diff = residual(next, sol.nodal_values);
    sol.trace.diffs.push_back(diff);
    sol.nodal_values = std::move(next);
    if (diff <= config.tolerance) {
      sol.trace.converged = true;
      break;
    }
  }
  sol.trace.iterations_used = static_cast<int>(sol.trace.diffs.size());
  return sol;
}

}  // namespace slfem
