#include "slfem/verification.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "slfem/errors.hpp"
#include "slfem/mesh_generator.hpp"

namespace slfem {

ManufacturedCase manufactured_square_case(double mu) {
  if (!(mu > 0.0)) {
    throw ConfigError("manufactured case requires mu > 0");
  }
  ManufacturedCase mc;
  mc.exact = [](double, double y) { return 0.5 * std::numbers::pi * y * y; };
  mc.exact_gradient = [](double, double y) { return Point2{0.0, std::numbers::pi * y}; };
  mc.rhs_f = [mu](double, double y) {
    const double denom = 1.0 + std::numbers::pi * y;
    return -std::numbers::pi / (2.0 * mu * denom * denom);
  };
  mc.bc.dirichlet["Gamma_D1"] = mc.exact;
  mc.bc.dirichlet["Gamma_D2"] = mc.exact;
  mc.bc.dirichlet["Gamma_D3"] = [](double, double) { return 0.0; };
  mc.bc.dirichlet["Gamma_D4"] = [](double, double) { return 0.5 * std::numbers::pi; };
  return mc;
}

ErrorReport error_metrics(const Solution& solution, const ManufacturedCase& mc,
                          const Mesh& mesh) {
  if (solution.nodal_values.size() != mesh.nodes.size()) {
    throw ContractError("error_metrics: solution length does not match mesh node count");
  }
  if (!mc.exact) {
    throw ContractError("error_metrics: manufactured case has no exact solution");
  }
  ErrorReport report;
  report.elements = mesh.n_elements();
  report.dof = mesh.n_dof();

  double max_err = 0.0;
  double max_exact = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    const Point2& p = mesh.nodes[i].coords;
    const double exact = mc.exact(p.x, p.y);
    const double err = std::abs(solution.nodal_values[i] - exact);
    max_err = std::max(max_err, err);
    max_exact = std::max(max_exact, std::abs(exact));
    sum_sq += err * err;
  }
  report.e_abs = max_err;
  report.e_rel = max_exact > 0.0 ? max_err / max_exact : 0.0;
  report.l2 = mesh.nodes.empty() ? 0.0 : std::sqrt(sum_sq / static_cast<double>(mesh.nodes.size()));
  return report;
}

std::vector<ErrorReport> convergence_study(const ManufacturedCase& mc,
                                           const std::vector<int>& element_counts,
                                           const PicardConfig& config) {
  std::vector<ErrorReport> reports;
  reports.reserve(element_counts.size());
  for (int count : element_counts) {
    const Mesh mesh = generate_square_mesh(count);
    const Solution solution = picard_solve(mesh, mc.bc, mc.rhs_f, {}, config);
    if (!solution.trace.converged) {
      throw SolverError("convergence study: Picard iteration did not converge on the " +
                        std::to_string(count) + "-element mesh");
    }
    reports.push_back(error_metrics(solution, mc, mesh));
  }
  return reports;
}

void write_report_csv(const std::vector<ErrorReport>& reports, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot open report file for writing: " + path);
  }
  out << "elements,dof,e_abs,e_rel,l2\n";
  char buf[128];
  for (const ErrorReport& r : reports) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%.17g\n", r.elements, r.dof, r.e_abs,
                  r.e_rel, r.l2);
    out << buf;
  }
  if (!out) {
    throw ConfigError("failed while writing report file: " + path);
  }
}

double max_normalized_flux(const Mesh& mesh, const CoefficientField& phi,
                           int quadrature_degree) {
  if (phi.size() != mesh.nodes.size()) {
    throw ContractError("max_normalized_flux: field length does not match mesh node count");
  }
  const QuadratureRule& rule = quadrature_rule(quadrature_degree);
  double worst = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const ElementMap map = mesh.element_map(e);
    const auto& conn = mesh.elements[static_cast<std::size_t>(e)].nodes;
    for (const RefPoint& q : rule.points) {
      const auto grads = map.physical_gradients(q);
      Point2 grad{0.0, 0.0};
      for (int i = 0; i < kNodesPerElement; ++i) {
        grad = grad +
               phi[static_cast<std::size_t>(conn[static_cast<std::size_t>(i)])] *
                   grads[static_cast<std::size_t>(i)];
      }
      const double r = norm(grad);
      worst = std::max(worst, r / (1.0 + r));
    }
  }
  return worst;
}

}  // namespace slfem
