#pragma once

#include "slfem/solver.hpp"

namespace slfem {

/// Closed-form benchmark problem: exact solution, its gradient, the body
/// force recovered from the strong form, and matching Dirichlet data.
struct ManufacturedCase {
  ScalarField exact;
  std::function<Point2(double, double)> exact_gradient;
  ScalarField rhs_f;
  BoundaryData bc;
};

/// phi = (pi/2) y^2 on the unit square; rhs_f = -pi / (2 mu (1 + pi y)^2).
ManufacturedCase manufactured_square_case(double mu = 0.5);

struct ErrorReport {
  int elements = 0;
  int dof = 0;
  double e_abs = 0.0;  // max nodal |phi_h - phi|
  double e_rel = 0.0;  // e_abs / max nodal |phi|
  double l2 = 0.0;     // RMS nodal error
};

ErrorReport error_metrics(const Solution& solution, const ManufacturedCase& mc, const Mesh& mesh);

/// One converged solve + error report per square-mesh element count, all
/// with the same config.
std::vector<ErrorReport> convergence_study(const ManufacturedCase& mc,
                                           const std::vector<int>& element_counts,
                                           const PicardConfig& config);

void write_report_csv(const std::vector<ErrorReport>& reports, const std::string& path);

/// Max over all quadrature points of ||grad phi|| / (1 + ||grad phi||);
/// strictly below 1 for any finite field (the strain-limiting bound).
double max_normalized_flux(const Mesh& mesh, const CoefficientField& phi,
                           int quadrature_degree = 8);

}  // namespace slfem
