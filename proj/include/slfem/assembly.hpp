#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "slfem/mesh.hpp"

namespace slfem {

/// Scalar function of (x, y); a default-constructed (empty) ScalarField
/// stands for "absent" and contributes nothing where that is allowed.
using ScalarField = std::function<double(double, double)>;

/// Nodal coefficient vector indexed by node id.
using CoefficientField = std::vector<double>;

/// 1 / (2 mu (1 + ||grad||)), the Picard-frozen flux coefficient.
double flux_coefficient(const Point2& grad, double mu);

struct BoundaryData {
  std::map<std::string, ScalarField> dirichlet;  // label -> prescribed value
  std::set<std::string> natural;                 // traction-free labels
};

/// Stiffness matrix K_ij = sum_e int flux_coefficient(grad phi_n) grad N_i
/// . grad N_j.  phi_n must be sized to the mesh.
Eigen::SparseMatrix<double> assemble_bilinear(const Mesh& mesh, const CoefficientField& phi_n,
                                              double mu, const QuadratureRule& rule);

/// Load vector: domain term with f plus, when g is given, boundary-edge
/// terms over the labels in g_labels.  Throws ConfigError when a g label
/// does not name a mesh boundary group.
Eigen::VectorXd assemble_load(const Mesh& mesh, const ScalarField& f, const ScalarField& g = {},
                              const std::set<std::string>& g_labels = {});

struct SparseSystem {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd rhs;
  std::map<int, double> constrained;  // node id -> prescribed value
};

/// Symmetric elimination of Dirichlet DOFs: constrained columns move to the
/// right-hand side, constrained rows become identity rows.  Every mesh
/// boundary label must appear in bc (Dirichlet or natural) and vice versa;
/// where groups overlap at corners, labels apply in ascending order and the
/// last one wins.
SparseSystem apply_dirichlet(const SparseSystem& system, const BoundaryData& bc, const Mesh& mesh);

}  // namespace slfem
