#include "slfem/assembly.hpp"

#include <cmath>
#include <numbers>

namespace slfem {

namespace {

// n-point Gauss-Legendre rule on [0,1], solved by Newton on the Legendre
// recurrence.  Used for the load's domain term (collapsed to the triangle),
// where the integrand is rational rather than polynomial and the symmetric
// stiffness rule would dominate the error budget.
std::vector<EdgeQuadPoint> gauss_legendre_01(int n) {
  std::vector<EdgeQuadPoint> rule(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule[i].s = 0.5 * (1.0 - x);  // roots come out descending; s ascends
    rule[i].w = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const std::vector<EdgeQuadPoint>& load_rule_1d() {
  static const std::vector<EdgeQuadPoint> rule = gauss_legendre_01(16);
  return rule;
}

Point2 scaled_grad(const JacobianEval& j, const RefGrad& g) {
  return {j.inv[0][0] * g.d_xi + j.inv[1][0] * g.d_eta,
          j.inv[0][1] * g.d_xi + j.inv[1][1] * g.d_eta};
}

}  // namespace

double flux_coefficient(const Point2& grad, double mu) {
  return 1.0 / (2.0 * mu * (1.0 + norm(grad)));
}

Eigen::SparseMatrix<double> assemble_bilinear(const Mesh& mesh, const CoefficientField& phi_n,
                                              double mu, const QuadratureRule& rule) {
  const int n = mesh.n_dof();
  if (static_cast<int>(phi_n.size()) != n) {
    throw ContractError("phi_n has " + std::to_string(phi_n.size()) + " entries for " +
                        std::to_string(n) + " DOFs");
  }
  if (!(mu > 0.0)) throw ConfigError("mu must be positive");

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(mesh.n_elements()) * kNodesPerElement * kNodesPerElement);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const auto& ids = mesh.elements[e].nodes;
    const ElementMap map = mesh.element_map(e);
    double ke[kNodesPerElement][kNodesPerElement] = {};
    try {
      for (size_t q = 0; q < rule.points.size(); ++q) {
        const RefPoint& p = rule.points[q];
        const JacobianEval jac = map.jacobian(p);
        const auto ref_grads = shape_gradients(p);
        Point2 g[kNodesPerElement];
        Point2 grad_phi{0.0, 0.0};
        for (int i = 0; i < kNodesPerElement; ++i) {
          g[i] = scaled_grad(jac, ref_grads[i]);
          grad_phi = grad_phi + phi_n[ids[i]] * g[i];
        }
        const double scale = rule.weights[q] * jac.det * flux_coefficient(grad_phi, mu);
        for (int i = 0; i < kNodesPerElement; ++i) {
          for (int j = 0; j <= i; ++j) {
            const double v = scale * dot(g[i], g[j]);
            ke[i][j] += v;
            if (i != j) ke[j][i] += v;
          }
        }
      }
    } catch (const GeometryError& ex) {
      throw GeometryError("element " + std::to_string(e) + ": " + ex.what());
    }
    for (int i = 0; i < kNodesPerElement; ++i) {
      for (int j = 0; j < kNodesPerElement; ++j) {
        trips.emplace_back(ids[i], ids[j], ke[i][j]);
      }
    }
  }

  Eigen::SparseMatrix<double> matrix(n, n);
  matrix.setFromTriplets(trips.begin(), trips.end());
  return matrix;
}

Eigen::VectorXd assemble_load(const Mesh& mesh, const ScalarField& f, const ScalarField& g,
                              const std::set<std::string>& g_labels) {
  const int n = mesh.n_dof();
  Eigen::VectorXd load = Eigen::VectorXd::Zero(n);

  if (g) {
    for (const std::string& label : g_labels) {
      if (!mesh.boundary_groups.count(label)) {
        throw ConfigError("traction label '" + label + "' is not a mesh boundary group");
      }
    }
  }

  const auto& rule1d = load_rule_1d();
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const auto& ids = mesh.elements[e].nodes;
    const ElementMap map = mesh.element_map(e);

    if (f) {
      // Duffy-collapsed tensor rule: xi = u, eta = v (1 - u).
      for (const EdgeQuadPoint& pu : rule1d) {
        for (const EdgeQuadPoint& pv : rule1d) {
          const RefPoint q{pu.s, pv.s * (1.0 - pu.s)};
          const double w = pu.w * pv.w * (1.0 - pu.s);
          const double det = map.jacobian(q).det;
          const Point2 x = map.map(q);
          const double fw = f(x.x, x.y) * w * det;
          const auto vals = shape_values(q);
          for (int i = 0; i < kNodesPerElement; ++i) load[ids[i]] += fw * vals[i];
        }
      }
    }

    if (!g) continue;
    const auto coords = mesh.element_coords(e);
    const Point2 c = map.bilinear_coefficient();
    // side -> (third slots, reference parameterization, tangent)
    for (int side = 0; side < 3; ++side) {
      const int sa = 3 + 2 * side, sb = sa + 1;
      const auto& ma = mesh.nodes[ids[sa]].marker;
      const auto& mb = mesh.nodes[ids[sb]].marker;
      if (!ma || !mb || *ma != *mb || !g_labels.count(*ma)) continue;
      for (const EdgeQuadPoint& pq : edge_quadrature()) {
        RefPoint q;
        Point2 tangent;
        switch (side) {
          case 0:  // vertex 1 -> vertex 2 along xi + eta = 1
            q = {1.0 - pq.s, pq.s};
            tangent = (coords[1] - coords[0]) + (1.0 - 2.0 * pq.s) * c;
            break;
          case 1:  // vertex 2 -> vertex 3 down the eta axis
            q = {0.0, 1.0 - pq.s};
            tangent = -1.0 * (coords[1] - coords[2]);
            break;
          default:  // vertex 3 -> vertex 1 along the xi axis
            q = {pq.s, 0.0};
            tangent = coords[0] - coords[2];
            break;
        }
        const Point2 x = map.map(q);
        const double gw = g(x.x, x.y) * pq.w * norm(tangent);
        const auto vals = shape_values(q);
        for (int i = 0; i < kNodesPerElement; ++i) load[ids[i]] += gw * vals[i];
      }
    }
  }
  return load;
}

SparseSystem apply_dirichlet(const SparseSystem& system, const BoundaryData& bc, const Mesh& mesh) {
  for (const auto& [label, ids] : mesh.boundary_groups) {
    const bool is_d = bc.dirichlet.count(label) > 0;
    const bool is_n = bc.natural.count(label) > 0;
    if (is_d && is_n) {
      throw ConfigError("label '" + label + "' is both Dirichlet and natural");
    }
    if (!is_d && !is_n) {
      throw ConfigError("no boundary condition for label '" + label + "'");
    }
  }
  for (const auto& [label, field] : bc.dirichlet) {
    if (!mesh.boundary_groups.count(label)) {
      throw ConfigError("Dirichlet label '" + label + "' is not a mesh boundary group");
    }
    if (!field) throw ConfigError("empty expression for Dirichlet label '" + label + "'");
  }
  for (const std::string& label : bc.natural) {
    if (!mesh.boundary_groups.count(label)) {
      throw ConfigError("natural label '" + label + "' is not a mesh boundary group");
    }
  }

  const int n = static_cast<int>(system.matrix.rows());
  if (system.matrix.cols() != n || system.rhs.size() != n || n != mesh.n_dof()) {
    throw ContractError("system dimensions do not match the mesh");
  }

  SparseSystem out;
  out.constrained = system.constrained;
  // Ascending label order; corner nodes shared by two groups take the value
  // of the later label.
  for (const auto& [label, ids] : mesh.boundary_groups) {
    const auto it = bc.dirichlet.find(label);
    if (it == bc.dirichlet.end()) continue;
    for (int id : ids) {
      const Point2 p = mesh.nodes[id].coords;
      out.constrained[id] = it->second(p.x, p.y);
    }
  }

  std::vector<char> is_constrained(n, 0);
  std::vector<double> value(n, 0.0);
  for (const auto& [id, val] : out.constrained) {
    is_constrained[id] = 1;
    value[id] = val;
  }

  Eigen::VectorXd rhs = system.rhs;
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(system.matrix.nonZeros() + out.constrained.size());
  for (int k = 0; k < system.matrix.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(system.matrix, k); it; ++it) {
      const int i = static_cast<int>(it.row());
      const int j = static_cast<int>(it.col());
      if (is_constrained[i]) continue;
      if (is_constrained[j]) {
        rhs[i] -= it.value() * value[j];
      } else {
        trips.emplace_back(i, j, it.value());
      }
    }
  }
  for (const auto& [id, val] : out.constrained) {
    trips.emplace_back(id, id, 1.0);
    rhs[id] = val;
  }

  out.matrix.resize(n, n);
  out.matrix.setFromTriplets(trips.begin(), trips.end());
  out.rhs = std::move(rhs);
  return out;
}

}  // namespace slfem
