#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slfem/element.hpp"
#include "slfem/errors.hpp"
#include "slfem/export.hpp"
#include "slfem/expression.hpp"
#include "slfem/mesh.hpp"
#include "slfem/mesh_generator.hpp"
#include "slfem/solver.hpp"
#include "slfem/verification.hpp"

namespace py = pybind11;

namespace {

slfem::BoundaryData make_boundary_data(const std::map<std::string, std::string>& dirichlet,
                                       const std::vector<std::string>& natural) {
  slfem::BoundaryData bc;
  for (const auto& [label, expr] : dirichlet) {
    bc.dirichlet[label] = slfem::parse_expression(expr);
  }
  bc.natural.insert(natural.begin(), natural.end());
  return bc;
}

py::dict solution_to_dict(const slfem::Solution& solution) {
  py::dict out;
  out["values"] = solution.nodal_values;
  out["diffs"] = solution.trace.diffs;
  out["converged"] = solution.trace.converged;
  out["iterations"] = solution.trace.iterations_used;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cubic curved-triangle finite elements for strain-limiting anti-plane shear";

  auto base = py::register_exception<slfem::Error>(m, "Error");
  py::register_exception<slfem::ConfigError>(m, "ConfigError", base);
  py::register_exception<slfem::GeometryError>(m, "GeometryError", base);
  py::register_exception<slfem::ParseError>(m, "ParseError", base);
  py::register_exception<slfem::SolverError>(m, "SolverError", base);
  py::register_exception<slfem::ContractError>(m, "ContractError", base);

  py::class_<slfem::Mesh>(m, "Mesh")
      .def_property_readonly("n_elements", [](const slfem::Mesh& mesh) { return mesh.n_elements(); })
      .def_property_readonly("n_dof", [](const slfem::Mesh& mesh) { return mesh.n_dof(); })
      .def_property_readonly("n_boundary_nodes",
                             [](const slfem::Mesh& mesh) { return mesh.n_boundary_nodes(); })
      .def_property_readonly("boundary_groups",
                             [](const slfem::Mesh& mesh) { return mesh.boundary_groups; })
      .def("node_coords",
           [](const slfem::Mesh& mesh) {
             std::vector<std::pair<double, double>> coords;
             coords.reserve(mesh.nodes.size());
             for (const slfem::Node& node : mesh.nodes) {
               coords.emplace_back(node.coords.x, node.coords.y);
             }
             return coords;
           })
      .def("node_markers",
           [](const slfem::Mesh& mesh) {
             std::vector<std::optional<std::string>> markers;
             markers.reserve(mesh.nodes.size());
             for (const slfem::Node& node : mesh.nodes) {
               markers.push_back(node.marker);
             }
             return markers;
           })
      .def("element_nodes",
           [](const slfem::Mesh& mesh, int e) {
             if (e < 0 || e >= mesh.n_elements()) {
               throw slfem::ConfigError("element index out of range");
             }
             const auto& nodes = mesh.elements[static_cast<std::size_t>(e)].nodes;
             return std::vector<int>(nodes.begin(), nodes.end());
           })
      .def("is_curved", [](const slfem::Mesh& mesh, int e) {
        if (e < 0 || e >= mesh.n_elements()) {
          throw slfem::ConfigError("element index out of range");
        }
        return mesh.elements[static_cast<std::size_t>(e)].curved_edge.has_value();
      });

  m.def("generate_square_mesh", &slfem::generate_square_mesh, py::arg("n_elements"));
  m.def(
      "generate_vnotch_mesh",
      [](double h) {
        slfem::DomainSpec spec = slfem::DomainSpec::vnotch();
        if (h > 0.0) {
          spec.target_h = h;
        }
        return slfem::generate_vnotch_mesh(spec, spec.target_h);
      },
      py::arg("h") = 0.0);
  m.def(
      "generate_vnotch_inclusions_mesh",
      [](double h) {
        slfem::DomainSpec spec = slfem::DomainSpec::vnotch_inclusions();
        if (h > 0.0) {
          spec.target_h = h;
        }
        return slfem::generate_vnotch_inclusions_mesh(spec, spec.target_h);
      },
      py::arg("h") = 0.0);

  m.def("read_mesh", &slfem::read_mesh, py::arg("path"));
  m.def("write_mesh", &slfem::write_mesh, py::arg("mesh"), py::arg("path"));
  m.def(
      "validate_mesh",
      [](const slfem::Mesh& mesh) {
        std::vector<std::pair<int, std::string>> issues;
        for (const slfem::ValidationIssue& issue : slfem::validate_mesh(mesh).issues) {
          issues.emplace_back(issue.element, issue.what);
        }
        return issues;
      },
      py::arg("mesh"));

  m.def(
      "solve",
      [](const slfem::Mesh& mesh, const std::map<std::string, std::string>& dirichlet,
         const std::vector<std::string>& natural, const std::string& f, const std::string& g,
         double mu, double tol, int max_iters, int quadrature_degree) {
        const slfem::BoundaryData bc = make_boundary_data(dirichlet, natural);
        slfem::ScalarField f_field = f.empty() ? slfem::ScalarField{} : slfem::parse_expression(f);
        slfem::ScalarField g_field = g.empty() ? slfem::ScalarField{} : slfem::parse_expression(g);
        std::set<std::string> g_labels;
        if (!g.empty()) {
          g_labels = bc.natural;
        }
        slfem::PicardConfig config;
        config.mu = mu;
        config.tolerance = tol;
        config.max_iterations = max_iters;
        config.quadrature_degree = quadrature_degree;
        return solution_to_dict(
            slfem::picard_solve(mesh, bc, f_field, g_field, config, g_labels));
      },
      py::arg("mesh"), py::arg("dirichlet"), py::arg("natural") = std::vector<std::string>{},
      py::arg("f") = std::string{}, py::arg("g") = std::string{}, py::arg("mu") = 0.5,
      py::arg("tol") = 1e-5, py::arg("max_iters") = 100, py::arg("quadrature_degree") = 8);

  m.def(
      "convergence_study",
      [](const std::vector<int>& counts, double mu, double tol, int max_iters) {
        slfem::PicardConfig config;
        config.mu = mu;
        config.tolerance = tol;
        config.max_iterations = max_iters;
        const slfem::ManufacturedCase mc = slfem::manufactured_square_case(mu);
        py::list rows;
        for (const slfem::ErrorReport& r : slfem::convergence_study(mc, counts, config)) {
          py::dict row;
          row["elements"] = r.elements;
          row["dof"] = r.dof;
          row["e_abs"] = r.e_abs;
          row["e_rel"] = r.e_rel;
          row["l2"] = r.l2;
          rows.append(row);
        }
        return rows;
      },
      py::arg("counts") = std::vector<int>{8, 16, 32}, py::arg("mu") = 0.5,
      py::arg("tol") = 1e-12, py::arg("max_iters") = 200);

  m.def("max_normalized_flux", &slfem::max_normalized_flux, py::arg("mesh"), py::arg("values"),
        py::arg("quadrature_degree") = 8);

  m.def("write_vtk", &slfem::write_vtk, py::arg("mesh"), py::arg("values"), py::arg("path"));

  m.def(
      "shape_values",
      [](double xi, double eta) {
        const auto values = slfem::shape_values({xi, eta});
        return std::vector<double>(values.begin(), values.end());
      },
      py::arg("xi"), py::arg("eta"));

  m.def(
      "flux_coefficient",
      [](double gx, double gy, double mu) {
        return slfem::flux_coefficient({gx, gy}, mu);
      },
      py::arg("gx"), py::arg("gy"), py::arg("mu") = 0.5);

  m.def(
      "eval_expression",
      [](const std::string& text, double x, double y) {
        return slfem::parse_expression(text)(x, y);
      },
      py::arg("text"), py::arg("x"), py::arg("y"));
}
