#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slfem/errors.hpp"
#include "slfem/export.hpp"
#include "slfem/expression.hpp"
#include "slfem/mesh.hpp"
#include "slfem/mesh_generator.hpp"
#include "slfem/solver.hpp"
#include "slfem/verification.hpp"

namespace {

using nlohmann::json;

struct MeshArgs {
  std::string domain;
  int elements = 8;
  double h = 0.0;  // 0 = use the domain default
  std::string config_path;
  std::string out_path;
};

struct SolveArgs {
  std::string mesh_path;
  std::string bc_path;
  double mu = 0.5;
  double tol = 1e-5;
  int max_iters = 100;
  std::string out_path;
  std::string trace_path;
};

struct VerifyArgs {
  std::string case_name = "square-manufactured";
  std::string elements = "8,16,32";
  std::string out_path = "report.csv";
};

void emit_result(const std::string& line) { std::cout << "RESULT: " << line << "\n"; }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json load_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    throw slfem::ParseError(std::string("cannot open ") + what + " file: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw slfem::ParseError(std::string("malformed ") + what + " file " + path + ": " + e.what());
  }
}

slfem::Point2 parse_point(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw slfem::ParseError(context + " must be a [x, y] number pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

// Optional domain-parameter overrides for the mesh command:
//   {"notch": {"apex": [x,y], "half_angle": a, "depth": d},
//    "inclusions": [{"center": [x,y], "radius": r}], "h": h}
void apply_domain_config(slfem::DomainSpec& spec, const std::string& path) {
  const json j = load_json_file(path, "domain config");
  if (!j.is_object()) {
    throw slfem::ParseError("domain config must be a JSON object: " + path);
  }
  if (j.contains("notch")) {
    const json& n = j.at("notch");
    if (!n.is_object()) {
      throw slfem::ParseError("domain config: 'notch' must be an object");
    }
    slfem::NotchSpec notch = spec.notch.value_or(slfem::NotchSpec{});
    if (n.contains("apex")) {
      notch.apex = parse_point(n.at("apex"), "domain config: notch apex");
    }
    if (n.contains("half_angle")) {
      notch.half_angle = n.at("half_angle").get<double>();
    }
    if (n.contains("depth")) {
      notch.depth = n.at("depth").get<double>();
    }
    spec.notch = notch;
  }
  if (j.contains("inclusions")) {
    const json& list = j.at("inclusions");
    if (!list.is_array()) {
      throw slfem::ParseError("domain config: 'inclusions' must be an array");
    }
    spec.inclusions.clear();
    for (const json& c : list) {
      slfem::CircleSpec circle;
      circle.center = parse_point(c.at("center"), "domain config: inclusion center");
      circle.radius = c.at("radius").get<double>();
      spec.inclusions.push_back(circle);
    }
  }
  if (j.contains("h")) {
    spec.target_h = j.at("h").get<double>();
  }
}

struct BoundarySpec {
  slfem::BoundaryData bc;
  slfem::ScalarField f;  // empty if absent
  slfem::ScalarField g;
  std::set<std::string> g_labels;
};

// BC file schema:
//   {"dirichlet": {label: expr}, "natural": [labels], "f": expr, "g": expr}
// with every expr an arithmetic expression over x and y.
BoundarySpec load_boundary_spec(const std::string& path) {
  const json j = load_json_file(path, "boundary condition");
  if (!j.is_object()) {
    throw slfem::ParseError("boundary condition file must be a JSON object: " + path);
  }
  BoundarySpec spec;
  if (j.contains("dirichlet")) {
    const json& d = j.at("dirichlet");
    if (!d.is_object()) {
      throw slfem::ParseError("boundary conditions: 'dirichlet' must map labels to expressions");
    }
    for (const auto& [label, expr] : d.items()) {
      if (!expr.is_string()) {
        throw slfem::ParseError("boundary conditions: expression for '" + label +
                                "' must be a string");
      }
      spec.bc.dirichlet[label] = slfem::parse_expression(expr.get<std::string>());
    }
  }
  if (j.contains("natural")) {
    const json& n = j.at("natural");
    if (!n.is_array()) {
      throw slfem::ParseError("boundary conditions: 'natural' must be an array of labels");
    }
    for (const json& label : n) {
      if (!label.is_string()) {
        throw slfem::ParseError("boundary conditions: natural labels must be strings");
      }
      spec.bc.natural.insert(label.get<std::string>());
    }
  }
  if (j.contains("f")) {
    spec.f = slfem::parse_expression(j.at("f").get<std::string>());
  }
  if (j.contains("g")) {
    spec.g = slfem::parse_expression(j.at("g").get<std::string>());
    spec.g_labels = spec.bc.natural;
  }
  return spec;
}

int run_mesh(const MeshArgs& args) {
  slfem::Mesh mesh;
  if (args.domain == "square") {
    mesh = slfem::generate_square_mesh(args.elements);
  } else if (args.domain == "vnotch" || args.domain == "vnotch-inclusions") {
    slfem::DomainSpec spec = args.domain == "vnotch"
                                 ? slfem::DomainSpec::vnotch()
                                 : slfem::DomainSpec::vnotch_inclusions();
    if (!args.config_path.empty()) {
      apply_domain_config(spec, args.config_path);
    }
    if (args.h > 0.0) {
      spec.target_h = args.h;
    }
    mesh = args.domain == "vnotch" ? slfem::generate_vnotch_mesh(spec, spec.target_h)
                                   : slfem::generate_vnotch_inclusions_mesh(spec, spec.target_h);
  } else {
    throw slfem::ConfigError("unknown domain '" + args.domain +
                             "' (expected square, vnotch, or vnotch-inclusions)");
  }
  slfem::write_mesh(mesh, args.out_path);
  std::cout << "elements=" << mesh.n_elements() << " dof=" << mesh.n_dof()
            << " boundary_nodes=" << mesh.n_boundary_nodes() << "\n";
  emit_result("ok domain=" + args.domain + " elements=" + std::to_string(mesh.n_elements()) +
              " dof=" + std::to_string(mesh.n_dof()) + " out=" + args.out_path);
  return 0;
}

int run_solve(const SolveArgs& args) {
  const slfem::Mesh mesh = slfem::read_mesh(args.mesh_path);
  const slfem::ValidationReport report = slfem::validate_mesh(mesh);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "mesh validation failed: " << report.issues.front().what << " ("
        << report.issues.size() << " issue(s))";
    throw slfem::GeometryError(msg.str());
  }

  const BoundarySpec spec = load_boundary_spec(args.bc_path);
  slfem::PicardConfig config;
  config.mu = args.mu;
  config.tolerance = args.tol;
  config.max_iterations = args.max_iters;

  const slfem::Solution solution =
      slfem::picard_solve(mesh, spec.bc, spec.f, spec.g, config, spec.g_labels);

  slfem::write_vtk(mesh, solution.nodal_values, args.out_path);
  if (!args.trace_path.empty()) {
    slfem::write_trace_csv(solution.trace, args.trace_path);
  }

  const double final_diff =
      solution.trace.diffs.empty() ? 0.0 : solution.trace.diffs.back();
  if (!solution.trace.converged) {
    emit_result("not-converged iterations=" + std::to_string(solution.trace.iterations_used) +
                " final_diff=" + format_double(final_diff));
    return 2;
  }
  emit_result("converged iterations=" + std::to_string(solution.trace.iterations_used) +
              " final_diff=" + format_double(final_diff) + " out=" + args.out_path);
  return 0;
}

std::vector<int> parse_element_list(const std::string& text) {
  std::vector<int> counts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
      counts.push_back(value);
    } catch (const std::exception&) {
      throw slfem::ConfigError("invalid element count '" + item + "' in --elements list");
    }
  }
  if (counts.empty()) {
    throw slfem::ConfigError("--elements list is empty");
  }
  return counts;
}

int run_verify(const VerifyArgs& args) {
  if (args.case_name != "square-manufactured") {
    throw slfem::ConfigError("unknown verification case '" + args.case_name +
                             "' (expected square-manufactured)");
  }
  const std::vector<int> counts = parse_element_list(args.elements);

  // Tight Picard tolerance so iteration error stays far below the nodal
  // errors being measured.
  slfem::PicardConfig config;
  config.tolerance = 1e-12;
  config.max_iterations = 200;

  const slfem::ManufacturedCase mc = slfem::manufactured_square_case(config.mu);
  const std::vector<slfem::ErrorReport> reports = slfem::convergence_study(mc, counts, config);
  slfem::write_report_csv(reports, args.out_path);

  double max_l2 = 0.0;
  for (const slfem::ErrorReport& r : reports) {
    std::cout << "elements=" << r.elements << " dof=" << r.dof << " e_abs=" << format_double(r.e_abs)
              << " e_rel=" << format_double(r.e_rel) << " l2=" << format_double(r.l2) << "\n";
    max_l2 = std::max(max_l2, r.l2);
  }
  if (max_l2 > 1e-6) {
    emit_result("verify-failed cases=" + std::to_string(reports.size()) +
                " max_l2=" + format_double(max_l2));
    return 2;
  }
  emit_result("ok cases=" + std::to_string(reports.size()) + " max_l2=" + format_double(max_l2) +
              " out=" + args.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strain-limiting anti-plane shear finite element solver"};
  app.require_subcommand(1);

  MeshArgs mesh_args;
  CLI::App* mesh_cmd = app.add_subcommand("mesh", "Generate a mesh and write it as JSON");
  // --help only: the short -h would collide with the element-size flag.
  mesh_cmd->set_help_flag("--help", "Print this help message and exit");
  mesh_cmd->add_option("--domain", mesh_args.domain, "square, vnotch, or vnotch-inclusions")
      ->required();
  mesh_cmd->add_option("--elements", mesh_args.elements,
                       "element count for the square domain (8, 16, or 32)");
  mesh_cmd->add_option("--h", mesh_args.h, "target element size for unstructured domains");
  mesh_cmd->add_option("--config", mesh_args.config_path, "JSON file with domain overrides");
  mesh_cmd->add_option("-o,--out", mesh_args.out_path, "output mesh JSON path")->required();

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run the Picard solver on a mesh");
  solve_cmd->add_option("--mesh", solve_args.mesh_path, "mesh JSON path")->required();
  solve_cmd->add_option("--bc", solve_args.bc_path, "boundary condition JSON path")->required();
  solve_cmd->add_option("--mu", solve_args.mu, "shear modulus (default 0.5)");
  solve_cmd->add_option("--tol", solve_args.tol, "Picard stopping tolerance (default 1e-5)");
  solve_cmd->add_option("--max-iters", solve_args.max_iters,
                        "Picard iteration cap (default 100)");
  solve_cmd->add_option("-o,--out", solve_args.out_path, "output solution VTK path")->required();
  solve_cmd->add_option("--trace", solve_args.trace_path, "iteration trace CSV path");

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the manufactured-solution convergence study");
  verify_cmd->add_option("--case", verify_args.case_name,
                         "verification case (square-manufactured)");
  verify_cmd->add_option("--elements", verify_args.elements,
                         "comma-separated square element counts (default 8,16,32)");
  verify_cmd->add_option("-o,--out", verify_args.out_path, "output report CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    const int code = app.exit(e);
    emit_result("ok help");
    return code;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    emit_result(std::string("usage-error ") + e.what());
    return 1;
  }

  try {
    if (mesh_cmd->parsed()) {
      return run_mesh(mesh_args);
    }
    if (solve_cmd->parsed()) {
      return run_solve(solve_args);
    }
    return run_verify(verify_args);
  } catch (const slfem::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_result(std::string("usage-error ") + e.what());
    return 1;
  } catch (const slfem::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_result(std::string("error ") + e.what());
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit_result(std::string("error ") + e.what());
    return 3;
  }
}
