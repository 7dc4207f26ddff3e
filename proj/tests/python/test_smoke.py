"""End-to-end smoke checks for the Python module and the CLI binary.

Run through ctest, which points PYTHONPATH at the built package and
SLFEM_CLI at the command-line executable.
"""

import json
import math
import os
import subprocess

import pytest

import slfem

CLI = os.environ.get("SLFEM_CLI", "slfem")

MANUFACTURED_BC = {
    "Gamma_D1": "pi/2*y^2",
    "Gamma_D2": "pi/2*y^2",
    "Gamma_D3": "0",
    "Gamma_D4": "pi/2",
}


def run_cli(*args, cwd=None):
    return subprocess.run(
        [CLI, *map(str, args)], capture_output=True, text=True, cwd=cwd, timeout=300
    )


def test_square_mesh_counts():
    mesh = slfem.generate_square_mesh(8)
    assert mesh.n_elements == 8
    assert mesh.n_dof == 49
    assert mesh.n_boundary_nodes == 24
    assert sorted(mesh.boundary_groups) == [
        "Gamma_D1",
        "Gamma_D2",
        "Gamma_D3",
        "Gamma_D4",
    ]
    assert slfem.validate_mesh(mesh) == []


def test_rejects_unsupported_element_count():
    with pytest.raises(slfem.ConfigError):
        slfem.generate_square_mesh(7)


def test_shape_values_nodal():
    values = slfem.shape_values(1.0 / 3.0, 0.0)
    assert len(values) == 10
    assert values[7] == pytest.approx(1.0, abs=1e-14)
    assert sum(values) == pytest.approx(1.0, abs=1e-14)


def test_flux_coefficient():
    assert slfem.flux_coefficient(0.0, 0.0, 0.5) == 1.0
    assert slfem.flux_coefficient(3.0, 4.0, 0.5) == pytest.approx(1.0 / 6.0, abs=1e-15)


def test_expressions():
    assert slfem.eval_expression("pi/2*y^2", 0.0, 1.0) == pytest.approx(math.pi / 2)
    assert slfem.eval_expression("2^-3", 0.0, 0.0) == 0.125
    with pytest.raises(slfem.ParseError):
        slfem.eval_expression("foo", 0.0, 0.0)


def test_solve_manufactured_square():
    mesh = slfem.generate_square_mesh(8)
    result = slfem.solve(
        mesh,
        MANUFACTURED_BC,
        f="-pi/(1+pi*y)^2",
        mu=0.5,
        tol=1e-12,
        max_iters=200,
    )
    assert result["converged"]
    assert result["iterations"] == len(result["diffs"])

    worst = 0.0
    for (x, y), value in zip(mesh.node_coords(), result["values"]):
        worst = max(worst, abs(value - math.pi / 2.0 * y * y))
    assert worst < 1e-6

    assert slfem.max_normalized_flux(mesh, result["values"]) < 1.0


def test_missing_boundary_label():
    mesh = slfem.generate_square_mesh(8)
    with pytest.raises(slfem.ConfigError):
        slfem.solve(mesh, {"Gamma_D1": "0"})


def test_mesh_round_trip(tmp_path):
    mesh = slfem.generate_square_mesh(16)
    path = str(tmp_path / "square16.json")
    slfem.write_mesh(mesh, path)
    back = slfem.read_mesh(path)
    assert back.n_elements == mesh.n_elements
    assert back.n_dof == mesh.n_dof
    assert back.node_coords() == mesh.node_coords()
    assert slfem.validate_mesh(back) == []


def test_convergence_study():
    rows = slfem.convergence_study([8, 16])
    assert [row["elements"] for row in rows] == [8, 16]
    assert all(row["l2"] <= 1e-6 for row in rows)


def test_cli_mesh_and_solve(tmp_path):
    mesh_path = tmp_path / "mesh.json"
    result = run_cli("mesh", "--domain", "square", "--elements", "8", "-o", mesh_path)
    assert result.returncode == 0, result.stderr
    assert "elements=8 dof=49 boundary_nodes=24" in result.stdout
    assert "RESULT: ok" in result.stdout

    bc_path = tmp_path / "bc.json"
    bc_path.write_text(json.dumps({"dirichlet": MANUFACTURED_BC, "f": "-pi/(1+pi*y)^2"}))
    sol_path = tmp_path / "solution.vtk"
    trace_path = tmp_path / "trace.csv"
    result = run_cli(
        "solve",
        "--mesh", mesh_path,
        "--bc", bc_path,
        "-o", sol_path,
        "--trace", trace_path,
    )
    assert result.returncode == 0, result.stderr
    assert "RESULT: converged" in result.stdout

    trace_lines = trace_path.read_text().splitlines()
    assert trace_lines[0] == "iter,max_diff"
    assert len(trace_lines) >= 2
    assert sol_path.read_text().startswith("# vtk DataFile Version 3.0")


def test_cli_solve_rejects_incomplete_bc(tmp_path):
    mesh_path = tmp_path / "mesh.json"
    assert run_cli("mesh", "--domain", "square", "-o", mesh_path).returncode == 0

    bc_path = tmp_path / "bc.json"
    bc_path.write_text(json.dumps({"dirichlet": {"Gamma_D1": "0"}}))
    result = run_cli("solve", "--mesh", mesh_path, "--bc", bc_path, "-o", tmp_path / "s.vtk")
    assert result.returncode != 0
    assert "Gamma_D" in result.stdout + result.stderr


def test_cli_verify(tmp_path):
    report_path = tmp_path / "report.csv"
    result = run_cli("verify", "--case", "square-manufactured", "-o", report_path, cwd=tmp_path)
    assert result.returncode == 0, result.stderr
    lines = report_path.read_text().splitlines()
    assert lines[0] == "elements,dof,e_abs,e_rel,l2"
    assert len(lines) == 4
    for line in lines[1:]:
        assert float(line.split(",")[4]) <= 1e-6
