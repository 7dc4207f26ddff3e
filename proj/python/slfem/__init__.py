"""Cubic curved-triangle finite elements for strain-limiting anti-plane shear."""

from ._core import (
    ConfigError,
    ContractError,
    Error,
    GeometryError,
    Mesh,
    ParseError,
    SolverError,
    convergence_study,
    eval_expression,
    flux_coefficient,
    generate_square_mesh,
    generate_vnotch_inclusions_mesh,
    generate_vnotch_mesh,
    max_normalized_flux,
    read_mesh,
    shape_values,
    solve,
    validate_mesh,
    write_mesh,
    write_vtk,
)

__all__ = [
    "ConfigError",
    "ContractError",
    "Error",
    "GeometryError",
    "Mesh",
    "ParseError",
    "SolverError",
    "convergence_study",
    "eval_expression",
    "flux_coefficient",
    "generate_square_mesh",
    "generate_vnotch_inclusions_mesh",
    "generate_vnotch_mesh",
    "max_normalized_flux",
    "read_mesh",
    "shape_values",
    "solve",
    "validate_mesh",
    "write_mesh",
    "write_vtk",
]
