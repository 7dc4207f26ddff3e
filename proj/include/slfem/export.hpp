#pragma once

#include <string>

#include "slfem/solver.hpp"

namespace slfem {

/// Legacy ASCII VTK unstructured grid: every cubic triangle is emitted as
/// nine straight sub-triangles through its edge and interior nodes, and
/// the nodal field is attached as point data named "phi".
void write_vtk(const Mesh& mesh, const CoefficientField& values, const std::string& path);

/// CSV of the Picard iteration history: header "iter,max_diff", one row
/// per iteration, iterations numbered from 1.
void write_trace_csv(const IterationTrace& trace, const std::string& path);

}  // namespace slfem
