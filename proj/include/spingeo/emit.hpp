#pragma once

#include <string>

#include "spingeo/geometry.hpp"
#include "spingeo/liealg.hpp"
#include "spingeo/subalgebra.hpp"

namespace spingeo::emit {

/// { "points": [...], "lines": [{ "points": [...], "kind": ..., "orientation": ... }] }
std::string incidence_json(const geometry::IncidenceStructure& s);

/// Levi (bipartite point-line) graph in DOT. Line nodes are small squares;
/// commuting lines dashed, anticommuting lines solid with the arrow cycle
/// in the node label.
std::string incidence_dot(const geometry::IncidenceStructure& s,
                          const std::string& graph_name = "levi");

/// Plain-text listing: one line per line, with kind and orientation.
std::string incidence_text(const geometry::IncidenceStructure& s);

std::string report_json(const subalgebra::SubalgebraReport& r);

/// Basis labels plus sparse constant triples.
std::string algebra_json(const liealg::StructureConstantAlgebra& a);
std::string algebra_text(const liealg::StructureConstantAlgebra& a);

/// Commutation graph as a JSON adjacency list keyed by label, or DOT.
std::string graph_json(const pauli::CommutationGraph& g);
std::string graph_dot(const pauli::CommutationGraph& g);

}  // namespace spingeo::emit
