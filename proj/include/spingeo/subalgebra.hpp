#pragma once

#include <string>
#include <vector>

#include "spingeo/geometry.hpp"
#include "spingeo/pauli.hpp"

namespace spingeo::subalgebra {

/// A set of distinct non-identity Pauli strings of common qubit count,
/// kept sorted in the canonical (x_bits, z_bits) order.
struct OperatorSet {
  int n_qubits = 2;
  std::vector<pauli::PauliString> members;

  static OperatorSet from_strings(std::vector<pauli::PauliString> strings);
  static OperatorSet from_labels(const std::vector<std::string>& labels, int n);

  bool contains(const pauli::PauliString& p) const;
  friend bool operator==(const OperatorSet& a, const OperatorSet& b) {
    return a.members == b.members;
  }
};

enum class SubalgebraLabel { Su2Su2U1Heptad, So5Decad, FullSu4, Other };

std::string to_string(SubalgebraLabel l);

struct SubalgebraReport {
  OperatorSet members;
  bool closed_under_commutation = false;
  bool closed_under_product = false;
  int commuting_lines = 0;
  int anticommuting_lines = 0;
  std::vector<pauli::PauliString> center;  // members commuting with all others
  SubalgebraLabel label = SubalgebraLabel::Other;
};

/// Smallest superset closed under: for every anticommuting pair, their
/// projective product is in the set. Commuting pairs impose nothing.
OperatorSet lie_closure(const OperatorSet& seed);

/// Every pairwise projective product lies in s or is the identity.
bool product_closure_check(const OperatorSet& s);

/// Closure flags, center, internal line census, and a census-derived label.
SubalgebraReport classify(const OperatorSet& s);

/// The 15 su(2) x su(2) x u(1) heptads of the two-qubit algebra, one per
/// point c: {c} union centralizer(c). Ordered by center.
std::vector<SubalgebraReport> heptads();

/// Internal incidence geometry of a heptad (7 points, 7 operator lines).
/// Throws std::invalid_argument unless r is labeled as a heptad.
geometry::IncidenceStructure heptad_geometry(const SubalgebraReport& r);

/// All 5-element mutually anticommuting sets of two-qubit points,
/// canonically ordered. Every one of these is maximal.
std::vector<OperatorSet> pentads();

/// True iff s is 5 mutually anticommuting two-qubit points.
bool is_pentad(const OperatorSet& s);

/// The so(5) decad: the 10 projective products of distinct pentad pairs.
/// Throws std::invalid_argument if p is not a pentad.
SubalgebraReport decad_from_pentad(const OperatorSet& p);

/// Internal incidence geometry of a decad (10 points, 10 lines).
/// Throws std::invalid_argument unless r is labeled as a decad.
geometry::IncidenceStructure decad_geometry(const SubalgebraReport& r);

}  // namespace spingeo::subalgebra
