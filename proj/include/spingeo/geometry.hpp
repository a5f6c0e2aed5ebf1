#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spingeo/pauli.hpp"

namespace spingeo::geometry {

enum class LineKind { Commuting, Anticommuting };

std::string to_string(LineKind k);

/// A line of an incidence structure: sorted point indices, an optional
/// commuting/anticommuting tag, and an optional cyclic orientation
/// (recorded for operator lines from the phase of the underlying product).
struct Line {
  std::vector<int> points;
  std::optional<LineKind> kind;
  std::optional<std::array<int, 3>> orientation;

  friend bool operator==(const Line& a, const Line& b) { return a.points == b.points; }
};

/// Labeled points plus lines as point-index subsets.
struct IncidenceStructure {
  std::vector<std::string> points;
  std::vector<Line> lines;

  /// Number of lines through each point.
  std::vector<int> point_degrees() const;
};

struct DesignParameters {
  int v = 0;
  int b = 0;
  std::optional<int> r;       // lines per point, when constant
  std::optional<int> k;       // points per line, when constant
  std::optional<int> lambda;  // lines per point-pair, when constant
  bool is_2_design = false;
  bool is_projective_plane = false;
  bool is_configuration = false;  // n_r: v==b, constant r==k, lambda at most 1
};

/// All operator lines {a,b,c} inside `points`: the product of any two is
/// projectively the third. Returns an IncidenceStructure whose point set
/// is `points` in the given order, lines canonically sorted, each tagged
/// commuting or anticommuting, anticommuting lines carrying the cyclic
/// orientation with product phase +i.
IncidenceStructure operator_lines(const std::vector<pauli::PauliString>& points);

DesignParameters design_params(const IncidenceStructure& s);

/// Projective-plane axioms: every two points on exactly one line, every
/// two lines meeting in exactly one point, and a quadrilateral (4 points
/// no 3 collinear) exists.
bool is_projective_plane(const IncidenceStructure& s);

/// Point/line interchange: new points are the old lines, one new line per
/// old point holding the old lines through it. Kind tags carry over to
/// the new points' labels only; the dual's lines are untagged.
IncidenceStructure dual(const IncidenceStructure& s);

/// Incidence-structure isomorphism by backtracking with degree-partition
/// pruning. Throws std::invalid_argument past max_points.
bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                    int max_points = 40);

/// Generalized-quadrangle GQ(2,2) axioms: 3 points per line, 3 lines per
/// point, two points on at most one common line, and for every
/// point-off-line exactly one collinear point on the line.
bool gq22_check(const IncidenceStructure& s);

/// The symplectic polar space W_{2N-1}(2): all points, lines = the
/// totally isotropic (mutually commuting, product-closed) triples.
/// n in 1..4.
IncidenceStructure symplectic_polar_space(int n);

struct KindCensus {
  int commuting = -1;      // -1 = unconstrained
  int anticommuting = -1;
};

struct ConfigSearchOptions {
  int max_solutions = 0;   // 0 = enumerate all
};

/// Search for b_target-line sub-collections of `candidates.lines` in which
/// every point lies on exactly r_target lines and the per-kind line counts
/// match `census`. Returns sorted line-index subsets in lexicographic
/// order. Infeasible targets give an empty list.
std::vector<std::vector<int>> find_configuration(const IncidenceStructure& candidates,
                                                 int b_target, int r_target,
                                                 const KindCensus& census,
                                                 const ConfigSearchOptions& opts = {});

}  // namespace spingeo::geometry
