#pragma once

#include <array>
#include <string>
#include <vector>

#include "spingeo/geometry.hpp"
#include "spingeo/rational.hpp"

namespace spingeo::liealg {

/// A Lie algebra given by basis labels and exact structure constants:
/// [b_i, b_j] = sum_k f(i,j,k) b_k, f complex rational.
class StructureConstantAlgebra {
public:
  explicit StructureConstantAlgebra(std::vector<std::string> basis_labels);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  const GaussianRational& f(int i, int j, int k) const;
  /// Sets f(i,j,k) and the antisymmetric partner f(j,i,k) = -f.
  void set_f(int i, int j, int k, const GaussianRational& value);

  /// Bracket of two coefficient vectors in this basis.
  std::vector<GaussianRational> bracket(const std::vector<GaussianRational>& x,
                                        const std::vector<GaussianRational>& y) const;

private:
  std::vector<std::string> labels_;
  std::vector<GaussianRational> f_;  // dim^3, row-major (i,j,k)
};

/// Invertible rational matrix whose rows are the new basis elements
/// written in the old basis.
struct BasisChange {
  int dim = 0;
  std::vector<Rational> m;  // dim x dim, row-major

  const Rational& at(int r, int c) const { return m[static_cast<std::size_t>(r * dim + c)]; }
  Rational& at(int r, int c) { return m[static_cast<std::size_t>(r * dim + c)]; }
};

/// so(4) over (L_x, L_y, L_z, A_x, A_y, A_z):
/// [L_i, L_j] = i eps_ijk L_k, [L_i, A_j] = i eps_ijk A_k,
/// [A_i, A_j] = i eps_ijk L_k.
StructureConstantAlgebra make_so4();

/// Sum over cyclic permutations of [[b_i, b_j], b_k] vanishes, exactly,
/// for all triples.
bool jacobi_check(const StructureConstantAlgebra& a);

/// Structure constants transformed covariantly under t (rows of t are the
/// new basis in old coordinates). Throws on singular t or dimension
/// mismatch. New labels may be supplied; defaults to b'0, b'1, ...
StructureConstantAlgebra change_basis(const StructureConstantAlgebra& a,
                                      const BasisChange& t,
                                      std::vector<std::string> new_labels = {});

/// The (L+A)/2, (L-A)/2 basis change for so(4), with labels J+x.. J-z.
BasisChange so4_split_basis();

/// Partition of basis indices into maximal blocks with all cross-block
/// structure constants zero.
std::vector<std::vector<int>> commuting_block_decomposition(
    const StructureConstantAlgebra& a);

/// All basis triples {x,y,z} with [x,y] proportional to z, [y,z] to x,
/// [z,x] to y, nonzero and closed within the triple.
std::vector<std::array<int, 3>> su2_triples(const StructureConstantAlgebra& a);

/// Fano-plane arrangement of so(4): points L, A and the unit operator;
/// lines = the 4 su(2) triples (oriented) plus the 3 commuting triples
/// {L_i, A_i, unit} (unoriented).
geometry::IncidenceStructure fano_arrangement_so4();

}  // namespace spingeo::liealg
