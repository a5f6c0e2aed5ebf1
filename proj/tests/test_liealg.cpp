#include <doctest.h>

#include <array>

#include "spingeo/liealg.hpp"
#include "spingeo/subalgebra.hpp"

using namespace spingeo;
using namespace spingeo::liealg;

namespace {

std::vector<GaussianRational> basis_vec(int dim, int idx) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(idx)] = GaussianRational(1);
  return v;
}

bool equals_i_times(const std::vector<GaussianRational>& v, int idx) {
  const GaussianRational i = GaussianRational::i();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (static_cast<int>(k) == idx) {
      if (v[k] != i) return false;
    } else if (!v[k].is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("so(4) brackets") {
  StructureConstantAlgebra so4 = make_so4();
  // indices: Lx Ly Lz Ax Ay Az
  CHECK(equals_i_times(so4.bracket(basis_vec(6, 0), basis_vec(6, 1)), 2));  // [Lx,Ly]=iLz
  CHECK(equals_i_times(so4.bracket(basis_vec(6, 3), basis_vec(6, 4)), 2));  // [Ax,Ay]=iLz
  CHECK(equals_i_times(so4.bracket(basis_vec(6, 0), basis_vec(6, 4)), 5));  // [Lx,Ay]=iAz
  auto zero = so4.bracket(basis_vec(6, 0), basis_vec(6, 3));                // [Lx,Ax]=0
  for (const auto& c : zero) CHECK(c.is_zero());
}

TEST_CASE("jacobi") {
  CHECK(jacobi_check(make_so4()));

  StructureConstantAlgebra perturbed = make_so4();
  perturbed.set_f(0, 1, 2, GaussianRational(Rational(2), Rational(1)));
  CHECK_FALSE(jacobi_check(perturbed));

  StructureConstantAlgebra abelian({"a", "b", "c", "d"});
  CHECK(jacobi_check(abelian));
}

TEST_CASE("identity basis change keeps the constants") {
  StructureConstantAlgebra so4 = make_so4();
  BasisChange id;
  id.dim = 6;
  id.m.assign(36, Rational(0));
  for (int i = 0; i < 6; ++i) id.at(i, i) = Rational(1);
  StructureConstantAlgebra same = change_basis(so4, id, so4.labels());
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        CHECK(same.f(i, j, k) == so4.f(i, j, k));
}

TEST_CASE("singular basis change is rejected") {
  BasisChange t;
  t.dim = 6;
  t.m.assign(36, Rational(1));
  CHECK_THROWS_AS(change_basis(make_so4(), t), std::invalid_argument);
  BasisChange wrong;
  wrong.dim = 3;
  wrong.m.assign(9, Rational(0));
  CHECK_THROWS_AS(change_basis(make_so4(), wrong), std::invalid_argument);
}

TEST_CASE("the (L+-A)/2 split") {
  StructureConstantAlgebra split = change_basis(
      make_so4(), so4_split_basis(), {"J+x", "J+y", "J+z", "J-x", "J-y", "J-z"});
  CHECK(jacobi_check(split));
  // [J+x, J+y] = i J+z
  CHECK(equals_i_times(split.bracket(basis_vec(6, 0), basis_vec(6, 1)), 2));
  // [J-x, J-y] = i J-z
  CHECK(equals_i_times(split.bracket(basis_vec(6, 3), basis_vec(6, 4)), 5));
  // all nine cross brackets vanish
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) {
      auto v = split.bracket(basis_vec(6, a), basis_vec(6, b));
      for (const auto& c : v) CHECK(c.is_zero());
    }

  auto blocks = commuting_block_decomposition(split);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(blocks[1] == std::vector<int>{3, 4, 5});

  // the original basis has no split
  auto one = commuting_block_decomposition(make_so4());
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 6);

  StructureConstantAlgebra abelian({"a", "b", "c", "d"});
  CHECK(commuting_block_decomposition(abelian).size() == 4);
}

TEST_CASE("su(2) triples of so(4)") {
  auto triples = su2_triples(make_so4());
  REQUIRE(triples.size() == 4);
  // {Lx, Ly, Lz} and the three {L_i, A_j, A_k} patterns
  CHECK(std::count(triples.begin(), triples.end(), std::array<int, 3>{0, 1, 2}) == 1);
  CHECK(std::count(triples.begin(), triples.end(), std::array<int, 3>{0, 4, 5}) == 1);
  CHECK(std::count(triples.begin(), triples.end(), std::array<int, 3>{1, 3, 5}) == 1);
  CHECK(std::count(triples.begin(), triples.end(), std::array<int, 3>{2, 3, 4}) == 1);
}

TEST_CASE("fano arrangement of so(4)") {
  geometry::IncidenceStructure s = fano_arrangement_so4();
  auto d = geometry::design_params(s);
  CHECK(d.v == 7);
  CHECK(d.b == 7);
  CHECK(d.r == 3);
  CHECK(d.k == 3);
  CHECK(d.lambda == 1);

  int arrowed = 0, unarrowed = 0;
  bool has_lxax1 = false;
  for (const auto& l : s.lines) {
    if (l.kind == geometry::LineKind::Commuting) {
      unarrowed++;
      CHECK_FALSE(l.orientation.has_value());
    } else {
      arrowed++;
    }
    std::vector<std::string> names;
    for (int p : l.points) names.push_back(s.points[static_cast<std::size_t>(p)]);
    if (names == std::vector<std::string>{"Lx", "Ax", "1"}) has_lxax1 = true;
  }
  CHECK(arrowed == 4);
  CHECK(unarrowed == 3);
  CHECK(has_lxax1);

  auto heptad = subalgebra::heptads().front();
  CHECK(geometry::are_isomorphic(s, subalgebra::heptad_geometry(heptad)));
}
