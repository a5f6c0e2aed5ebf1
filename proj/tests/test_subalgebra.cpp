#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "spingeo/subalgebra.hpp"

using namespace spingeo;
using namespace spingeo::subalgebra;
using pauli::PauliString;
using pauli::all_points;
using pauli::parse_pauli;

namespace {

std::set<std::string> labels_of(const OperatorSet& s) {
  std::set<std::string> out;
  for (const auto& m : s.members) out.insert(m.label());
  return out;
}

// test-only brute force: every 5-subset of the 15 points whose pairs all
// anticommute, decided by the matrix oracle
std::set<std::set<std::string>> pentads_by_brute_force() {
  auto pts = all_points(2);
  std::set<std::set<std::string>> out;
  std::vector<int> idx(15);
  for (int i = 0; i < 15; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<bool> pick(15, false);
  std::fill(pick.begin(), pick.begin() + 5, true);
  std::sort(pick.begin(), pick.end());  // lowest combination first
  do {
    std::vector<std::string> chosen;
    for (int i = 0; i < 15; ++i)
      if (pick[static_cast<std::size_t>(i)])
        chosen.push_back(pts[static_cast<std::size_t>(i)].label());
    bool ok = true;
    for (std::size_t i = 0; i < 5 && ok; ++i)
      for (std::size_t j = i + 1; j < 5 && ok; ++j)
        if (!oracle::anticommute(chosen[i], chosen[j])) ok = false;
    if (ok) out.insert({chosen.begin(), chosen.end()});
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST_CASE("operator set construction") {
  CHECK_THROWS_AS(OperatorSet::from_labels({"II"}, 2), std::invalid_argument);
  CHECK_THROWS_AS(OperatorSet::from_strings({}), std::invalid_argument);
  auto s = OperatorSet::from_labels({"XX", "XX", "ZZ"}, 2);
  CHECK(s.members.size() == 2);  // duplicates collapse
}

TEST_CASE("lie closure") {
  auto s = lie_closure(OperatorSet::from_labels({"XI", "IX"}, 2));
  CHECK(labels_of(s) == std::set<std::string>{"XI", "IX"});

  // anticommuting pairs generate; commuting pairs impose nothing
  auto grown = lie_closure(OperatorSet::from_labels({"XX", "ZZ", "XZ"}, 2));
  CHECK(labels_of(grown) ==
        std::set<std::string>{"XX", "ZZ", "XZ", "ZX", "IY", "YI"});
  // every anticommuting pair's product is inside, per the matrix oracle
  for (const auto& a : grown.members)
    for (const auto& b : grown.members) {
      if (a == b || oracle::commute(a.label(), b.label())) continue;
      auto prod = pauli::multiply(pauli::PhasedPauli{a, 0}, pauli::PhasedPauli{b, 0});
      CHECK(grown.contains(prod.string));
    }

  // monotone and idempotent
  CHECK(lie_closure(grown) == grown);
  for (const auto& m : OperatorSet::from_labels({"XX", "ZZ", "XZ"}, 2).members)
    CHECK(grown.contains(m));

  // heptads are already closed
  auto heptad = OperatorSet::from_labels({"YY", "YI", "IY", "XX", "XZ", "ZX", "ZZ"}, 2);
  CHECK(lie_closure(heptad) == heptad);
}

TEST_CASE("product closure") {
  auto heptad = OperatorSet::from_labels({"YY", "YI", "IY", "XX", "XZ", "ZX", "ZZ"}, 2);
  CHECK(product_closure_check(heptad));
  CHECK_FALSE(product_closure_check(OperatorSet::from_labels({"XI", "IX"}, 2)));
  CHECK(product_closure_check(OperatorSet::from_strings(all_points(2))));
  // the heptad minus its center is commutation-closed but not product-closed
  auto hexad = OperatorSet::from_labels({"YI", "IY", "XX", "XZ", "ZX", "ZZ"}, 2);
  CHECK(lie_closure(hexad) == hexad);
  CHECK_FALSE(product_closure_check(hexad));
}

TEST_CASE("heptads") {
  auto reports = heptads();
  REQUIRE(reports.size() == 15);
  std::set<std::string> centers;
  for (const auto& r : reports) {
    CHECK(r.label == SubalgebraLabel::Su2Su2U1Heptad);
    CHECK(r.closed_under_product);
    CHECK(r.closed_under_commutation);
    CHECK(r.members.members.size() == 7);
    CHECK(r.commuting_lines == 3);
    CHECK(r.anticommuting_lines == 4);
    REQUIRE(r.center.size() == 1);
    centers.insert(r.center.front().label());
  }
  CHECK(centers.size() == 15);  // in bijection with the points

  for (const auto& r : reports)
    if (r.center.front().label() == "YY")
      CHECK(labels_of(r.members) ==
            std::set<std::string>{"YY", "YI", "IY", "XX", "XZ", "ZX", "ZZ"});
}

TEST_CASE("heptad geometry") {
  auto reports = heptads();
  for (const auto& r : reports) {
    geometry::IncidenceStructure g = heptad_geometry(r);
    auto d = geometry::design_params(g);
    CHECK(d.v == 7);
    CHECK(d.b == 7);
    CHECK(d.r == 3);
    CHECK(d.k == 3);
    CHECK(d.lambda == 1);
    int center = -1;
    for (std::size_t p = 0; p < g.points.size(); ++p)
      if (g.points[p] == r.center.front().label()) center = static_cast<int>(p);
    for (const auto& l : g.lines)
      if (l.kind == geometry::LineKind::Commuting)
        CHECK(std::find(l.points.begin(), l.points.end(), center) != l.points.end());
  }

  SubalgebraReport bogus = classify(OperatorSet::from_labels({"XI", "YI", "ZI"}, 2));
  CHECK_THROWS_AS(heptad_geometry(bogus), std::invalid_argument);
}

TEST_CASE("pentads match the brute-force enumeration") {
  auto ps = pentads();
  auto brute = pentads_by_brute_force();
  CHECK(ps.size() == brute.size());
  CHECK(ps.size() == 6);
  for (const auto& p : ps) {
    CHECK(is_pentad(p));
    CHECK(brute.count(labels_of(p)) == 1);
  }
  // the example pentad appears
  auto example = OperatorSet::from_labels({"XX", "YX", "ZX", "IY", "IZ"}, 2);
  CHECK(std::count(ps.begin(), ps.end(), example) == 1);
}

TEST_CASE("no six-element anticommuting set") {
  auto pts = all_points(2);
  for (const auto& p : pentads())
    for (const auto& q : pts) {
      if (p.contains(q)) continue;
      bool extends = true;
      for (const auto& m : p.members)
        if (pauli::commutes(m, q)) { extends = false; break; }
      CHECK_FALSE(extends);
    }
}

TEST_CASE("decads") {
  auto example = OperatorSet::from_labels({"XX", "YX", "ZX", "IY", "IZ"}, 2);
  SubalgebraReport decad = decad_from_pentad(example);
  CHECK(labels_of(decad.members) ==
        std::set<std::string>{"XI", "YI", "ZI", "IX", "XY", "XZ", "YY", "YZ", "ZY", "ZZ"});
  CHECK(decad.label == SubalgebraLabel::So5Decad);
  CHECK(decad.closed_under_commutation);
  CHECK(decad.center.empty());

  for (const auto& p : pentads()) {
    SubalgebraReport r = decad_from_pentad(p);
    CHECK(r.members.members.size() == 10);
    // the decad is the pentad's complement
    std::size_t covered = 0;
    for (const auto& q : all_points(2))
      if (p.contains(q) || r.members.contains(q)) ++covered;
    CHECK(covered == 15);
    CHECK(lie_closure(r.members) == r.members);

    geometry::IncidenceStructure g = decad_geometry(r);
    auto d = geometry::design_params(g);
    CHECK(d.v == 10);
    CHECK(d.b == 10);
    CHECK(d.r == 3);
    CHECK(d.k == 3);
    CHECK_FALSE(d.lambda.has_value());
    CHECK(d.is_configuration);
    CHECK_FALSE(geometry::is_projective_plane(g));
    for (const auto& l : g.lines)
      CHECK(l.kind == geometry::LineKind::Anticommuting);
  }

  CHECK_THROWS_AS(decad_from_pentad(OperatorSet::from_labels({"XI", "IX"}, 2)),
                  std::invalid_argument);
}

TEST_CASE("classify") {
  auto su2 = classify(OperatorSet::from_labels({"XI", "YI", "ZI"}, 2));
  CHECK(su2.label == SubalgebraLabel::Other);
  CHECK(su2.closed_under_product);

  auto full = classify(OperatorSet::from_strings(all_points(2)));
  CHECK(full.label == SubalgebraLabel::FullSu4);

  auto heptad = classify(OperatorSet::from_labels(
      {"YY", "YI", "IY", "XX", "XZ", "ZX", "ZZ"}, 2));
  CHECK(heptad.label == SubalgebraLabel::Su2Su2U1Heptad);
}
