// Acceptance suite: one test case per criterion, each printing a pass/fail
// line with its runtime. Expected values here are frozen independently of
// the library paths they check (the multiplication table is restated
// literally, matrices come from the test-only oracle).

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "spingeo/geometry.hpp"
#include "spingeo/hypercomplex.hpp"
#include "spingeo/liealg.hpp"
#include "spingeo/pauli.hpp"
#include "spingeo/subalgebra.hpp"
#include "spingeo/verify.hpp"

using namespace spingeo;
namespace hc = spingeo::hypercomplex;
namespace ge = spingeo::geometry;
namespace pa = spingeo::pauli;
namespace sa = spingeo::subalgebra;
namespace la = spingeo::liealg;

namespace {

struct Criterion {
  int number;
  const char* name;
  double limit_ms;
  std::chrono::steady_clock::time_point start;

  Criterion(int n, const char* nm, double limit)
      : number(n), name(nm), limit_ms(limit),
        start(std::chrono::steady_clock::now()) {}

  void finish(bool passed) {
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::printf("criterion %2d %s: %s (%.0f ms, limit %.0f ms)\n", number,
                name, passed ? "PASS" : "FAIL", ms, limit_ms);
    CHECK(passed);
    CHECK(ms < limit_ms);
  }
};

// Frozen copy of the 7x7 unit product table: sign and index, index 0 = real.
const int kSign[7][7] = {
    {-1, +1, +1, -1, +1, -1, -1},
    {-1, -1, +1, +1, -1, +1, -1},
    {-1, -1, -1, +1, +1, -1, +1},
    {+1, -1, -1, -1, +1, +1, -1},
    {-1, +1, -1, -1, -1, +1, +1},
    {+1, -1, +1, -1, -1, -1, +1},
    {+1, +1, -1, +1, -1, -1, -1},
};
const int kIndex[7][7] = {
    {0, 4, 7, 2, 6, 5, 3},
    {4, 0, 5, 1, 3, 7, 6},
    {7, 5, 0, 6, 2, 4, 1},
    {2, 1, 6, 0, 7, 3, 5},
    {6, 3, 2, 7, 0, 1, 4},
    {5, 7, 4, 3, 1, 0, 2},
    {3, 6, 1, 5, 4, 2, 0},
};

hc::Octonion rand_oct(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  hc::Octonion o;
  for (auto& c : o.c) c = Rational(d(rng));
  return o;
}

hc::Quaternion rand_quat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  return hc::Quaternion(Rational(d(rng)), Rational(d(rng)), Rational(d(rng)),
                        Rational(d(rng)));
}

}  // namespace

TEST_CASE("criterion 1: octonion table fidelity") {
  Criterion cr(1, "octonion table fidelity", 1000);
  bool ok = true;
  for (int i = 1; i <= 7 && ok; ++i)
    for (int j = 1; j <= 7 && ok; ++j) {
      hc::Octonion p = hc::oct_mul(hc::Octonion::unit(i), hc::Octonion::unit(j));
      int idx = kIndex[i - 1][j - 1];
      for (int k = 0; k < 8; ++k) {
        Rational want = (k == idx) ? Rational(kSign[i - 1][j - 1]) : Rational(0);
        if (p.c[static_cast<std::size_t>(k)] != want) ok = false;
      }
    }
  ok = ok && hc::verify_sign_balance() && hc::verify_index_rules();
  cr.finish(ok);
}

TEST_CASE("criterion 2: fano plane") {
  Criterion cr(2, "fano plane 2-(7,3,1)", 1000);
  ge::IncidenceStructure fano = hc::fano_from_table();
  ge::DesignParameters d = ge::design_params(fano);
  bool ok = d.v == 7 && d.b == 7 && d.r == 3 && d.k == 3 && d.lambda == 1 &&
            d.is_2_design && ge::is_projective_plane(fano) &&
            ge::are_isomorphic(fano, ge::dual(fano));
  cr.finish(ok);
}

TEST_CASE("criterion 3: hypercomplex properties") {
  Criterion cr(3, "hypercomplex properties", 5000);
  bool ok = true;
  std::mt19937_64 rng(0x5eed);
  for (int t = 0; t < 10000 && ok; ++t) {
    hc::Octonion x = rand_oct(rng), y = rand_oct(rng);
    ok = hc::associator(x, x, y).is_zero() && hc::associator(y, x, x).is_zero() &&
         hc::norm_composition_check(x, y);
  }
  hc::Octonion w =
      hc::associator(hc::Octonion::unit(1), hc::Octonion::unit(2), hc::Octonion::unit(3));
  ok = ok && !w.is_zero();
  for (int i = 0; i < 4 && ok; ++i)
    for (int j = 0; j < 4 && ok; ++j) {
      hc::Quaternion a = hc::Quaternion::unit(i), b = hc::Quaternion::unit(j);
      ok = hc::quat_to_pauli(hc::quat_mul(a, b)) ==
           hc::quat_to_pauli(a) * hc::quat_to_pauli(b);
    }
  for (int t = 0; t < 1000 && ok; ++t) {
    hc::Quaternion a = rand_quat(rng), b = rand_quat(rng);
    ok = hc::quat_to_pauli(hc::quat_mul(a, b)) ==
         hc::quat_to_pauli(a) * hc::quat_to_pauli(b);
  }
  cr.finish(ok);
}

TEST_CASE("criterion 4: pauli oracle agreement") {
  Criterion cr(4, "pauli oracle agreement", 5000);
  bool ok = true;
  std::vector<pa::PhasedPauli> all;
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t z = 0; z < 4; ++z)
      all.push_back(pa::PhasedPauli{pa::PauliString{2, x, z}, 0});
  for (const auto& a : all)
    for (const auto& b : all) {
      pa::PhasedPauli prod = pa::multiply(a, b);
      ComplexMatrix expect =
          oracle::matrix(a.string.label()) * oracle::matrix(b.string.label());
      if (oracle::matrix(prod.string.label())
              .scaled(GaussianRational::i_pow(prod.phase_exp)) != expect)
        ok = false;
      if (!a.string.is_identity() && !b.string.is_identity() &&
          pa::commutes(a.string, b.string) !=
              oracle::commute(a.string.label(), b.string.label()))
        ok = false;
    }
  cr.finish(ok);
}

TEST_CASE("criterion 5: degree table") {
  Criterion cr(5, "degree table 0/6/30/126", 10000);
  const long long want[5] = {0, 0, 6, 30, 126};
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    if (pa::degree(n) != want[n]) ok = false;
    pa::CommutationGraph g = pa::commutation_graph(n);
    if (static_cast<long long>(g.vertices.size()) != pa::num_points(n)) ok = false;
    for (const auto& nbrs : g.adjacency)
      if (static_cast<long long>(nbrs.size()) != want[n]) ok = false;
  }
  cr.finish(ok);
}

TEST_CASE("criterion 6: two-qubit line census") {
  Criterion cr(6, "line census 35 = 15 + 20", 1000);
  ge::IncidenceStructure s = ge::operator_lines(pa::all_points(2));
  int comm = 0, anti = 0;
  bool ok = s.lines.size() == 35;
  std::map<std::pair<int, int>, int> pairs;
  auto pts = pa::all_points(2);
  for (const ge::Line& l : s.lines) {
    (*l.kind == ge::LineKind::Commuting ? comm : anti)++;
    bool c01 = pa::commutes(pts[static_cast<std::size_t>(l.points[0])],
                            pts[static_cast<std::size_t>(l.points[1])]);
    bool c02 = pa::commutes(pts[static_cast<std::size_t>(l.points[0])],
                            pts[static_cast<std::size_t>(l.points[2])]);
    bool c12 = pa::commutes(pts[static_cast<std::size_t>(l.points[1])],
                            pts[static_cast<std::size_t>(l.points[2])]);
    if (c01 != c02 || c01 != c12) ok = false;  // homogeneity
    if (c01 != (*l.kind == ge::LineKind::Commuting)) ok = false;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        pairs[{l.points[i], l.points[j]}]++;
  }
  ok = ok && comm == 15 && anti == 20 && pairs.size() == 105;
  for (const auto& [pq, n] : pairs)
    if (n != 1) ok = false;
  cr.finish(ok);
}

TEST_CASE("criterion 7: heptads") {
  Criterion cr(7, "15 heptads with 4+3 census", 1000);
  auto reports = sa::heptads();
  bool ok = reports.size() == 15;
  for (const auto& r : reports) {
    ok = ok && r.label == sa::SubalgebraLabel::Su2Su2U1Heptad &&
         r.closed_under_product && r.commuting_lines == 3 &&
         r.anticommuting_lines == 4 && r.center.size() == 1;
    if (!ok) break;
    ge::IncidenceStructure g = sa::heptad_geometry(r);
    int center = -1;
    for (std::size_t p = 0; p < g.points.size(); ++p)
      if (g.points[p] == r.center.front().label()) center = static_cast<int>(p);
    for (const auto& l : g.lines)
      if (l.kind == ge::LineKind::Commuting &&
          std::find(l.points.begin(), l.points.end(), center) == l.points.end())
        ok = false;
    if (r.center.front().label() == "YY") {
      std::set<std::string> got;
      for (const auto& m : r.members.members) got.insert(m.label());
      if (got != std::set<std::string>{"YY", "YI", "IY", "XX", "XZ", "ZX", "ZZ"})
        ok = false;
    }
  }
  cr.finish(ok);
}

TEST_CASE("criterion 8: pentads and decads") {
  Criterion cr(8, "pentads and so(5) decads", 5000);
  auto ps = sa::pentads();
  bool ok = !ps.empty();
  auto pts = pa::all_points(2);
  for (const auto& p : ps) {
    ok = ok && sa::is_pentad(p);
    for (const auto& q : pts) {
      if (p.contains(q)) continue;
      bool extends = true;
      for (const auto& m : p.members)
        if (pa::commutes(m, q)) { extends = false; break; }
      if (extends) ok = false;  // a 6-element anticommuting set would exist
    }
    sa::SubalgebraReport decad = sa::decad_from_pentad(p);
    ok = ok && decad.closed_under_commutation &&
         decad.members.members.size() == 10;
    ge::IncidenceStructure g = sa::decad_geometry(decad);
    ok = ok && g.lines.size() == 10;
    for (int d : g.point_degrees())
      if (d != 3) ok = false;
    for (const auto& l : g.lines)
      if (l.kind != ge::LineKind::Anticommuting) ok = false;
  }
  cr.finish(ok);
}

TEST_CASE("criterion 9: doily") {
  Criterion cr(9, "polar space doily GQ(2,2)", 2000);
  ge::IncidenceStructure w = ge::symplectic_polar_space(2);
  bool ok = w.points.size() == 15 && w.lines.size() == 15 && ge::gq22_check(w) &&
            ge::are_isomorphic(w, ge::dual(w));
  cr.finish(ok);
}

TEST_CASE("criterion 10: census-constrained 15-line configuration") {
  Criterion cr(10, "15-line configuration, 1 + 14", 60000);
  ge::IncidenceStructure all = ge::operator_lines(pa::all_points(2));
  ge::KindCensus census;
  census.commuting = 1;
  census.anticommuting = 14;
  ge::ConfigSearchOptions opts;
  opts.max_solutions = 1;
  auto sols = ge::find_configuration(all, 15, 3, census, opts);
  bool ok = !sols.empty();
  if (ok) {
    std::vector<int> deg(all.points.size(), 0);
    int comm = 0;
    for (int li : sols[0]) {
      const ge::Line& l = all.lines[static_cast<std::size_t>(li)];
      if (*l.kind == ge::LineKind::Commuting) comm++;
      for (int p : l.points) deg[static_cast<std::size_t>(p)]++;
    }
    ok = sols[0].size() == 15 && comm == 1;
    for (int d : deg)
      if (d != 3) ok = false;
  }
  cr.finish(ok);
}

TEST_CASE("criterion 11: so(4) suite") {
  Criterion cr(11, "so(4) split and arrangement", 1000);
  la::StructureConstantAlgebra so4 = la::make_so4();
  bool ok = la::jacobi_check(so4);
  la::StructureConstantAlgebra split = la::change_basis(
      so4, la::so4_split_basis(), {"J+x", "J+y", "J+z", "J-x", "J-y", "J-z"});
  auto blocks = la::commuting_block_decomposition(split);
  ok = ok && blocks.size() == 2 && blocks[0].size() == 3 && blocks[1].size() == 3;
  const GaussianRational i = GaussianRational::i();
  for (int base : {0, 3})
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 0; k < 6; ++k) {
          GaussianRational want;
          if (a != b && k == base + (3 - a - b))
            want = ((b - a + 3) % 3 == 1) ? i : -i;
          if (split.f(base + a, base + b, k) != want) ok = false;
        }
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b)
      for (int k = 0; k < 6; ++k)
        if (!split.f(a, b, k).is_zero()) ok = false;
  ok = ok && la::su2_triples(so4).size() == 4;
  ge::IncidenceStructure fig = la::fano_arrangement_so4();
  ok = ok && ge::are_isomorphic(fig, sa::heptad_geometry(sa::heptads().front()));
  cr.finish(ok);
}

TEST_CASE("criterion 12: verify-all") {
  Criterion cr(12, "verify-all deterministic pass", 120000);
  auto a = verify::verify_all();
  auto b = verify::verify_all();
  bool ok = verify::all_passed(a) &&
            verify::format_reports(a, false) == verify::format_reports(b, false);
  cr.finish(ok);
}
