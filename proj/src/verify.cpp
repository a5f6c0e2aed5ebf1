#include "spingeo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "spingeo/emit.hpp"
#include "spingeo/geometry.hpp"
#include "spingeo/hypercomplex.hpp"
#include "spingeo/liealg.hpp"
#include "spingeo/pauli.hpp"
#include "spingeo/subalgebra.hpp"

namespace spingeo::verify {

namespace hc = spingeo::hypercomplex;
namespace ge = spingeo::geometry;
namespace pa = spingeo::pauli;
namespace sa = spingeo::subalgebra;
namespace la = spingeo::liealg;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::string expected;
  std::string actual;
  bool pass = true;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!actual.empty()) actual += "; ";
      actual += "FAILED " + what;
    }
  }
};

RunReport run(const std::string& name, const std::string& expected,
              const std::function<void(Check&)>& body) {
  RunReport r;
  r.name = name;
  r.expected = expected;
  Check c;
  c.expected = expected;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.actual = std::string("exception: ") + e.what();
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  r.pass = c.pass;
  r.actual = c.pass ? (c.actual.empty() ? "as expected" : c.actual) : c.actual;
  return r;
}

hc::Octonion random_octonion(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  hc::Octonion o;
  for (auto& c : o.c) c = Rational(d(rng));
  return o;
}

hc::Quaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  return hc::Quaternion(Rational(d(rng)), Rational(d(rng)), Rational(d(rng)),
                        Rational(d(rng)));
}

void check_oct_table(Check& c) {
  for (int i = 1; i <= 7; ++i) {
    hc::Octonion sq = hc::oct_mul(hc::Octonion::unit(i), hc::Octonion::unit(i));
    c.require(sq.c[0] == Rational(-1) && (sq + hc::Octonion::unit(0)).is_zero(),
              "e" + std::to_string(i) + "^2 = -1");
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      hc::Octonion ab = hc::oct_mul(hc::Octonion::unit(i), hc::Octonion::unit(j));
      hc::Octonion ba = hc::oct_mul(hc::Octonion::unit(j), hc::Octonion::unit(i));
      c.require((ab + ba).is_zero(), "anticommutativity of distinct units");
      hc::TableEntry e = hc::oct_table()[static_cast<std::size_t>(i - 1)]
                                        [static_cast<std::size_t>(j - 1)];
      c.require(ab.c[static_cast<std::size_t>(e.index)] == Rational(e.sign),
                "table entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  c.require(hc::verify_sign_balance(), "3+3 sign balance in all rows/columns");
  c.require(hc::verify_index_rules(), "index shift and doubling rules");
}

void check_fano(Check& c) {
  ge::IncidenceStructure fano = hc::fano_from_table();
  ge::DesignParameters d = ge::design_params(fano);
  std::ostringstream os;
  os << "v=" << d.v << " b=" << d.b;
  if (d.r) os << " r=" << *d.r;
  if (d.k) os << " k=" << *d.k;
  if (d.lambda) os << " lambda=" << *d.lambda;
  c.actual = os.str();
  c.require(d.v == 7 && d.b == 7, "v=b=7");
  c.require(d.r == 3 && d.k == 3, "r=k=3");
  c.require(d.lambda == 1, "lambda=1");
  c.require(d.is_2_design, "2-design");
  c.require(ge::is_projective_plane(fano), "projective plane axioms");
  c.require(ge::are_isomorphic(fano, ge::dual(fano)), "self-duality");
}

void check_hypercomplex(Check& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 10000; ++t) {
    hc::Octonion x = random_octonion(rng), y = random_octonion(rng);
    c.require(hc::associator(x, x, y).is_zero(), "alternativity (x,x,y)");
    c.require(hc::associator(y, x, x).is_zero(), "alternativity (y,x,x)");
    c.require(hc::norm_composition_check(x, y), "norm composition");
    if (!c.pass) return;
  }
  hc::Octonion w = hc::associator(hc::Octonion::unit(1), hc::Octonion::unit(2),
                                  hc::Octonion::unit(3));
  c.require(!w.is_zero() && w.c[6] == Rational(-2), "associator witness -2e6");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      hc::Quaternion a = hc::Quaternion::unit(i), b = hc::Quaternion::unit(j);
      c.require(hc::quat_to_pauli(hc::quat_mul(a, b)) ==
                    hc::quat_to_pauli(a) * hc::quat_to_pauli(b),
                "quaternion homomorphism on basis");
    }
  for (int t = 0; t < 1000; ++t) {
    hc::Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    c.require(hc::quat_to_pauli(hc::quat_mul(a, b)) ==
                  hc::quat_to_pauli(a) * hc::quat_to_pauli(b),
              "quaternion homomorphism on random products");
    if (!c.pass) return;
  }
}

void check_pauli_oracle(Check& c) {
  std::vector<pa::PhasedPauli> all;
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t z = 0; z < 4; ++z)
      all.push_back(pa::PhasedPauli{pa::PauliString{2, x, z}, 0});
  for (const auto& a : all)
    for (const auto& b : all) {
      c.require(pa::to_matrix(pa::multiply(a, b)) ==
                    pa::to_matrix(a) * pa::to_matrix(b),
                "product " + a.label() + " * " + b.label());
      if (!c.pass) return;
    }
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.string.is_identity() || b.string.is_identity()) continue;
      ComplexMatrix ma = pa::to_matrix(a), mb = pa::to_matrix(b);
      bool mat_commutes = (ma * mb - mb * ma).is_zero();
      c.require(mat_commutes == pa::commutes(a.string, b.string),
                "commutes " + a.label() + " vs " + b.label());
      if (!c.pass) return;
    }
}

void check_degree_table(Check& c) {
  const long long expected[5] = {0, 0, 6, 30, 126};
  std::ostringstream os;
  for (int n = 1; n <= 4; ++n) {
    long long d = pa::degree(n);
    os << (n > 1 ? " " : "") << "N=" << n << ": D=" << d;
    c.require(d == expected[n], "closed-form degree N=" + std::to_string(n));
    pa::CommutationGraph g = pa::commutation_graph(n);
    c.require(static_cast<long long>(g.vertices.size()) == pa::num_points(n),
              "vertex count N=" + std::to_string(n));
    for (const auto& nbrs : g.adjacency)
      if (static_cast<long long>(nbrs.size()) != d) {
        c.require(false, "graph regularity N=" + std::to_string(n));
        break;
      }
  }
  if (c.pass) c.actual = os.str();
}

void check_line_census(Check& c) {
  std::vector<pa::PauliString> pts = pa::all_points(2);
  ge::IncidenceStructure s = ge::operator_lines(pts);
  int comm = 0, anti = 0;
  for (const ge::Line& l : s.lines) {
    if (l.kind == ge::LineKind::Commuting) comm++; else anti++;
    // homogeneity: all three pairs agree with the line's tag
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        bool pair_comm = pa::commutes(pts[static_cast<std::size_t>(l.points[i])],
                                      pts[static_cast<std::size_t>(l.points[j])]);
        c.require(pair_comm == (l.kind == ge::LineKind::Commuting),
                  "line homogeneity");
      }
  }
  std::ostringstream os;
  os << s.lines.size() << " lines: " << comm << " commuting, " << anti
     << " anticommuting";
  c.actual = os.str();
  c.require(s.lines.size() == 35, "35 lines");
  c.require(comm == 15 && anti == 20, "15 commuting + 20 anticommuting");
  // every pair of points on exactly one line
  std::map<std::pair<int, int>, int> pairs;
  for (const ge::Line& l : s.lines)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        pairs[{l.points[i], l.points[j]}]++;
  c.require(pairs.size() == 105, "all 105 pairs covered");
  for (const auto& [pq, n] : pairs) c.require(n == 1, "pair on exactly one line");
}

void check_heptads(Check& c) {
  auto reports = sa::heptads();
  c.require(reports.size() == 15, "15 heptads");
  for (const auto& r : reports) {
    c.require(r.label == sa::SubalgebraLabel::Su2Su2U1Heptad, "heptad label");
    c.require(r.closed_under_product && r.closed_under_commutation,
              "heptad closure");
    c.require(r.commuting_lines == 3 && r.anticommuting_lines == 4,
              "heptad census 4+3");
    c.require(r.center.size() == 1, "one-element center");
    if (!c.pass) return;
    ge::IncidenceStructure g = sa::heptad_geometry(r);
    int center_idx = -1;
    for (std::size_t p = 0; p < g.points.size(); ++p)
      if (g.points[p] == r.center.front().label()) center_idx = static_cast<int>(p);
    for (const ge::Line& l : g.lines)
      if (l.kind == ge::LineKind::Commuting)
        c.require(std::find(l.points.begin(), l.points.end(), center_idx) !=
                      l.points.end(),
                  "commuting lines pass through the center");
  }
  // the YY heptad
  auto yy = pa::parse_pauli("YY", 2).string;
  for (const auto& r : reports)
    if (r.center.size() == 1 && r.center.front() == yy) {
      auto want = sa::OperatorSet::from_labels(
          {"YY", "YI", "IY", "XX", "XZ", "ZX", "ZZ"}, 2);
      c.require(r.members == want, "YY heptad membership");
    }
}

void check_pentads(Check& c) {
  auto ps = sa::pentads();
  c.actual = std::to_string(ps.size()) + " pentads";
  c.require(!ps.empty(), "nonzero pentad count");
  std::vector<pa::PauliString> all = pa::all_points(2);
  for (const auto& p : ps) {
    c.require(sa::is_pentad(p), "pentad pairwise anticommutation");
    // no 6th mutually anticommuting element exists
    for (const auto& q : all) {
      if (p.contains(q)) continue;
      bool extends = true;
      for (const auto& m : p.members)
        if (pa::commutes(m, q)) { extends = false; break; }
      c.require(!extends, "pentad maximality");
    }
    sa::SubalgebraReport decad = sa::decad_from_pentad(p);
    c.require(decad.members.members.size() == 10, "decad size");
    c.require(decad.label == sa::SubalgebraLabel::So5Decad, "decad label");
    c.require(decad.closed_under_commutation, "decad commutation closure");
    // pentad + decad = all 15 points
    std::size_t covered = 0;
    for (const auto& q : all)
      if (p.contains(q) || decad.members.contains(q)) ++covered;
    c.require(covered == 15, "pentad and decad partition the 15 points");
    ge::IncidenceStructure g = sa::decad_geometry(decad);
    c.require(g.lines.size() == 10, "decad has 10 internal lines");
    for (int d : g.point_degrees()) c.require(d == 3, "decad point degree 3");
    for (const ge::Line& l : g.lines)
      c.require(l.kind == ge::LineKind::Anticommuting, "decad lines anticommuting");
    if (!c.pass) return;
  }
}

void check_doily(Check& c) {
  ge::IncidenceStructure w = ge::symplectic_polar_space(2);
  std::ostringstream os;
  os << w.points.size() << " points, " << w.lines.size() << " lines";
  c.actual = os.str();
  c.require(w.points.size() == 15 && w.lines.size() == 15, "15 points, 15 lines");
  c.require(ge::gq22_check(w), "GQ(2,2) axioms");
  c.require(ge::are_isomorphic(w, ge::dual(w)), "self-duality");
}

void check_census_search(Check& c) {
  ge::IncidenceStructure all = ge::operator_lines(pa::all_points(2));
  ge::KindCensus census;
  census.commuting = 1;
  census.anticommuting = 14;
  ge::ConfigSearchOptions opts;
  opts.max_solutions = 1;
  auto sols = ge::find_configuration(all, 15, 3, census, opts);
  c.actual = sols.empty() ? "no configuration" : "configuration found";
  c.require(!sols.empty(), "15-line configuration with census 1+14 exists");
}

void check_so4(Check& c) {
  la::StructureConstantAlgebra so4 = la::make_so4();
  c.require(la::jacobi_check(so4), "Jacobi identity");
  la::StructureConstantAlgebra split = la::change_basis(
      so4, la::so4_split_basis(), {"J+x", "J+y", "J+z", "J-x", "J-y", "J-z"});
  c.require(la::jacobi_check(split), "Jacobi preserved by basis change");
  auto blocks = la::commuting_block_decomposition(split);
  c.require(blocks.size() == 2 && blocks[0].size() == 3 && blocks[1].size() == 3,
            "two commuting 3-blocks");
  // each block carries su(2) constants: [J_i, J_j] = i eps_ijk J_k
  const GaussianRational i = GaussianRational::i();
  for (int base : {0, 3}) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        int cidx = 3 - a - b;
        for (int k = 0; k < 6; ++k) {
          GaussianRational want;
          if (a != b && k == base + cidx)
            want = ((b - a + 3) % 3 == 1) ? i : -i;
          c.require(split.f(base + a, base + b, k) == want, "su(2) block constants");
        }
      }
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b)
      for (int k = 0; k < 6; ++k)
        c.require(split.f(a, b, k).is_zero(), "cross-block brackets vanish");
  auto triples = la::su2_triples(so4);
  c.require(triples.size() == 4, "exactly 4 su(2) triples");
  bool has_lll = false;
  for (const auto& t : triples)
    if (t == std::array<int, 3>{0, 1, 2}) has_lll = true;
  c.require(has_lll, "L-triple present");
  ge::IncidenceStructure fig = la::fano_arrangement_so4();
  ge::DesignParameters d = ge::design_params(fig);
  c.require(d.v == 7 && d.b == 7 && d.r == 3 && d.k == 3 && d.lambda == 1,
            "7-point arrangement parameters");
  auto heptad = sa::heptads().front();
  c.require(ge::are_isomorphic(fig, sa::heptad_geometry(heptad)),
            "isomorphic to heptad geometry");
}

}  // namespace

std::vector<RunReport> verify_all(std::uint64_t seed) {
  std::vector<RunReport> out;
  out.push_back(run("octonion-table", "49 products match; sign balance; index rules",
                    check_oct_table));
  out.push_back(run("fano-plane", "2-(7,3,1), projective plane, self-dual",
                    check_fano));
  out.push_back(run("hypercomplex-identities",
                    "alternativity, norm composition, homomorphism",
                    [seed](Check& c) { check_hypercomplex(c, seed); }));
  out.push_back(run("pauli-matrix-oracle", "16x16 products and 15x15 commutation agree",
                    check_pauli_oracle));
  out.push_back(run("degree-table", "N=1: D=0 N=2: D=6 N=3: D=30 N=4: D=126",
                    check_degree_table));
  out.push_back(run("two-qubit-line-census", "35 lines: 15 commuting, 20 anticommuting",
                    check_line_census));
  out.push_back(run("heptads", "15 heptads, census 4+3, center on commuting lines",
                    check_heptads));
  out.push_back(run("pentads-decads", "maximal pentads; so(5) decads with 10_3 geometry",
                    check_pentads));
  out.push_back(run("polar-space-doily", "15 points, 15 lines, GQ(2,2), self-dual",
                    check_doily));
  out.push_back(run("census-search", "15-line configuration, 1 commuting + 14 anticommuting",
                    check_census_search));
  out.push_back(run("so4-suite", "Jacobi, split into two su(2), 4 triples, Fano arrangement",
                    check_so4));
  return out;
}

bool all_passed(const std::vector<RunReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

std::string format_reports(const std::vector<RunReport>& reports, bool with_timing) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.expected;
    if (!r.actual.empty() && r.actual != "as expected") os << " -> " << r.actual;
    if (with_timing) {
      os.precision(1);
      os << std::fixed << " (" << r.elapsed_ms << " ms)";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace spingeo::verify
