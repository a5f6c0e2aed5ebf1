#include "spingeo/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace spingeo::geometry {

using pauli::PauliString;
using pauli::PhasedPauli;

std::string to_string(LineKind k) {
  return k == LineKind::Commuting ? "commuting" : "anticommuting";
}

std::vector<int> IncidenceStructure::point_degrees() const {
  std::vector<int> deg(points.size(), 0);
  for (const Line& l : lines)
    for (int p : l.points) deg[static_cast<std::size_t>(p)]++;
  return deg;
}

IncidenceStructure operator_lines(const std::vector<PauliString>& points) {
  IncidenceStructure out;
  std::map<PauliString, int> index;
  for (const PauliString& p : points) {
    if (p.is_identity())
      throw std::invalid_argument("operator_lines: identity is not a point");
    if (!index.emplace(p, static_cast<int>(out.points.size())).second)
      throw std::invalid_argument("operator_lines: duplicate point " + p.label());
    out.points.push_back(p.label());
  }
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      PhasedPauli prod = pauli::multiply(PhasedPauli{points[i], 0}, PhasedPauli{points[j], 0});
      auto it = index.find(prod.string);
      if (it == index.end()) continue;
      int k = it->second;
      if (k == static_cast<int>(i) || k == static_cast<int>(j)) continue;  // only when prod==identity, excluded anyway
      std::vector<int> tri{static_cast<int>(i), static_cast<int>(j), k};
      std::sort(tri.begin(), tri.end());
      if (!seen.insert(tri).second) continue;
      Line line;
      line.points = tri;
      bool comm = pauli::commutes(points[i], points[j]);
      line.kind = comm ? LineKind::Commuting : LineKind::Anticommuting;
      if (!comm) {
        // a.b = +i.c fixes the arrow sense a -> b -> c
        if (prod.phase_exp == 1)
          line.orientation = {static_cast<int>(i), static_cast<int>(j), k};
        else
          line.orientation = {static_cast<int>(j), static_cast<int>(i), k};
      }
      out.lines.push_back(std::move(line));
    }
  std::sort(out.lines.begin(), out.lines.end(),
            [](const Line& a, const Line& b) { return a.points < b.points; });
  return out;
}

namespace {

// lines through each pair of points, as counts
std::map<std::pair<int, int>, int> pair_counts(const IncidenceStructure& s) {
  std::map<std::pair<int, int>, int> cnt;
  for (const Line& l : s.lines)
    for (std::size_t i = 0; i < l.points.size(); ++i)
      for (std::size_t j = i + 1; j < l.points.size(); ++j)
        cnt[{l.points[i], l.points[j]}]++;
  return cnt;
}

}  // namespace

DesignParameters design_params(const IncidenceStructure& s) {
  DesignParameters d;
  d.v = static_cast<int>(s.points.size());
  d.b = static_cast<int>(s.lines.size());
  if (d.b > 0) {
    bool const_k = true;
    int k0 = static_cast<int>(s.lines.front().points.size());
    for (const Line& l : s.lines)
      if (static_cast<int>(l.points.size()) != k0) const_k = false;
    if (const_k) d.k = k0;
  }
  if (d.v > 0 && d.b > 0) {
    auto deg = s.point_degrees();
    if (std::all_of(deg.begin(), deg.end(), [&](int x) { return x == deg[0]; }))
      d.r = deg[0];
  }
  if (d.v >= 2) {
    auto cnt = pair_counts(s);
    long long total_pairs = static_cast<long long>(d.v) * (d.v - 1) / 2;
    bool const_lambda = static_cast<long long>(cnt.size()) == total_pairs || cnt.empty();
    int l0 = cnt.empty() ? 0 : cnt.begin()->second;
    for (const auto& [pq, c] : cnt)
      if (c != l0) const_lambda = false;
    if (cnt.empty()) l0 = 0;
    if (static_cast<long long>(cnt.size()) < total_pairs && l0 != 0) const_lambda = false;
    if (const_lambda) d.lambda = l0;
    bool at_most_one = std::all_of(cnt.begin(), cnt.end(),
                                   [](const auto& e) { return e.second <= 1; });
    d.is_2_design = d.k.has_value() && d.lambda.has_value() && *d.lambda >= 1;
    d.is_configuration = d.v == d.b && d.r.has_value() && d.k.has_value() &&
                         *d.r == *d.k && at_most_one;
  }
  d.is_projective_plane = is_projective_plane(s);
  return d;
}

bool is_projective_plane(const IncidenceStructure& s) {
  int v = static_cast<int>(s.points.size());
  if (v < 4 || s.lines.empty()) return false;
  auto cnt = pair_counts(s);
  long long total_pairs = static_cast<long long>(v) * (v - 1) / 2;
  if (static_cast<long long>(cnt.size()) != total_pairs) return false;
  for (const auto& [pq, c] : cnt)
    if (c != 1) return false;
  // every two lines meet in exactly one point
  for (std::size_t i = 0; i < s.lines.size(); ++i)
    for (std::size_t j = i + 1; j < s.lines.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(s.lines[i].points.begin(), s.lines[i].points.end(),
                            s.lines[j].points.begin(), s.lines[j].points.end(),
                            std::back_inserter(inter));
      if (inter.size() != 1) return false;
    }
  // a quadrilateral: 4 points, no 3 collinear
  std::set<std::vector<int>> collinear;
  for (const Line& l : s.lines)
    for (std::size_t a = 0; a < l.points.size(); ++a)
      for (std::size_t b = a + 1; b < l.points.size(); ++b)
        for (std::size_t c = b + 1; c < l.points.size(); ++c)
          collinear.insert({l.points[a], l.points[b], l.points[c]});
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c) {
        if (collinear.count({a, b, c})) continue;
        for (int e = c + 1; e < v; ++e)
          if (!collinear.count({a, b, e}) && !collinear.count({a, c, e}) &&
              !collinear.count({b, c, e}))
            return true;
      }
  return false;
}

IncidenceStructure dual(const IncidenceStructure& s) {
  IncidenceStructure out;
  for (std::size_t i = 0; i < s.lines.size(); ++i)
    out.points.push_back("L" + std::to_string(i));
  for (std::size_t p = 0; p < s.points.size(); ++p) {
    Line nl;
    for (std::size_t i = 0; i < s.lines.size(); ++i)
      if (std::binary_search(s.lines[i].points.begin(), s.lines[i].points.end(),
                             static_cast<int>(p)))
        nl.points.push_back(static_cast<int>(i));
    out.lines.push_back(std::move(nl));
  }
  return out;
}

namespace {

struct IsoContext {
  const IncidenceStructure* a;
  const IncidenceStructure* b;
  std::vector<int> deg_a, deg_b;
  std::set<std::vector<int>> lines_b;
  std::vector<std::vector<int>> lines_of_point_a;  // line indices through each point of a
};

bool extend(IsoContext& ctx, std::vector<int>& map_ab, std::vector<bool>& used_b,
            std::size_t next) {
  if (next == map_ab.size()) return true;
  for (std::size_t cand = 0; cand < used_b.size(); ++cand) {
    if (used_b[cand] || ctx.deg_a[next] != ctx.deg_b[cand]) continue;
    map_ab[next] = static_cast<int>(cand);
    used_b[cand] = true;
    bool ok = true;
    // every line of a fully mapped so far must land on a line of b
    for (int li : ctx.lines_of_point_a[next]) {
      const Line& l = ctx.a->lines[static_cast<std::size_t>(li)];
      std::vector<int> image;
      bool complete = true;
      for (int p : l.points) {
        if (static_cast<std::size_t>(p) > next) { complete = false; break; }
        image.push_back(map_ab[static_cast<std::size_t>(p)]);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!ctx.lines_b.count(image)) { ok = false; break; }
    }
    if (ok && extend(ctx, map_ab, used_b, next + 1)) return true;
    used_b[cand] = false;
    map_ab[next] = -1;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                    int max_points) {
  if (static_cast<int>(a.points.size()) > max_points ||
      static_cast<int>(b.points.size()) > max_points)
    throw std::invalid_argument("are_isomorphic: structure exceeds point bound");
  if (a.points.size() != b.points.size() || a.lines.size() != b.lines.size())
    return false;
  IsoContext ctx;
  ctx.a = &a;
  ctx.b = &b;
  ctx.deg_a = a.point_degrees();
  ctx.deg_b = b.point_degrees();
  auto sa = ctx.deg_a, sb = ctx.deg_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::multiset<std::size_t> ka, kb;
  for (const Line& l : a.lines) ka.insert(l.points.size());
  for (const Line& l : b.lines) kb.insert(l.points.size());
  if (ka != kb) return false;
  for (const Line& l : b.lines) {
    std::vector<int> pts = l.points;
    std::sort(pts.begin(), pts.end());
    ctx.lines_b.insert(pts);
  }
  ctx.lines_of_point_a.resize(a.points.size());
  for (std::size_t i = 0; i < a.lines.size(); ++i)
    for (int p : a.lines[i].points)
      ctx.lines_of_point_a[static_cast<std::size_t>(p)].push_back(static_cast<int>(i));
  std::vector<int> map_ab(a.points.size(), -1);
  std::vector<bool> used_b(b.points.size(), false);
  return extend(ctx, map_ab, used_b, 0);
}

bool gq22_check(const IncidenceStructure& s) {
  if (s.points.empty() || s.lines.empty()) return false;
  for (const Line& l : s.lines)
    if (l.points.size() != 3) return false;
  for (int d : s.point_degrees())
    if (d != 3) return false;
  for (const auto& [pq, c] : pair_counts(s))
    if (c > 1) return false;
  // collinearity relation
  std::set<std::pair<int, int>> coll;
  for (const Line& l : s.lines)
    for (int p : l.points)
      for (int q : l.points)
        if (p != q) coll.insert({p, q});
  for (std::size_t li = 0; li < s.lines.size(); ++li) {
    const Line& l = s.lines[li];
    for (int p = 0; p < static_cast<int>(s.points.size()); ++p) {
      if (std::binary_search(l.points.begin(), l.points.end(), p)) continue;
      int hits = 0;
      for (int q : l.points)
        if (coll.count({p, q})) ++hits;
      if (hits != 1) return false;
    }
  }
  return true;
}

IncidenceStructure symplectic_polar_space(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("symplectic_polar_space: n out of range 1..4");
  IncidenceStructure all = operator_lines(pauli::all_points(n));
  IncidenceStructure out;
  out.points = all.points;
  for (Line& l : all.lines)
    if (l.kind == LineKind::Commuting) out.lines.push_back(std::move(l));
  return out;
}

namespace {

struct ConfigSearch {
  const IncidenceStructure* s;
  int b_target, r_target;
  KindCensus census;
  int max_solutions;
  std::vector<std::vector<int>> lines_of_point;
  std::vector<int> deg;
  std::vector<bool> available;
  std::vector<int> chosen;
  int n_comm = 0, n_anti = 0;
  std::vector<std::vector<int>> solutions;

  bool done() const {
    return max_solutions > 0 &&
           static_cast<int>(solutions.size()) >= max_solutions;
  }

  bool census_ok_final() const {
    if (census.commuting >= 0 && n_comm != census.commuting) return false;
    if (census.anticommuting >= 0 && n_anti != census.anticommuting) return false;
    return true;
  }

  bool feasible() const {
    for (std::size_t p = 0; p < deg.size(); ++p) {
      int need = r_target - deg[p];
      if (need <= 0) continue;
      int avail = 0;
      for (int li : lines_of_point[p]) {
        if (!available[static_cast<std::size_t>(li)]) continue;
        const Line& l = s->lines[static_cast<std::size_t>(li)];
        bool ok = true;
        for (int q : l.points)
          if (deg[static_cast<std::size_t>(q)] >= r_target) { ok = false; break; }
        if (ok) ++avail;
      }
      if (avail < need) return false;
    }
    return true;
  }

  void run() {
    if (static_cast<int>(chosen.size()) == b_target) {
      for (int d : deg)
        if (d != r_target) return;
      if (!census_ok_final()) return;
      std::vector<int> sol = chosen;
      std::sort(sol.begin(), sol.end());
      solutions.push_back(std::move(sol));
      return;
    }
    // branch on the lowest unsaturated point
    int p = -1;
    for (std::size_t q = 0; q < deg.size(); ++q)
      if (deg[q] < r_target) { p = static_cast<int>(q); break; }
    if (p < 0) return;  // all saturated but lines still owed
    if (!feasible()) return;
    std::vector<int> disabled;
    for (int li : lines_of_point[static_cast<std::size_t>(p)]) {
      if (done()) break;
      if (!available[static_cast<std::size_t>(li)]) continue;
      const Line& l = s->lines[static_cast<std::size_t>(li)];
      bool fits = true;
      for (int q : l.points)
        if (deg[static_cast<std::size_t>(q)] >= r_target) { fits = false; break; }
      if (!fits) continue;
      bool comm = l.kind == LineKind::Commuting;
      bool anti = l.kind == LineKind::Anticommuting;
      if (comm && census.commuting >= 0 && n_comm + 1 > census.commuting) continue;
      if (anti && census.anticommuting >= 0 && n_anti + 1 > census.anticommuting) continue;
      for (int q : l.points) deg[static_cast<std::size_t>(q)]++;
      n_comm += comm;
      n_anti += anti;
      chosen.push_back(li);
      available[static_cast<std::size_t>(li)] = false;
      run();
      chosen.pop_back();
      n_comm -= comm;
      n_anti -= anti;
      for (int q : l.points) deg[static_cast<std::size_t>(q)]--;
      disabled.push_back(li);  // stays off for the rest of this subtree
    }
    for (int li : disabled) available[static_cast<std::size_t>(li)] = true;
  }
};

}  // namespace

std::vector<std::vector<int>> find_configuration(const IncidenceStructure& candidates,
                                                 int b_target, int r_target,
                                                 const KindCensus& census,
                                                 const ConfigSearchOptions& opts) {
  if (b_target < 0 || r_target < 0) return {};
  if (census.commuting >= 0 && census.anticommuting >= 0 &&
      census.commuting + census.anticommuting != b_target)
    return {};
  ConfigSearch search;
  search.s = &candidates;
  search.b_target = b_target;
  search.r_target = r_target;
  search.census = census;
  search.max_solutions = opts.max_solutions;
  search.lines_of_point.resize(candidates.points.size());
  for (std::size_t i = 0; i < candidates.lines.size(); ++i)
    for (int p : candidates.lines[i].points)
      search.lines_of_point[static_cast<std::size_t>(p)].push_back(static_cast<int>(i));
  search.deg.assign(candidates.points.size(), 0);
  search.available.assign(candidates.lines.size(), true);
  search.run();
  std::sort(search.solutions.begin(), search.solutions.end());
  return search.solutions;
}

}  // namespace spingeo::geometry
