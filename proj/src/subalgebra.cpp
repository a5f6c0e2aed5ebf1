#include "spingeo/subalgebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spingeo::subalgebra {

using pauli::PauliString;
using pauli::PhasedPauli;

namespace {

PauliString projective_product(const PauliString& a, const PauliString& b) {
  return pauli::multiply(PhasedPauli{a, 0}, PhasedPauli{b, 0}).string;
}

}  // namespace

OperatorSet OperatorSet::from_strings(std::vector<PauliString> strings) {
  if (strings.empty()) throw std::invalid_argument("OperatorSet: empty set");
  OperatorSet s;
  s.n_qubits = strings.front().n_qubits;
  for (const PauliString& p : strings) {
    if (p.n_qubits != s.n_qubits)
      throw std::invalid_argument("OperatorSet: mixed qubit counts");
    if (p.is_identity())
      throw std::invalid_argument("OperatorSet: identity is not a member");
  }
  std::sort(strings.begin(), strings.end());
  strings.erase(std::unique(strings.begin(), strings.end()), strings.end());
  s.members = std::move(strings);
  return s;
}

OperatorSet OperatorSet::from_labels(const std::vector<std::string>& labels, int n) {
  std::vector<PauliString> strings;
  for (const std::string& l : labels) strings.push_back(pauli::parse_pauli(l, n).string);
  return from_strings(std::move(strings));
}

bool OperatorSet::contains(const PauliString& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

std::string to_string(SubalgebraLabel l) {
  switch (l) {
    case SubalgebraLabel::Su2Su2U1Heptad: return "su2su2u1-heptad";
    case SubalgebraLabel::So5Decad: return "so5-decad";
    case SubalgebraLabel::FullSu4: return "full-su4";
    default: return "other";
  }
}

OperatorSet lie_closure(const OperatorSet& seed) {
  std::set<PauliString> pool(seed.members.begin(), seed.members.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PauliString> current(pool.begin(), pool.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (pauli::commutes(current[i], current[j])) continue;
        PauliString prod = projective_product(current[i], current[j]);
        if (pool.insert(prod).second) grew = true;
      }
  }
  return OperatorSet::from_strings({pool.begin(), pool.end()});
}

bool product_closure_check(const OperatorSet& s) {
  for (std::size_t i = 0; i < s.members.size(); ++i)
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      PauliString prod = projective_product(s.members[i], s.members[j]);
      if (!prod.is_identity() && !s.contains(prod)) return false;
    }
  return true;
}

SubalgebraReport classify(const OperatorSet& s) {
  SubalgebraReport r;
  r.members = s;
  r.closed_under_product = product_closure_check(s);
  r.closed_under_commutation = lie_closure(s) == s;
  geometry::IncidenceStructure geo = geometry::operator_lines(s.members);
  std::vector<int> deg = geo.point_degrees();
  for (const geometry::Line& l : geo.lines) {
    if (l.kind == geometry::LineKind::Commuting) r.commuting_lines++;
    else r.anticommuting_lines++;
  }
  for (const PauliString& p : s.members) {
    bool central = true;
    for (const PauliString& q : s.members)
      if (q != p && !pauli::commutes(p, q)) { central = false; break; }
    if (central) r.center.push_back(p);
  }
  const std::size_t size = s.members.size();
  bool deg3 = !deg.empty() &&
              std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
  if (size == 7 && r.center.size() == 1 && r.closed_under_product &&
      r.anticommuting_lines == 4 && r.commuting_lines == 3)
    r.label = SubalgebraLabel::Su2Su2U1Heptad;
  else if (size == 10 && r.center.empty() && r.anticommuting_lines == 10 &&
           r.commuting_lines == 0 && deg3)
    r.label = SubalgebraLabel::So5Decad;
  else if (size == static_cast<std::size_t>(pauli::num_points(s.n_qubits)))
    r.label = SubalgebraLabel::FullSu4;
  return r;
}

std::vector<SubalgebraReport> heptads() {
  std::vector<SubalgebraReport> out;
  for (const PauliString& c : pauli::all_points(2)) {
    std::vector<PauliString> members = pauli::centralizer(c);
    members.push_back(c);
    out.push_back(classify(OperatorSet::from_strings(std::move(members))));
  }
  return out;
}

geometry::IncidenceStructure heptad_geometry(const SubalgebraReport& r) {
  if (r.label != SubalgebraLabel::Su2Su2U1Heptad)
    throw std::invalid_argument("heptad_geometry: report is not a heptad");
  return geometry::operator_lines(r.members.members);
}

bool is_pentad(const OperatorSet& s) {
  if (s.n_qubits != 2 || s.members.size() != 5) return false;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (pauli::commutes(s.members[i], s.members[j])) return false;
  return true;
}

std::vector<OperatorSet> pentads() {
  std::vector<PauliString> pts = pauli::all_points(2);
  std::vector<OperatorSet> out;
  std::vector<int> stack;
  // depth-first over increasing indices; anticommutation checked on entry
  auto extendable = [&](int cand) {
    for (int idx : stack)
      if (pauli::commutes(pts[static_cast<std::size_t>(idx)],
                          pts[static_cast<std::size_t>(cand)]))
        return false;
    return true;
  };
  std::function<void(int)> rec = [&](int start) {
    if (stack.size() == 5) {
      std::vector<PauliString> members;
      for (int idx : stack) members.push_back(pts[static_cast<std::size_t>(idx)]);
      out.push_back(OperatorSet::from_strings(std::move(members)));
      return;
    }
    for (int c = start; c < static_cast<int>(pts.size()); ++c) {
      if (!extendable(c)) continue;
      stack.push_back(c);
      rec(c + 1);
      stack.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const OperatorSet& a, const OperatorSet& b) { return a.members < b.members; });
  return out;
}

SubalgebraReport decad_from_pentad(const OperatorSet& p) {
  if (!is_pentad(p)) throw std::invalid_argument("decad_from_pentad: input is not a pentad");
  std::set<PauliString> prods;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      prods.insert(projective_product(p.members[i], p.members[j]));
  if (prods.size() != 10)
    throw std::logic_error("decad_from_pentad: pairwise products not distinct");
  for (const PauliString& m : p.members)
    if (prods.count(m))
      throw std::logic_error("decad_from_pentad: products meet the pentad");
  return classify(OperatorSet::from_strings({prods.begin(), prods.end()}));
}

geometry::IncidenceStructure decad_geometry(const SubalgebraReport& r) {
  if (r.label != SubalgebraLabel::So5Decad)
    throw std::invalid_argument("decad_geometry: report is not a decad");
  return geometry::operator_lines(r.members.members);
}

}  // namespace spingeo::subalgebra
