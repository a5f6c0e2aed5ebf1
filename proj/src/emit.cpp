#include "spingeo/emit.hpp"

#include <sstream>

#include <json.hpp>

namespace spingeo::emit {

using nlohmann::json;

namespace {

json line_to_json(const geometry::IncidenceStructure& s, const geometry::Line& l) {
  json out;
  out["points"] = json::array();
  for (int p : l.points) out["points"].push_back(s.points[static_cast<std::size_t>(p)]);
  if (l.kind)
    out["kind"] = geometry::to_string(*l.kind);
  else
    out["kind"] = nullptr;
  if (l.orientation) {
    json o = json::array();
    for (int p : *l.orientation) o.push_back(s.points[static_cast<std::size_t>(p)]);
    out["orientation"] = o;
  } else {
    out["orientation"] = nullptr;
  }
  return out;
}

}  // namespace

std::string incidence_json(const geometry::IncidenceStructure& s) {
  json out;
  out["points"] = s.points;
  out["lines"] = json::array();
  for (const geometry::Line& l : s.lines) out["lines"].push_back(line_to_json(s, l));
  return out.dump(2);
}

std::string incidence_dot(const geometry::IncidenceStructure& s,
                          const std::string& graph_name) {
  std::ostringstream os;
  os << "graph " << graph_name << " {\n";
  os << "  node [fontsize=10];\n";
  for (std::size_t p = 0; p < s.points.size(); ++p)
    os << "  \"p_" << s.points[p] << "\" [label=\"" << s.points[p]
       << "\", shape=ellipse];\n";
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    const geometry::Line& l = s.lines[i];
    std::string label = "L" + std::to_string(i);
    if (l.orientation) {
      label += "\\n";
      const auto& o = *l.orientation;
      label += s.points[static_cast<std::size_t>(o[0])] + ">" +
               s.points[static_cast<std::size_t>(o[1])] + ">" +
               s.points[static_cast<std::size_t>(o[2])];
    }
    os << "  \"l_" << i << "\" [label=\"" << label
       << "\", shape=square, width=0.15, height=0.15];\n";
    const char* style =
        (l.kind && *l.kind == geometry::LineKind::Commuting) ? "dashed" : "solid";
    for (int p : l.points)
      os << "  \"p_" << s.points[static_cast<std::size_t>(p)] << "\" -- \"l_" << i
         << "\" [style=" << style << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string incidence_text(const geometry::IncidenceStructure& s) {
  std::ostringstream os;
  os << s.points.size() << " points, " << s.lines.size() << " lines\n";
  for (const geometry::Line& l : s.lines) {
    os << "  {";
    for (std::size_t i = 0; i < l.points.size(); ++i)
      os << (i ? ", " : "") << s.points[static_cast<std::size_t>(l.points[i])];
    os << "}";
    if (l.kind) os << "  " << geometry::to_string(*l.kind);
    if (l.orientation) {
      const auto& o = *l.orientation;
      os << "  [" << s.points[static_cast<std::size_t>(o[0])] << " > "
         << s.points[static_cast<std::size_t>(o[1])] << " > "
         << s.points[static_cast<std::size_t>(o[2])] << "]";
    }
    os << "\n";
  }
  return os.str();
}

std::string report_json(const subalgebra::SubalgebraReport& r) {
  json out;
  out["members"] = json::array();
  for (const auto& m : r.members.members) out["members"].push_back(m.label());
  out["closed_under_commutation"] = r.closed_under_commutation;
  out["closed_under_product"] = r.closed_under_product;
  out["line_census"] = {{"commuting", r.commuting_lines},
                        {"anticommuting", r.anticommuting_lines}};
  out["center"] = json::array();
  for (const auto& c : r.center) out["center"].push_back(c.label());
  out["label"] = subalgebra::to_string(r.label);
  return out.dump(2);
}

std::string algebra_json(const liealg::StructureConstantAlgebra& a) {
  json out;
  out["basis"] = a.labels();
  json consts = json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) {
        const GaussianRational& f = a.f(i, j, k);
        if (f.is_zero()) continue;
        consts.push_back({{"i", a.labels()[static_cast<std::size_t>(i)]},
                          {"j", a.labels()[static_cast<std::size_t>(j)]},
                          {"k", a.labels()[static_cast<std::size_t>(k)]},
                          {"f", f.str()}});
      }
  out["constants"] = consts;
  return out.dump(2);
}

std::string algebra_text(const liealg::StructureConstantAlgebra& a) {
  std::ostringstream os;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      bool any = false;
      for (int k = 0; k < a.dim(); ++k)
        if (!a.f(i, j, k).is_zero()) any = true;
      if (!any) continue;
      os << "[" << a.labels()[static_cast<std::size_t>(i)] << ", "
         << a.labels()[static_cast<std::size_t>(j)] << "] =";
      for (int k = 0; k < a.dim(); ++k) {
        const GaussianRational& f = a.f(i, j, k);
        if (f.is_zero()) continue;
        os << " (" << f.str() << ")*" << a.labels()[static_cast<std::size_t>(k)];
      }
      os << "\n";
    }
  return os.str();
}

std::string graph_json(const pauli::CommutationGraph& g) {
  json out = json::object();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    json nbrs = json::array();
    for (int j : g.adjacency[i]) nbrs.push_back(g.vertices[static_cast<std::size_t>(j)].label());
    out[g.vertices[i].label()] = nbrs;
  }
  return out.dump(2);
}

std::string graph_dot(const pauli::CommutationGraph& g) {
  std::ostringstream os;
  os << "graph commutation {\n";
  for (const auto& v : g.vertices) os << "  \"" << v.label() << "\";\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (int j : g.adjacency[i])
      if (static_cast<std::size_t>(j) > i)
        os << "  \"" << g.vertices[i].label() << "\" -- \""
           << g.vertices[static_cast<std::size_t>(j)].label() << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace spingeo::emit
