// Python bindings. Octonion/quaternion coefficients cross the boundary as
// fractions.Fraction (or int), everything else as labels and plain containers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spingeo/emit.hpp"
#include "spingeo/geometry.hpp"
#include "spingeo/hypercomplex.hpp"
#include "spingeo/liealg.hpp"
#include "spingeo/pauli.hpp"
#include "spingeo/subalgebra.hpp"
#include "spingeo/verify.hpp"

namespace py = pybind11;
using namespace spingeo;
namespace hc = spingeo::hypercomplex;
namespace sa = spingeo::subalgebra;

namespace {

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return Rational(h.attr("numerator").cast<long long>(),
                    h.attr("denominator").cast<long long>());
  throw py::type_error("expected int or Fraction coefficients");
}

py::object to_fraction(const Rational& r) {
  static py::object Fraction =
      py::module_::import("fractions").attr("Fraction");
  return Fraction(r.num(), r.den());
}

template <std::size_t N, typename T>
T from_seq(const py::sequence& s) {
  if (py::len(s) != N)
    throw py::value_error("expected a sequence of " + std::to_string(N) +
                          " coefficients");
  T out;
  for (std::size_t i = 0; i < N; ++i) out.c[i] = to_rational(s[i]);
  return out;
}

template <typename T>
py::list to_list(const T& v) {
  py::list out;
  for (const auto& c : v.c) out.append(to_fraction(c));
  return out;
}

py::dict report_dict(const sa::SubalgebraReport& r) {
  py::dict d;
  py::list members, center;
  for (const auto& m : r.members.members) members.append(m.label());
  for (const auto& c : r.center) center.append(c.label());
  d["members"] = members;
  d["center"] = center;
  d["label"] = sa::to_string(r.label);
  d["closed_under_commutation"] = r.closed_under_commutation;
  d["closed_under_product"] = r.closed_under_product;
  d["commuting_lines"] = r.commuting_lines;
  d["anticommuting_lines"] = r.anticommuting_lines;
  return d;
}

}  // namespace

PYBIND11_MODULE(_spingeo, m) {
  m.doc() = "exact spin-operator algebra, hypercomplex numbers, and finite geometries";

  m.def("oct_table", [] {
    py::list rows;
    for (const auto& row : hc::oct_table()) {
      py::list r;
      for (const auto& e : row) r.append(py::make_tuple(e.sign, e.index));
      rows.append(r);
    }
    return rows;
  }, "7x7 unit product table as (sign, index) pairs, index 0 = real unit");

  m.def("oct_mul", [](const py::sequence& a, const py::sequence& b) {
    return to_list(hc::oct_mul(from_seq<8, hc::Octonion>(a),
                               from_seq<8, hc::Octonion>(b)));
  }, py::arg("a"), py::arg("b"),
     "exact product of two octonions given as 8 coefficients (1, e1..e7)");

  m.def("quat_mul", [](const py::sequence& a, const py::sequence& b) {
    return to_list(hc::quat_mul(from_seq<4, hc::Quaternion>(a),
                                from_seq<4, hc::Quaternion>(b)));
  }, py::arg("a"), py::arg("b"),
     "exact product of two quaternions given as 4 coefficients (1, i, j, k)");

  m.def("associator", [](const py::sequence& x, const py::sequence& y,
                         const py::sequence& z) {
    return to_list(hc::associator(from_seq<8, hc::Octonion>(x),
                                  from_seq<8, hc::Octonion>(y),
                                  from_seq<8, hc::Octonion>(z)));
  }, py::arg("x"), py::arg("y"), py::arg("z"), "(xy)z - x(yz)");

  m.def("oct_verify", [] {
    return hc::verify_sign_balance() && hc::verify_index_rules();
  }, "sign balance and index shift/doubling rules of the stored table");

  m.def("fano_triads", [] {
    py::list out;
    for (const auto& t : hc::fano_triads())
      out.append(py::make_tuple(t.i, t.j, t.k, t.sign));
    return out;
  }, "the 7 oriented triads e_i e_j = +e_k");

  m.def("fano_json", [] { return emit::incidence_json(hc::fano_from_table()); },
        "the Fano plane of the table as incidence JSON");

  m.def("pauli_mul", [](const std::string& a, const std::string& b, int n) {
    return pauli::multiply(pauli::parse_pauli(a, n), pauli::parse_pauli(b, n))
        .label();
  }, py::arg("a"), py::arg("b"), py::arg("n") = 2,
     "phased label of the product of two Pauli labels");

  m.def("pauli_commutes", [](const std::string& a, const std::string& b, int n) {
    return pauli::commutes(pauli::parse_pauli(a, n).string,
                           pauli::parse_pauli(b, n).string);
  }, py::arg("a"), py::arg("b"), py::arg("n") = 2);

  m.def("all_points", [](int n) {
    std::vector<std::string> out;
    for (const auto& p : pauli::all_points(n)) out.push_back(p.label());
    return out;
  }, py::arg("n"), "labels of the 4^n - 1 non-identity strings, canonical order");

  m.def("degree", &pauli::degree, py::arg("n"),
        "commutation-graph degree 4^n - 2 - 2^(2n-1)");

  m.def("centralizer", [](const std::string& label, int n) {
    std::vector<std::string> out;
    for (const auto& p :
         pauli::centralizer(pauli::parse_pauli(label, n).string))
      out.push_back(p.label());
    return out;
  }, py::arg("label"), py::arg("n") = 2);

  m.def("operator_lines_json", [](int n) {
    return emit::incidence_json(geometry::operator_lines(pauli::all_points(n)));
  }, py::arg("n") = 2, "all 3-element operator lines as incidence JSON");

  m.def("doily_json", [] {
    return emit::incidence_json(geometry::symplectic_polar_space(2));
  }, "the generalized quadrangle GQ(2,2) as incidence JSON");

  m.def("polar_space_json", [](int n) {
    return emit::incidence_json(geometry::symplectic_polar_space(n));
  }, py::arg("n"), "the rank-n symplectic polar space as incidence JSON");

  m.def("heptads", [] {
    py::list out;
    for (const auto& r : sa::heptads()) out.append(report_dict(r));
    return out;
  }, "the 15 su(2) x su(2) x u(1) heptads");

  m.def("pentads", [] {
    py::list out;
    for (const auto& p : sa::pentads()) {
      py::list labels;
      for (const auto& q : p.members) labels.append(q.label());
      out.append(labels);
    }
    return out;
  }, "the maximal 5-element mutually anticommuting sets");

  m.def("decad_from_pentad", [](const std::vector<std::string>& labels, int n) {
    return report_dict(
        sa::decad_from_pentad(sa::OperatorSet::from_labels(labels, n)));
  }, py::arg("labels"), py::arg("n") = 2, "the so(5) decad of a pentad");

  m.def("classify", [](const std::vector<std::string>& labels, int n) {
    return report_dict(sa::classify(sa::OperatorSet::from_labels(labels, n)));
  }, py::arg("labels"), py::arg("n") = 2);

  m.def("lie_closure", [](const std::vector<std::string>& labels, int n) {
    std::vector<std::string> out;
    for (const auto& p :
         sa::lie_closure(sa::OperatorSet::from_labels(labels, n)).members)
      out.push_back(p.label());
    return out;
  }, py::arg("labels"), py::arg("n") = 2);

  m.def("verify_all", [](std::uint64_t seed) {
    py::list out;
    for (const auto& r : verify::verify_all(seed))
      out.append(py::make_tuple(r.name, r.pass));
    return out;
  }, py::arg("seed") = 0x5eed, "(name, passed) for every claim check");

  m.def("verify_report", [](std::uint64_t seed, bool with_timing) {
    return verify::format_reports(verify::verify_all(seed), with_timing);
  }, py::arg("seed") = 0x5eed, py::arg("with_timing") = false);
}
