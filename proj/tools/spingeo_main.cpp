// Command-line front end: oct / pauli / geom / sub / lie / verify-all.
// All data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 check failure, 2 usage error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spingeo/emit.hpp"
#include "spingeo/geometry.hpp"
#include "spingeo/hypercomplex.hpp"
#include "spingeo/liealg.hpp"
#include "spingeo/pauli.hpp"
#include "spingeo/subalgebra.hpp"
#include "spingeo/verify.hpp"

namespace hc = spingeo::hypercomplex;
namespace ge = spingeo::geometry;
namespace pa = spingeo::pauli;
namespace sa = spingeo::subalgebra;
namespace la = spingeo::liealg;
namespace em = spingeo::emit;

namespace {

int emit_incidence(const ge::IncidenceStructure& s, const std::string& format,
                   const std::string& name) {
  if (format == "json")
    std::cout << em::incidence_json(s) << "\n";
  else if (format == "dot")
    std::cout << em::incidence_dot(s, name);
  else if (format == "text")
    std::cout << em::incidence_text(s);
  else {
    std::cerr << "error: format '" << format << "' not valid for incidence output\n";
    return 2;
  }
  return 0;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void print_oct_table() {
  std::cout << "    ";
  for (int j = 1; j <= 7; ++j) std::cout << "  e" << j << " ";
  std::cout << "\n";
  for (int i = 1; i <= 7; ++i) {
    std::cout << "e" << i << " |";
    for (int j = 1; j <= 7; ++j) {
      const hc::TableEntry& e =
          hc::oct_table()[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      std::string cell = (e.sign < 0 ? "-" : " ");
      cell += e.index == 0 ? "1 " : "e" + std::to_string(e.index);
      std::cout << "  " << cell;
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra of spin operators, hypercomplex numbers, and finite geometries"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text";
  int n_qubits = 2;
  std::uint64_t seed = 0x5eed;
  bool quiet = false;
  app.add_option("--seed", seed, "seed for the randomized identity checks");
  app.add_flag("--quiet", quiet, "suppress timing in reports");

  // ---- oct ----
  auto* oct = app.add_subcommand("oct", "octonion and quaternion checks");
  oct->require_subcommand(1);
  oct->add_subcommand("table", "print the unit multiplication table");
  auto* oct_verify = oct->add_subcommand("verify", "sign balance, index rules, alternativity, norm composition");
  (void)oct_verify;
  auto* oct_fano = oct->add_subcommand("fano", "the Fano plane read off the table");
  oct_fano->add_option("--emit", format, "text|json|dot")->capture_default_str();

  // ---- pauli ----
  auto* pauli_cmd = app.add_subcommand("pauli", "Pauli string operations");
  pauli_cmd->require_subcommand(1);
  std::string label_a, label_b;
  auto* p_mul = pauli_cmd->add_subcommand("mul", "product of two labels");
  p_mul->add_option("a", label_a)->required();
  p_mul->add_option("b", label_b)->required();
  p_mul->add_option("-n,--qubits", n_qubits)->capture_default_str();
  auto* p_comm = pauli_cmd->add_subcommand("commutes", "commutation of two labels");
  p_comm->add_option("a", label_a)->required();
  p_comm->add_option("b", label_b)->required();
  p_comm->add_option("-n,--qubits", n_qubits)->capture_default_str();
  auto* p_deg = pauli_cmd->add_subcommand("degree", "commutation-graph degree");
  p_deg->add_option("-n,--qubits", n_qubits)->capture_default_str();
  auto* p_graph = pauli_cmd->add_subcommand("graph", "commutation graph");
  p_graph->add_option("-n,--qubits", n_qubits)->capture_default_str();
  p_graph->add_option("--emit", format, "json|dot")->capture_default_str();

  // ---- geom ----
  auto* geom = app.add_subcommand("geom", "incidence structures over operator points");
  geom->require_subcommand(1);
  auto* g_lines = geom->add_subcommand("lines", "all operator lines");
  g_lines->add_option("-n,--qubits", n_qubits)->capture_default_str();
  g_lines->add_option("--emit", format, "text|json|dot")->capture_default_str();
  auto* g_doily = geom->add_subcommand("doily", "the symplectic polar space of rank 2");
  g_doily->add_option("--emit", format, "text|json|dot")->capture_default_str();
  auto* g_find = geom->add_subcommand("find", "search line sub-collections by census");
  int b_target = 15, r_target = 3, want_comm = -1, want_anti = -1, max_solutions = 0;
  g_find->add_option("--b", b_target, "number of lines")->capture_default_str();
  g_find->add_option("--r", r_target, "lines per point")->capture_default_str();
  g_find->add_option("--commuting", want_comm, "required commuting-line count");
  g_find->add_option("--anticommuting", want_anti, "required anticommuting-line count");
  g_find->add_option("--max", max_solutions, "stop after this many solutions (0 = all)");
  g_find->add_option("-n,--qubits", n_qubits)->capture_default_str();

  // ---- sub ----
  auto* sub = app.add_subcommand("sub", "subalgebra enumeration");
  sub->require_subcommand(1);
  sub->add_subcommand("heptads", "the 15 seven-element subalgebras");
  auto* s_heptad = sub->add_subcommand("heptad", "one heptad by its central element");
  std::string center_label = "YY", pentad_csv, set_csv;
  s_heptad->add_option("--center", center_label)->capture_default_str();
  s_heptad->add_option("--emit", format, "text|json|dot")->capture_default_str();
  sub->add_subcommand("pentads", "all maximal anticommuting 5-sets");
  auto* s_decad = sub->add_subcommand("decad", "the so(5) decad of a pentad");
  s_decad->add_option("--pentad", pentad_csv, "comma-separated labels")->required();
  s_decad->add_option("--emit", format, "text|json|dot")->capture_default_str();
  auto* s_classify = sub->add_subcommand("classify", "closure flags, census, and label");
  s_classify->add_option("--set", set_csv, "comma-separated labels")->required();
  s_classify->add_option("-n,--qubits", n_qubits)->capture_default_str();

  // ---- lie ----
  auto* lie = app.add_subcommand("lie", "structure-constant algebras");
  lie->require_subcommand(1);
  auto* l_so4 = lie->add_subcommand("so4", "the L/A algebra");
  bool so4_check = false, so4_split = false, so4_fano = false;
  l_so4->add_flag("--check", so4_check, "run the Jacobi and split checks");
  l_so4->add_flag("--split", so4_split, "print the (L+-A)/2 constants and blocks");
  l_so4->add_flag("--fano", so4_fano, "emit the seven-point arrangement");
  l_so4->add_option("--emit", format, "text|json|dot")->capture_default_str();

  app.add_subcommand("verify-all", "run the full claims suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (oct->parsed()) {
      if (oct->got_subcommand("table")) {
        print_oct_table();
        return 0;
      }
      if (oct->got_subcommand("verify")) {
        auto reports = spingeo::verify::verify_all(seed);
        std::vector<spingeo::verify::RunReport> wanted;
        for (auto& r : reports)
          if (r.name == "octonion-table" || r.name == "hypercomplex-identities")
            wanted.push_back(r);
        std::cout << spingeo::verify::format_reports(wanted, !quiet);
        return spingeo::verify::all_passed(wanted) ? 0 : 1;
      }
      return emit_incidence(hc::fano_from_table(), format, "fano");
    }

    if (pauli_cmd->parsed()) {
      if (p_mul->parsed()) {
        auto prod = pa::multiply(pa::parse_pauli(label_a, n_qubits),
                                 pa::parse_pauli(label_b, n_qubits));
        std::cout << prod.label() << "\n";
        return 0;
      }
      if (p_comm->parsed()) {
        bool c = pa::commutes(pa::parse_pauli(label_a, n_qubits).string,
                              pa::parse_pauli(label_b, n_qubits).string);
        std::cout << (c ? "commute" : "anticommute") << "\n";
        return 0;
      }
      if (p_deg->parsed()) {
        std::cout << "N=" << n_qubits << ": D=" << pa::degree(n_qubits) << "\n";
        return 0;
      }
      pa::CommutationGraph g = pa::commutation_graph(n_qubits);
      if (format == "json")
        std::cout << em::graph_json(g) << "\n";
      else if (format == "dot")
        std::cout << em::graph_dot(g);
      else {
        std::cerr << "error: format '" << format << "' not valid for graphs\n";
        return 2;
      }
      return 0;
    }

    if (geom->parsed()) {
      if (g_lines->parsed())
        return emit_incidence(ge::operator_lines(pa::all_points(n_qubits)), format,
                              "operator_lines");
      if (g_doily->parsed())
        return emit_incidence(ge::symplectic_polar_space(2), format, "doily");
      // find
      ge::IncidenceStructure all = ge::operator_lines(pa::all_points(n_qubits));
      ge::KindCensus census;
      census.commuting = want_comm;
      census.anticommuting = want_anti;
      ge::ConfigSearchOptions opts;
      opts.max_solutions = max_solutions;
      auto sols = ge::find_configuration(all, b_target, r_target, census, opts);
      std::cout << sols.size() << " solutions\n";
      for (const auto& sol : sols) {
        for (std::size_t i = 0; i < sol.size(); ++i) {
          const ge::Line& l = all.lines[static_cast<std::size_t>(sol[i])];
          std::cout << (i ? " " : "") << all.points[static_cast<std::size_t>(l.points[0])]
                    << "," << all.points[static_cast<std::size_t>(l.points[1])] << ","
                    << all.points[static_cast<std::size_t>(l.points[2])];
        }
        std::cout << "\n";
      }
      return sols.empty() ? 1 : 0;
    }

    if (sub->parsed()) {
      if (sub->got_subcommand("heptads")) {
        for (const auto& r : sa::heptads()) {
          std::cout << r.center.front().label() << ":";
          for (const auto& m : r.members.members) std::cout << " " << m.label();
          std::cout << "\n";
        }
        return 0;
      }
      if (s_heptad->parsed()) {
        auto center = pa::parse_pauli(center_label, 2).string;
        for (const auto& r : sa::heptads())
          if (r.center.size() == 1 && r.center.front() == center) {
            if (format == "json") {
              std::cout << em::report_json(r) << "\n";
              return 0;
            }
            return emit_incidence(sa::heptad_geometry(r), format, "heptad");
          }
        std::cerr << "error: no heptad with center " << center_label << "\n";
        return 1;
      }
      if (sub->got_subcommand("pentads")) {
        for (const auto& p : sa::pentads()) {
          for (std::size_t i = 0; i < p.members.size(); ++i)
            std::cout << (i ? " " : "") << p.members[i].label();
          std::cout << "\n";
        }
        return 0;
      }
      if (s_decad->parsed()) {
        auto pentad = sa::OperatorSet::from_labels(split_commas(pentad_csv), 2);
        sa::SubalgebraReport r = sa::decad_from_pentad(pentad);
        if (format == "json") {
          std::cout << em::report_json(r) << "\n";
          return 0;
        }
        return emit_incidence(sa::decad_geometry(r), format, "decad");
      }
      // classify
      auto s = sa::OperatorSet::from_labels(split_commas(set_csv), n_qubits);
      std::cout << em::report_json(sa::classify(s)) << "\n";
      return 0;
    }

    if (lie->parsed()) {
      la::StructureConstantAlgebra so4 = la::make_so4();
      if (so4_check) {
        auto reports = spingeo::verify::verify_all(seed);
        for (const auto& r : reports)
          if (r.name == "so4-suite") {
            std::cout << spingeo::verify::format_reports({r}, !quiet);
            return r.pass ? 0 : 1;
          }
        return 1;
      }
      if (so4_split) {
        la::StructureConstantAlgebra split = la::change_basis(
            so4, la::so4_split_basis(), {"J+x", "J+y", "J+z", "J-x", "J-y", "J-z"});
        if (format == "json") {
          std::cout << em::algebra_json(split) << "\n";
        } else {
          std::cout << em::algebra_text(split);
          std::cout << "blocks:";
          for (const auto& block : la::commuting_block_decomposition(split)) {
            std::cout << " {";
            for (std::size_t i = 0; i < block.size(); ++i)
              std::cout << (i ? "," : "")
                        << split.labels()[static_cast<std::size_t>(block[i])];
            std::cout << "}";
          }
          std::cout << "\n";
        }
        return 0;
      }
      if (so4_fano)
        return emit_incidence(la::fano_arrangement_so4(), format, "so4_fano");
      if (format == "json")
        std::cout << em::algebra_json(so4) << "\n";
      else
        std::cout << em::algebra_text(so4);
      return 0;
    }

    // verify-all
    auto reports = spingeo::verify::verify_all(seed);
    std::cout << spingeo::verify::format_reports(reports, !quiet);
    return spingeo::verify::all_passed(reports) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
