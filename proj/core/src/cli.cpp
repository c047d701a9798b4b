#include "lieorbit/cli.hpp"

#include <CLI11.hpp>

#include "lieorbit/report.hpp"
#include "lieorbit/selfcheck.hpp"

namespace lieorbit::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

long long parse_ll(const std::string& tok) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw usage_error("expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw usage_error("expected an integer, got '" + tok + "'");
  return v;
}

Rational parse_rational(const std::string& tok) {
  const std::size_t slash = tok.find('/');
  if (slash == std::string::npos) return Rational(parse_ll(tok));
  const long long num = parse_ll(tok.substr(0, slash));
  const long long den = parse_ll(tok.substr(slash + 1));
  if (den <= 0) throw usage_error("denominator must be positive in '" + tok + "'");
  return Rational(num, den);
}

std::set<int> parse_node_set(const std::string& text) {
  std::set<int> out;
  for (const std::string& tok : split(text, ','))
    out.insert(static_cast<int>(parse_ll(tok)));
  return out;
}

WeightVec parse_coords(const std::string& text) {
  WeightVec out;
  for (const std::string& tok : split(text, ',')) out.push_back(parse_rational(tok));
  return out;
}

void do_roots(std::ostream& out, const std::string& type_text) {
  const DynkinType t = parse_type(type_text);
  RootSystem rs(t);
  out << "type: " << t.str() << "\n";
  out << "rank: " << rs.rank() << "\n";
  out << "positive roots: " << rs.positive_count() << "\n";
  out << "dimension: " << rs.dim_g() << "\n";
  out << "simple root lengths^2:";
  for (const Rational& l : rs.lengths_sq()) out << " " << l;
  out << "\n";
  out << "cartan matrix:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = 0; j < rs.rank(); ++j) out << (j ? " " : "  ") << rs.cartan()[i][j];
    out << "\n";
  }
  out << "fundamental weights (root basis):\n";
  for (int j = 0; j < rs.rank(); ++j) {
    out << "  w_" << (j + 1) << ":";
    for (int i = 0; i < rs.rank(); ++i) out << " " << rs.cartan_inverse()[i][j];
    out << "\n";
  }
  out << "positive roots (root basis / height / length^2):\n";
  for (int k = 0; k < rs.positive_count(); ++k) {
    out << " ";
    for (int c : rs.positive_roots()[k]) out << " " << c;
    out << "  h=" << rs.height(k) << "  len2=" << rs.root_length_sq(k) << "\n";
  }
}

void print_report_text(std::ostream& out, const VoganDiagram& vd, const OrbitReport& rep) {
  out << "phi: " << rep.phi_str() << "\n";
  out << "support:";
  for (int node : rep.support) out << " " << node;
  out << "\n";
  if (rep.lambda)
    out << "special: yes, lambda = " << rep.lambda->str() << "\n";
  else
    out << "special: no\n";
  out << "label: " << rep.type_label.value_or("-") << "\n";
  out << "s: " << rep.s << "\n";
  out << "dim V: " << rep.dims.dim_v << "\n";
  out << "dim M: " << rep.dims.dim_m << "\n";
  out << "G: " << rep.real_form << "\n";
  out << "V: " << rep.stabilizer.str() << "\n";
  out << "integrable: " << (rep.integrable ? "yes" : "no") << "\n";
  out << "|N|^2: " << rep.nijenhuis_sq << "\n";
  out << "phi in roots: " << (rep.phi_is_root ? "yes" : "no") << "\n";
  (void)vd;
}

void do_analyze(std::ostream& out, const std::string& type_text,
                const std::string& painted_text, const std::string& phi_text,
                bool root_basis, const std::string& format) {
  const DynkinType t = parse_type(type_text);
  RootData rd(VoganDiagram(t, parse_node_set(painted_text)));
  WeightVec phi = parse_coords(phi_text);
  if (static_cast<int>(phi.size()) != t.rank)
    throw usage_error("expected " + std::to_string(t.rank) + " phi coordinates");
  if (root_basis) phi = rd.rs.to_weight_basis(phi);
  const OrbitReport rep = analyze_orbit(rd, phi);
  if (format == "json") {
    out << json_report(rep);
    return;
  }
  out << render_diagram_ascii(rd.vd);
  print_report_text(out, rd.vd, rep);
}

void do_solve(std::ostream& out, const std::string& type_text,
              const std::string& painted_text, const std::string& format) {
  const DynkinType t = parse_type(type_text);
  RootData rd(VoganDiagram(t, parse_node_set(painted_text)));
  DiagramResult dr{rd.vd, {}};
  for (const SpecialSolution& sol : enumerate_special(rd))
    dr.rows.push_back(classify(rd, sol));
  if (format == "text") {
    out << render_diagram_ascii(rd.vd);
    out << "solutions: " << dr.rows.size() << "\n";
    for (std::size_t i = 0; i < dr.rows.size(); ++i) {
      out << "--- solution " << (i + 1);
      if (dr.rows[i].cone) out << " (cone)";
      out << " ---\n";
      print_report_text(out, rd.vd, dr.rows[i]);
    }
    return;
  }
  TableConfig cfg;
  cfg.format = parse_table_format(format);
  out << render({dr}, cfg);
}

void do_tables(std::ostream& out, const TableConfig& cfg) {
  out << render(run_tables(cfg), cfg);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adjoint orbits of non-compact real simple Lie groups whose "
               "Chern-Ricci form is proportional to the symplectic form"};
  app.name("lieorbit");
  app.require_subcommand(1);

  auto* roots_cmd = app.add_subcommand("roots", "Print a simple root system");
  std::string roots_type;
  roots_cmd->add_option("type", roots_type, "Dynkin type, e.g. B4")->required();

  auto* an_cmd = app.add_subcommand("analyze", "Analyze one dominant functional");
  std::string an_type, an_painted, an_phi, an_format = "text";
  bool an_root_basis = false;
  an_cmd->add_option("type", an_type, "Dynkin type, e.g. B4")->required();
  an_cmd->add_option("--painted", an_painted, "painted nodes, e.g. 1,3")->required();
  an_cmd->add_option("--phi", an_phi, "coordinates, e.g. 1,0,0,2 or 1/2,3")->required();
  an_cmd->add_flag("--root-basis", an_root_basis, "read --phi in the root basis");
  an_cmd->add_option("--format", an_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sv_cmd = app.add_subcommand("solve", "Find all special functionals");
  std::string sv_type, sv_painted, sv_format = "text";
  sv_cmd->add_option("type", sv_type, "Dynkin type, e.g. B4")->required();
  sv_cmd->add_option("--painted", sv_painted, "painted nodes, e.g. 1,3")->required();
  sv_cmd->add_option("--format", sv_format, "text, csv, markdown, json, or latex")
      ->check(CLI::IsMember({"text", "csv", "markdown", "json", "latex"}));

  auto* tb_cmd = app.add_subcommand("tables", "Classify all diagrams in a rank window");
  TableConfig cfg;
  std::string tb_format = "csv";
  tb_cmd->add_option("--min-rank", cfg.min_rank, "smallest rank (default 2)");
  tb_cmd->add_option("--max-rank", cfg.max_rank, "largest rank (default 4)");
  tb_cmd->add_flag("--exceptional", cfg.exceptional, "also include E6, E7, E8");
  tb_cmd->add_option("--format", tb_format, "csv, markdown, json, or latex")
      ->check(CLI::IsMember({"csv", "markdown", "json", "latex"}));
  tb_cmd->add_option("--workers", cfg.workers, "worker threads (default: automatic)");

  auto* sc_cmd = app.add_subcommand("selfcheck", "Run the built-in invariant battery");
  bool quick = false;
  sc_cmd->add_flag("--quick", quick, "smaller rank windows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(roots_cmd)) {
      do_roots(out, roots_type);
    } else if (app.got_subcommand(an_cmd)) {
      do_analyze(out, an_type, an_painted, an_phi, an_root_basis, an_format);
    } else if (app.got_subcommand(sv_cmd)) {
      do_solve(out, sv_type, sv_painted, sv_format);
    } else if (app.got_subcommand(tb_cmd)) {
      cfg.format = parse_table_format(tb_format);
      do_tables(out, cfg);
    } else if (app.got_subcommand(sc_cmd)) {
      if (!run_selfcheck(out, quick)) return 2;
    }
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace lieorbit::cli
