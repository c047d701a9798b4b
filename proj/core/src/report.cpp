#include "lieorbit/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lieorbit/errors.hpp"

namespace lieorbit {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kColumns[] = {"diagram", "phi",   "phi_in_delta",
                                    "type",    "s",     "dim_v",
                                    "dim_m",   "g",     "v"};

std::vector<std::string> row_cells(const VoganDiagram& vd, const OrbitReport& rep) {
  return {vd.str(),
          rep.phi_str(),
          rep.phi_is_root ? "yes" : "no",
          rep.type_label.value_or(""),
          rep.s.str(),
          std::to_string(rep.dims.dim_v),
          std::to_string(rep.dims.dim_m),
          rep.real_form,
          rep.stabilizer.str()};
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const std::vector<DiagramResult>& results) {
  std::ostringstream os;
  bool first = true;
  for (const char* col : kColumns) {
    os << (first ? "" : ",") << col;
    first = false;
  }
  os << "\n";
  for (const DiagramResult& dr : results)
    for (const OrbitReport& rep : dr.rows) {
      first = true;
      for (const std::string& cell : row_cells(dr.vd, rep)) {
        os << (first ? "" : ",") << csv_escape(cell);
        first = false;
      }
      os << "\n";
    }
  return os.str();
}

std::string render_markdown(const std::vector<DiagramResult>& results) {
  std::ostringstream os;
  os << "|";
  for (const char* col : kColumns) os << " " << col << " |";
  os << "\n|";
  for (std::size_t i = 0; i < std::size(kColumns); ++i) os << " --- |";
  os << "\n";
  for (const DiagramResult& dr : results)
    for (const OrbitReport& rep : dr.rows) {
      os << "|";
      for (const std::string& cell : row_cells(dr.vd, rep))
        os << " " << (cell.empty() ? " " : cell) << " |";
      os << "\n";
    }
  return os.str();
}

/// "su(1,2)" -> "\mathfrak{su}(1,2)", "sp(3,R)" -> "\mathfrak{sp}(3,\mathbb{R})",
/// "so*(10)" -> "\mathfrak{so}^*(10)", "e7(-25)" -> "\mathfrak{e}_{7(-25)}",
/// "e6" -> "\mathfrak{e}_6", "R" -> "\mathbb{R}".
std::string latex_algebra(const std::string& name) {
  if (name == "R") return "\\mathbb{R}";
  const std::size_t paren = name.find('(');
  std::string head = paren == std::string::npos ? name : name.substr(0, paren);
  std::string args = paren == std::string::npos ? "" : name.substr(paren);
  bool star = false;
  if (!head.empty() && head.back() == '*') {
    star = true;
    head.pop_back();
  }
  // Replace a literal R argument by blackboard bold.
  std::string fixed_args;
  for (char c : args) {
    if (c == 'R')
      fixed_args += "\\mathbb{R}";
    else
      fixed_args += c;
  }
  if (head.size() == 2 && std::isalpha(static_cast<unsigned char>(head[0])) &&
      std::isdigit(static_cast<unsigned char>(head[1]))) {
    // Exceptional: e6, f4(4), g2(2), e7(-25).
    std::string sub(1, head[1]);
    if (!args.empty()) sub += args; // inner signature joins the subscript
    if (sub.size() == 1) return "\\mathfrak{" + std::string(1, head[0]) + "}_" + sub;
    return "\\mathfrak{" + std::string(1, head[0]) + "}_{" + sub + "}";
  }
  return "\\mathfrak{" + head + "}" + (star ? "^*" : "") + fixed_args;
}

std::string latex_phi(const OrbitReport& rep) {
  std::ostringstream os;
  os << "$";
  if (rep.cone && rep.support.size() >= 2) {
    for (std::size_t k = 0; k < rep.support.size(); ++k) {
      if (k > 0) os << "+";
      os << "t_{" << (k + 1) << "}\\varphi_{" << rep.support[k] << "}";
    }
    os << "$ ($t_i>0$)";
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < rep.phi.size(); ++i) {
    if (rep.phi[i].is_zero()) continue;
    if (!first) os << "+";
    if (rep.phi[i].is_integer()) {
      if (rep.phi[i].num() != 1) os << rep.phi[i].num();
    } else {
      os << "\\tfrac{" << rep.phi[i].num() << "}{" << rep.phi[i].den() << "}";
    }
    os << "\\varphi_{" << (i + 1) << "}";
    first = false;
  }
  os << "$";
  return os.str();
}

std::string latex_diagram(const VoganDiagram& vd) {
  std::ostringstream os;
  os << "$" << static_cast<char>(vd.type.family) << "_{" << vd.type.rank << "}$ $\\{";
  bool first = true;
  for (int p : vd.painted) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  os << "\\}$";
  return os.str();
}

std::string render_latex(const std::vector<DiagramResult>& results) {
  std::ostringstream os;
  os << "\\begin{tabular}{lllrrrrll}\n\\hline\n";
  os << "diagram & $\\varphi$ & $\\varphi\\in\\Delta$ & type & $s$ & $\\dim V$ & "
        "$\\dim M$ & $G$ & $V$ \\\\\n\\hline\n";
  for (const DiagramResult& dr : results)
    for (const OrbitReport& rep : dr.rows) {
      os << latex_diagram(dr.vd) << " & " << latex_phi(rep) << " & "
         << (rep.phi_is_root ? "yes" : "no") << " & "
         << rep.type_label.value_or("") << " & $" << rep.s.str() << "$ & "
         << rep.dims.dim_v << " & " << rep.dims.dim_m << " & $"
         << latex_algebra(rep.real_form) << "$ & $";
      bool first = true;
      for (const StabilizerSummand& sm : rep.stabilizer.summands) {
        os << (first ? "" : "\\oplus ") << latex_algebra(sm.name);
        first = false;
      }
      for (int i = 0; i < rep.stabilizer.center_rank; ++i) {
        os << (first ? "" : "\\oplus ") << "\\mathbb{R}";
        first = false;
      }
      os << "$ \\\\\n";
    }
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

ordered_json solution_json(const OrbitReport& rep) {
  ordered_json j;
  bool integral = true;
  for (const Rational& c : rep.phi) integral = integral && c.is_integer();
  if (integral) {
    std::vector<long long> phi;
    for (const Rational& c : rep.phi) phi.push_back(c.num());
    j["phi"] = phi;
  } else {
    std::vector<std::string> phi;
    for (const Rational& c : rep.phi) phi.push_back(c.str());
    j["phi"] = phi;
  }
  j["support"] = rep.support;
  j["cone"] = rep.cone;
  j["lambda"] = rep.lambda ? ordered_json(rep.lambda->str()) : ordered_json(nullptr);
  j["type_label"] =
      rep.type_label ? ordered_json(*rep.type_label) : ordered_json(nullptr);
  j["s"] = rep.s.str();
  j["dim_v"] = rep.dims.dim_v;
  j["dim_m"] = rep.dims.dim_m;
  j["real_form"] = rep.real_form;
  std::vector<std::string> stab;
  for (const StabilizerSummand& sm : rep.stabilizer.summands) stab.push_back(sm.name);
  j["stabilizer"] = stab;
  j["center_rank"] = rep.stabilizer.center_rank;
  j["integrable"] = rep.integrable;
  j["phi_is_root"] = rep.phi_is_root;
  return j;
}

std::string render_json(const std::vector<DiagramResult>& results) {
  ordered_json arr = ordered_json::array();
  for (const DiagramResult& dr : results) {
    ordered_json d;
    d["type"] = dr.vd.type.str();
    d["rank"] = dr.vd.type.rank;
    d["painted"] = std::vector<int>(dr.vd.painted.begin(), dr.vd.painted.end());
    ordered_json sols = ordered_json::array();
    for (const OrbitReport& rep : dr.rows) sols.push_back(solution_json(rep));
    d["solutions"] = sols;
    arr.push_back(d);
  }
  return arr.dump(2) + "\n";
}

int resolve_workers(const TableConfig& cfg, std::size_t njobs) {
  int w = cfg.workers;
  if (w <= 0) {
    if (const char* env = std::getenv("LIEORBIT_WORKERS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v > 0) w = static_cast<int>(v);
    }
  }
  if (w <= 0) w = static_cast<int>(std::thread::hardware_concurrency());
  if (w <= 0) w = 1;
  const std::size_t cap = std::max<std::size_t>(njobs, 1);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(w), cap));
}

} // namespace

TableFormat parse_table_format(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "csv") return TableFormat::Csv;
  if (t == "markdown" || t == "md") return TableFormat::Markdown;
  if (t == "json") return TableFormat::Json;
  if (t == "latex" || t == "tex") return TableFormat::Latex;
  throw usage_error("unknown format: " + text);
}

std::vector<DiagramResult> run_tables(const TableConfig& cfg) {
  if (cfg.min_rank < 1 || cfg.max_rank < cfg.min_rank)
    throw usage_error("rank window must satisfy 1 <= min <= max");
  if (cfg.max_rank > kMaxRank)
    throw usage_error("max rank exceeds the supported bound " + std::to_string(kMaxRank));

  std::vector<DynkinType> types;
  for (int r = cfg.min_rank; r <= cfg.max_rank; ++r) {
    types.push_back({Family::A, r});
    if (r >= 2) types.push_back({Family::B, r});
    if (r >= 3) types.push_back({Family::C, r});
    if (r >= 4) types.push_back({Family::D, r});
    if (r == 4) types.push_back({Family::F, 4});
    if (r == 2) types.push_back({Family::G, 2});
  }
  if (cfg.exceptional)
    for (int r : {6, 7, 8}) types.push_back({Family::E, r});
  std::sort(types.begin(), types.end());

  std::vector<VoganDiagram> diagrams;
  for (const DynkinType& t : types) {
    std::vector<std::set<int>> painted_sets;
    for (uint64_t mask = 1; mask < (1ULL << t.rank); ++mask) {
      std::set<int> painted;
      for (int b = 0; b < t.rank; ++b)
        if (mask & (1ULL << b)) painted.insert(b + 1);
      if (canonical_painted(t, painted) == painted) painted_sets.push_back(painted);
    }
    std::sort(painted_sets.begin(), painted_sets.end(),
              [](const std::set<int>& a, const std::set<int>& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    for (std::set<int>& p : painted_sets) diagrams.emplace_back(t, std::move(p));
  }

  std::vector<std::optional<DiagramResult>> slots(diagrams.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= diagrams.size()) return;
      try {
        RootData rd(diagrams[i]);
        DiagramResult dr{diagrams[i], {}};
        for (const SpecialSolution& sol : enumerate_special(rd))
          dr.rows.push_back(classify(rd, sol));
        slots[i] = std::move(dr);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int nworkers = resolve_workers(cfg, diagrams.size());
  if (nworkers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<DiagramResult> out;
  for (std::optional<DiagramResult>& slot : slots)
    if (slot && !slot->rows.empty()) out.push_back(std::move(*slot));
  return out;
}

std::string render(const std::vector<DiagramResult>& results, const TableConfig& cfg) {
  switch (cfg.format) {
    case TableFormat::Csv: return render_csv(results);
    case TableFormat::Markdown: return render_markdown(results);
    case TableFormat::Json: return render_json(results);
    case TableFormat::Latex: return render_latex(results);
  }
  throw internal_error("unhandled table format");
}

std::string json_report(const OrbitReport& rep) {
  return solution_json(rep).dump(2) + "\n";
}

std::string render_diagram_ascii(const VoganDiagram& vd) {
  const DynkinType& t = vd.type;
  const int r = t.rank;
  const bool branched = (t.family == Family::D && r >= 4) || t.family == Family::E;
  const int chain_len = branched ? r - 1 : r;
  int attach = 0; // 1-based chain node carrying the branch
  if (t.family == Family::D) attach = r - 2;
  if (t.family == Family::E) attach = r - 3; // nodes 3, 4, 5 for E6, E7, E8

  std::map<std::pair<int, int>, int> mult;
  for (const Bond& b : bonds(t)) mult[{std::min(b.i, b.j), std::max(b.i, b.j)}] = b.mult;

  auto glyph = [&vd](int node) { return vd.painted.count(node) ? '*' : 'o'; };

  std::ostringstream os;
  os << vd.str() << "\n";
  for (int k = 1; k <= chain_len; ++k) {
    os << glyph(k);
    if (k < chain_len) {
      const int m = mult.at({k - 1, k});
      os << (m == 3 ? "##" : (m == 2 ? "==" : "--"));
    }
  }
  os << "\n";
  if (branched) {
    const std::string pad((attach - 1) * 3, ' ');
    os << pad << "|\n";
    os << pad << glyph(r) << " " << r << "\n";
  }
  for (int k = 1; k <= chain_len; ++k) {
    std::string label = std::to_string(k);
    os << label;
    if (k < chain_len) os << std::string(label.size() < 3 ? 3 - label.size() : 1, ' ');
  }
  os << "\n";
  return os.str();
}

VoganDiagram parse_diagram_text(const std::string& text) {
  std::string line = text.substr(0, text.find('\n'));
  std::istringstream is(line);
  std::string type_token, painted_token;
  if (!(is >> type_token >> painted_token))
    throw usage_error("expected 'TYPE painted=i,j,...'");
  std::string rest;
  if (is >> rest) throw usage_error("trailing tokens after painted set");
  const std::string prefix = "painted=";
  if (painted_token.rfind(prefix, 0) != 0)
    throw usage_error("expected 'painted=' after the type");
  const DynkinType t = parse_type(type_token);
  std::set<int> painted;
  std::istringstream nodes(painted_token.substr(prefix.size()));
  std::string item;
  while (std::getline(nodes, item, ',')) {
    std::size_t used = 0;
    int node = 0;
    try {
      node = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw usage_error("bad painted node: " + item);
    }
    if (used != item.size()) throw usage_error("bad painted node: " + item);
    painted.insert(node);
  }
  return VoganDiagram(t, std::move(painted));
}

} // namespace lieorbit
