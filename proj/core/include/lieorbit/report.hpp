#ifndef LIEORBIT_REPORT_HPP
#define LIEORBIT_REPORT_HPP

#include <string>
#include <vector>

#include "lieorbit/solver.hpp"

namespace lieorbit {

enum class TableFormat { Csv, Markdown, Json, Latex };

/// Parses "csv", "markdown", "json", "latex" (case-insensitive).
TableFormat parse_table_format(const std::string& text);

struct TableConfig {
  TableFormat format = TableFormat::Csv;
  int min_rank = 2;
  int max_rank = 4;
  bool exceptional = false; // additionally include E6, E7, E8
  int workers = 0;          // 0: LIEORBIT_WORKERS env, then hardware
};

/// One painted diagram together with its solution rows.
struct DiagramResult {
  VoganDiagram vd;
  std::vector<OrbitReport> rows;
};

/// Classifies every solution over all admissible diagrams in the configured
/// rank window (families A, B, C, D, F, G; E via `exceptional`). Painted
/// sets equivalent under a diagram symmetry are listed once, by their
/// lexicographically least representative. Diagrams without solutions are
/// omitted. Order: rank, family letter, then painted set by (size, lex).
std::vector<DiagramResult> run_tables(const TableConfig& cfg);

/// Renders results in the configured format. Text formats emit one row per
/// solution with columns diagram, phi, phi_in_delta, type, s, dim_v, dim_m,
/// g, v; JSON nests solutions under their diagram.
std::string render(const std::vector<DiagramResult>& results, const TableConfig& cfg);

/// Machine-readable JSON for a single solution row.
std::string json_report(const OrbitReport& rep);

/// Multi-line picture, e.g.
///   D4 painted=1,3
///   *--o--*
///      |
///      o 4
///   1  2  3
/// The first line round-trips through parse_diagram_text.
std::string render_diagram_ascii(const VoganDiagram& vd);

/// Parses the header form "D4 painted=1,3" (first line of the ASCII
/// rendering); throws usage_error on malformed input.
VoganDiagram parse_diagram_text(const std::string& text);

} // namespace lieorbit

#endif
