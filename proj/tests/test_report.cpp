#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lieorbit/errors.hpp"
#include "lieorbit/report.hpp"

using namespace lieorbit;

namespace {

std::string read_fixture(const std::string& name) {
  const std::string path = std::string(LIEORBIT_FIXTURES_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TableConfig full_config(TableFormat format) {
  TableConfig cfg;
  cfg.format = format;
  cfg.exceptional = true;
  return cfg;
}

} // namespace

TEST_CASE("format parsing") {
  CHECK(parse_table_format("csv") == TableFormat::Csv);
  CHECK(parse_table_format("CSV") == TableFormat::Csv);
  CHECK(parse_table_format("Markdown") == TableFormat::Markdown);
  CHECK(parse_table_format("json") == TableFormat::Json);
  CHECK(parse_table_format("LaTeX") == TableFormat::Latex);
  CHECK_THROWS_AS(parse_table_format("xml"), usage_error);
  CHECK_THROWS_AS(parse_table_format(""), usage_error);
}

TEST_CASE("table sweep shape and order") {
  const auto results = run_tables(full_config(TableFormat::Csv));
  CHECK(results.size() == 61);
  std::size_t rows = 0;
  for (const auto& r : results) rows += r.rows.size();
  CHECK(rows == 65);

  for (std::size_t i = 1; i < results.size(); ++i) {
    const auto& a = results[i - 1].vd;
    const auto& b = results[i].vd;
    const bool type_le = a.type < b.type || a.type == b.type;
    CHECK(type_le);
    if (a.type == b.type) {
      const bool painted_lt =
          a.painted.size() < b.painted.size() ||
          (a.painted.size() == b.painted.size() && a.painted < b.painted);
      CHECK(painted_lt);
    }
  }
  // Only canonical representatives appear.
  for (const auto& r : results)
    CHECK(r.vd.painted == canonical_painted(r.vd.type, r.vd.painted));

  // Dropping the exceptional families removes exactly their diagrams.
  TableConfig classical = full_config(TableFormat::Csv);
  classical.exceptional = false;
  CHECK(run_tables(classical).size() == 39);
}

TEST_CASE("rendered tables match the golden files") {
  struct Case {
    TableFormat format;
    const char* file;
  };
  for (const Case& c : {Case{TableFormat::Csv, "golden/tables.csv"},
                        Case{TableFormat::Markdown, "golden/tables.md"},
                        Case{TableFormat::Json, "golden/tables.json"},
                        Case{TableFormat::Latex, "golden/tables.tex"}}) {
    const TableConfig cfg = full_config(c.format);
    CHECK(render(run_tables(cfg), cfg) == read_fixture(c.file));
  }
}

TEST_CASE("worker count does not change the output") {
  TableConfig cfg = full_config(TableFormat::Csv);
  cfg.max_rank = 3;
  cfg.workers = 1;
  const std::string serial = render(run_tables(cfg), cfg);
  cfg.workers = 4;
  CHECK(render(run_tables(cfg), cfg) == serial);
}

TEST_CASE("single solution JSON is machine readable") {
  RootData rd(VoganDiagram({Family::A, 2}, {1}));
  const auto sols = enumerate_special(rd);
  REQUIRE(sols.size() == 1);
  const auto doc = nlohmann::json::parse(json_report(classify(rd, sols[0])));
  CHECK(doc["phi"] == nlohmann::json::array({1, 0}));
  CHECK(doc["support"] == nlohmann::json::array({1}));
  CHECK(doc["cone"] == false);
  CHECK(doc["lambda"] == "-6");
  CHECK(doc["type_label"] == "GT");
  CHECK(doc["s"] == "-12");
  CHECK(doc["dim_v"] == 4);
  CHECK(doc["dim_m"] == 4);
  CHECK(doc["real_form"] == "su(1,2)");
  CHECK(doc["stabilizer"] == nlohmann::json::array({"su(2)"}));
  CHECK(doc["center_rank"] == 1);
  CHECK(doc["integrable"] == true);
  CHECK(doc["phi_is_root"] == false);
}

TEST_CASE("diagram pictures") {
  CHECK(render_diagram_ascii(VoganDiagram({Family::B, 4}, {1})) ==
        "B4 painted=1\n"
        "*==o--o--o\n"
        "1  2  3  4\n");
  CHECK(render_diagram_ascii(VoganDiagram({Family::D, 4}, {1, 3})) ==
        "D4 painted=1,3\n"
        "*--o--*\n"
        "   |\n"
        "   o 4\n"
        "1  2  3\n");
  CHECK(render_diagram_ascii(VoganDiagram({Family::E, 8}, {5})) ==
        "E8 painted=5\n"
        "o--o--o--o--*--o--o\n"
        "            |\n"
        "            o 8\n"
        "1  2  3  4  5  6  7\n");
  CHECK(render_diagram_ascii(VoganDiagram({Family::G, 2}, {2})) ==
        "G2 painted=2\n"
        "o##*\n"
        "1  2\n");
}

TEST_CASE("diagram text round trip") {
  for (const char* text : {"B4 painted=1,3", "A1 painted=1", "E8 painted=5",
                           "G2 painted=1,2", "D12 painted=11,12"}) {
    const VoganDiagram vd = parse_diagram_text(text);
    CHECK(vd.str() == text);
    const std::string pic = render_diagram_ascii(vd);
    const VoganDiagram back = parse_diagram_text(pic.substr(0, pic.find('\n')));
    CHECK(back.str() == vd.str());
  }
  for (const char* bad :
       {"", "B4", "B4 painted=", "B4 painted=0", "B4 painted=5",
        "B4 painted=1,,2", "B4 painted=x", "H4 painted=1", "B4 painted 1",
        "B4 painted=1,3 extra"})
    CHECK_THROWS_AS(parse_diagram_text(bad), usage_error);
}
