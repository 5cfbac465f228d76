#pragma once

#include <string>
#include <vector>

#include "vanbound/bounds.hpp"

namespace vanbound {

inline constexpr const char* kVersion = "1.0.0";

enum class OutputFormat { Csv, Json, Text };

OutputFormat parse_format(const std::string& name);  // "csv" | "json" | "text"
const char* format_name(OutputFormat format);

const char* group_name(GroupKind group);  // "o" | "so-even" | "so-odd"
GroupKind parse_group(const std::string& name);
const char* tf_kind_name(TfKind kind);  // "naive" | "optimal-even" | "optimal-odd"

struct RunConfig {
  double tolerance = 1e-8;
  int max_doublings = 22;
  double truncation_radius = 500;
  OutputFormat format = OutputFormat::Csv;
  int jobs = 0;  // 0 = one worker per hardware thread
  QuadratureSpec quad() const;
};

int effective_jobs(int jobs);

// One grid/table line. `bound` carries the value at full precision; the CSV
// renderer emits it twice, at table precision (9 significant digits) and as
// the lossless final column, so parse -> render round-trips byte-for-byte.
struct CsvRow {
  int rank = 0;
  int level = 0;
  double bound = 0;
  bool valid = false;
  double est_error = 0;
};

CsvRow to_row(const BoundResult& b);
std::vector<CsvRow> to_rows(const std::vector<BoundResult>& bs);

std::string render_rows(const std::vector<CsvRow>& rows, const RunConfig& cfg);
std::vector<CsvRow> parse_rows_csv(const std::string& text);  // inverse of the csv renderer

// Detail view of a single bound, including numerator, denominator base,
// validity, and the error estimate.
std::string render_result(const BoundResult& b, const RunConfig& cfg);

// Published table cells, embedded verbatim as printed (values like
// "3.08920\times10^{-16}" are parsed at comparison time).
struct PaperMainCell {
  int rank;
  int level;  // -1 where the table prints N/A
  const char* printed;
};
struct PaperOneLevelCell {
  int rank;
  const char* naive_printed;
  const char* optimal_printed;
};

const std::vector<PaperMainCell>& paper_main_table(GroupKind group);
const std::vector<PaperOneLevelCell>& paper_one_level_table(GroupKind group);
const char* paper_optimal_constant(GroupKind group);  // 4-digit g/phi(0) as printed
double parse_paper_number(const std::string& printed);

enum class CellStatus { Pass, Flagged, Fail };
const char* cell_status_name(CellStatus status);

struct CellReport {
  std::string table;
  GroupKind group = GroupKind::O;
  int rank = 0;
  int expected_level = -1;  // -1 = not applicable / N/A in print
  int computed_level = -1;
  std::string expected_printed;
  double expected_value = 0;
  double computed = 0;
  double abs_diff = 0;
  double rel_diff = 0;
  CellStatus status = CellStatus::Fail;
  std::string note;
};

// Comparison against the published tables. Cells whose printed values are
// reproducibly explained as misprints (a verified reconstruction matches the
// computed value) are Flagged rather than Fail; overall is true iff no cell
// ends up Fail.
struct ReproReport {
  std::vector<CellReport> cells;
  bool overall = false;
  int flagged_count() const;
};

ReproReport reproduce_main_tables(const RunConfig& cfg);
ReproReport reproduce_one_level_tables(const RunConfig& cfg);
std::string render_report(const ReproReport& report, const RunConfig& cfg);

// Plot-data presets: figure ids 5..12 map to (group, tf kind, ranks, levels).
struct FigureSpec {
  int id = 0;
  GroupKind group = GroupKind::O;
  TfKind kind = TfKind::Naive;
  std::vector<int> ranks;
  std::vector<int> levels;
};
FigureSpec figure_spec(int id);

}  // namespace vanbound
