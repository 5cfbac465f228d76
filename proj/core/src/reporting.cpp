#include "vanbound/reporting.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "vanbound/moments.hpp"
#include "vanbound/test_functions.hpp"

namespace vanbound {
namespace {

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, x);
  return buf;
}

std::string g9(double x) { return fmt("%.9g", x); }
std::string g17(double x) { return fmt("%.17g", x); }
std::string g3(double x) { return fmt("%.3g", x); }

double rel_to(double computed, double expected) {
  return std::fabs(computed - expected) / std::fabs(expected);
}

nlohmann::ordered_json meta_json(const RunConfig& cfg) {
  nlohmann::ordered_json m;
  m["version"] = kVersion;
  m["format"] = format_name(cfg.format);
  m["tolerance"] = cfg.tolerance;
  m["max_doublings"] = cfg.max_doublings;
  m["truncation_radius"] = cfg.truncation_radius;
  return m;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown output format: " + name);
}

const char* format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Text: return "text";
  }
  throw std::invalid_argument("bad output format value");
}

const char* group_name(GroupKind group) {
  switch (group) {
    case GroupKind::O: return "o";
    case GroupKind::SOEven: return "so-even";
    case GroupKind::SOOdd: return "so-odd";
  }
  throw std::invalid_argument("bad group value");
}

GroupKind parse_group(const std::string& name) {
  if (name == "o") return GroupKind::O;
  if (name == "so-even") return GroupKind::SOEven;
  if (name == "so-odd") return GroupKind::SOOdd;
  throw std::invalid_argument("unknown symmetry group: " + name);
}

const char* tf_kind_name(TfKind kind) {
  switch (kind) {
    case TfKind::Naive: return "naive";
    case TfKind::OptimalEven: return "optimal-even";
    case TfKind::OptimalOdd: return "optimal-odd";
  }
  throw std::invalid_argument("bad test-function kind value");
}

QuadratureSpec RunConfig::quad() const {
  QuadratureSpec spec;
  spec.tol = tolerance;
  spec.max_doublings = max_doublings;
  spec.truncation_radius = truncation_radius;
  return spec;
}

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

CsvRow to_row(const BoundResult& b) {
  return CsvRow{b.rank, b.level, b.bound, b.valid, b.est_error};
}

std::vector<CsvRow> to_rows(const std::vector<BoundResult>& bs) {
  std::vector<CsvRow> rows;
  rows.reserve(bs.size());
  for (const auto& b : bs) rows.push_back(to_row(b));
  return rows;
}

namespace {

constexpr const char* kRowHeader = "rank,level,bound,valid,est_error,bound_full";

std::string render_rows_csv(const std::vector<CsvRow>& rows) {
  std::string out = kRowHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.rank);
    out += ',';
    out += std::to_string(r.level);
    out += ',';
    out += g9(r.bound);
    out += ',';
    out += r.valid ? "true" : "false";
    out += ',';
    out += g9(r.est_error);
    out += ',';
    out += g17(r.bound);
    out += '\n';
  }
  return out;
}

std::string render_rows_json(const std::vector<CsvRow>& rows, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["meta"] = meta_json(cfg);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["rank"] = r.rank;
    o["level"] = r.level;
    o["bound"] = r.bound;
    o["valid"] = r.valid;
    o["est_error"] = r.est_error;
    arr.push_back(std::move(o));
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string render_rows_text(const std::vector<CsvRow>& rows) {
  char buf[128];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%4s %5s %16s %6s %16s\n", "rank", "level",
                "bound", "valid", "est_error");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%4d %5d %16s %6s %16s\n", r.rank, r.level,
                  g9(r.bound).c_str(), r.valid ? "true" : "false",
                  g9(r.est_error).c_str());
    out += buf;
  }
  return out;
}

}  // namespace

std::string render_rows(const std::vector<CsvRow>& rows, const RunConfig& cfg) {
  switch (cfg.format) {
    case OutputFormat::Csv: return render_rows_csv(rows);
    case OutputFormat::Json: return render_rows_json(rows, cfg);
    case OutputFormat::Text: return render_rows_text(rows);
  }
  throw std::invalid_argument("bad output format value");
}

std::vector<CsvRow> parse_rows_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kRowHeader)
    throw std::invalid_argument("csv header mismatch");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    std::istringstream ls(line);
    while (std::getline(ls, cur, ',')) fields.push_back(cur);
    if (fields.size() != 6)
      throw std::invalid_argument("csv row must have 6 fields: " + line);
    CsvRow r;
    r.rank = std::stoi(fields[0]);
    r.level = std::stoi(fields[1]);
    if (fields[3] == "true")
      r.valid = true;
    else if (fields[3] == "false")
      r.valid = false;
    else
      throw std::invalid_argument("csv valid field must be true/false: " + line);
    r.est_error = std::stod(fields[4]);
    r.bound = std::stod(fields[5]);  // lossless column wins over the 9-digit one
    if (r.bound != 0.0 && rel_to(std::stod(fields[2]), r.bound) > 1e-8)
      throw std::invalid_argument("csv bound columns disagree: " + line);
    rows.push_back(r);
  }
  return rows;
}

std::string render_result(const BoundResult& b, const RunConfig& cfg) {
  switch (cfg.format) {
    case OutputFormat::Csv: {
      std::string out =
          "group,rank,level,tf,bound,valid,numerator,denom_base,est_error,bound_full\n";
      out += group_name(b.group);
      out += ',';
      out += std::to_string(b.rank);
      out += ',';
      out += std::to_string(b.level);
      out += ',';
      out += tf_kind_name(b.tf_kind);
      out += ',';
      out += g9(b.bound);
      out += ',';
      out += b.valid ? "true" : "false";
      out += ',';
      out += g9(b.numerator);
      out += ',';
      out += g9(b.denom_base);
      out += ',';
      out += g9(b.est_error);
      out += ',';
      out += g17(b.bound);
      out += '\n';
      return out;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["meta"] = meta_json(cfg);
      nlohmann::ordered_json o;
      o["group"] = group_name(b.group);
      o["rank"] = b.rank;
      o["level"] = b.level;
      o["tf"] = tf_kind_name(b.tf_kind);
      o["bound"] = b.bound;
      o["valid"] = b.valid;
      o["numerator"] = b.numerator;
      o["denom_base"] = b.denom_base;
      o["est_error"] = b.est_error;
      j["result"] = std::move(o);
      return j.dump(2) + "\n";
    }
    case OutputFormat::Text: {
      std::string out;
      out += "group:      ";
      out += group_name(b.group);
      out += '\n';
      out += "rank:       " + std::to_string(b.rank) + '\n';
      out += "level:      " + std::to_string(b.level) + '\n';
      out += "tf:         ";
      out += tf_kind_name(b.tf_kind);
      out += '\n';
      out += "bound:      " + g17(b.bound) + '\n';
      out += std::string("valid:      ") + (b.valid ? "true" : "false") + '\n';
      out += "numerator:  " + g17(b.numerator) + '\n';
      out += "denom_base: " + g17(b.denom_base) + '\n';
      out += "est_error:  " + g9(b.est_error) + '\n';
      return out;
    }
  }
  throw std::invalid_argument("bad output format value");
}

const std::vector<PaperMainCell>& paper_main_table(GroupKind group) {
  static const std::vector<PaperMainCell> even = {
      {2, 1, "0.43231300"},
      {4, 2, "0.066666667"},
      {6, 6, "0.003346510"},
      {8, 8, "0.000579210"},
      {10, 10, "1.14380\\times10^{-6}"},
      {12, 12, "1.85901\\times10^{-8}"},
      {14, 14, "2.59310\\times10^{-10}"},
      {16, 16, "3.09185\\times10^{-12}"},
      {18, 18, "3.26332\\times10^{-14}"},
      {20, 20, "3.08920\\times10^{-16}"},
  };
  static const std::vector<PaperMainCell> odd = {
      {1, -1, "1.0000000"},
      {3, 2, "0.111111111"},
      {5, 2, "0.020408300"},
      {7, 6, "0.000292790"},
      {9, 8, "7.65596\\times10^{-6}"},
      {11, 10, "1.53302\\times10^{-7}"},
      {13, 12, "2.50956\\times10^{-9}"},
      {15, 16, "3.03362\\times10^{-11}"},
      {17, 18, "3.10549\\times10^{-13}"},
      {19, 20, "4.18402\\times10^{-17}"},
  };
  switch (group) {
    case GroupKind::SOEven: return even;
    case GroupKind::SOOdd: return odd;
    default: throw std::invalid_argument("no published main table for this group");
  }
}

const std::vector<PaperOneLevelCell>& paper_one_level_table(GroupKind group) {
  static const std::vector<PaperOneLevelCell> even = {
      {2, "0.43750000", "0.43231300"},
      {4, "0.21875000", "0.21615700"},
      {6, "0.14583333", "0.14410400"},
      {8, "0.10937500", "0.10807800"},
      {10, "0.08750000", "0.08646260"},
      {12, "0.07291670", "0.07205220"},
      {14, "0.06250000", "0.06175900"},
      {16, "0.05468750", "0.05403910"},
      {18, "0.04861110", "0.04803848"},
      {20, "0.04375000", "0.04323130"},
  };
  static const std::vector<PaperOneLevelCell> odd = {
      {1, "1.12500000", "1.11454000"},
      {3, "0.37500000", "0.37151300"},
      {5, "0.22500000", "0.22908000"},
      {7, "0.16071400", "0.15922000"},
      {9, "0.12500000", "0.12383838"},
      {11, "0.10227300", "0.10132200"},
      {13, "0.08653850", "0.08573380"},
      {15, "0.07500000", "0.07430270"},
      {17, "0.06617650", "0.06556120"},
      {19, "0.05921050", "0.05866000"},
      {21, "0.05357140", "0.05307333"},
  };
  switch (group) {
    case GroupKind::SOEven: return even;
    case GroupKind::SOOdd: return odd;
    default:
      throw std::invalid_argument("no published one-level table for this group");
  }
}

const char* paper_optimal_constant(GroupKind group) {
  switch (group) {
    case GroupKind::SOEven: return "0.8645";
    case GroupKind::SOOdd: return "1.1145";
    default: throw std::invalid_argument("no published constant for this group");
  }
}

double parse_paper_number(const std::string& printed) {
  static const std::string marker = "\\times10^{";
  std::string mant = printed;
  int exp10 = 0;
  auto pos = printed.find(marker);
  if (pos != std::string::npos) {
    mant = printed.substr(0, pos);
    auto open = pos + marker.size();
    auto close = printed.find('}', open);
    if (close == std::string::npos || close + 1 != printed.size())
      throw std::invalid_argument("malformed exponent in: " + printed);
    exp10 = std::stoi(printed.substr(open, close - open));
  }
  std::size_t used = 0;
  double m = std::stod(mant, &used);
  while (used < mant.size() &&
         std::isspace(static_cast<unsigned char>(mant[used])))
    ++used;
  if (used != mant.size())
    throw std::invalid_argument("malformed number: " + printed);
  return m * std::pow(10.0, exp10);
}

const char* cell_status_name(CellStatus status) {
  switch (status) {
    case CellStatus::Pass: return "pass";
    case CellStatus::Flagged: return "flagged";
    case CellStatus::Fail: return "fail";
  }
  throw std::invalid_argument("bad cell status value");
}

int ReproReport::flagged_count() const {
  int n = 0;
  for (const auto& c : cells)
    if (c.status == CellStatus::Flagged) ++n;
  return n;
}

namespace {

void fill_diffs(CellReport& c) {
  c.abs_diff = std::fabs(c.computed - c.expected_value);
  c.rel_diff =
      c.expected_value == 0 ? c.abs_diff : c.abs_diff / std::fabs(c.expected_value);
}

// Known misprints in the published main tables. Returns true (and fills the
// note) when the printed value is reproduced from computed quantities by the
// documented reading; the cell is then Flagged instead of Fail.
bool reconstruct_main_cell(GroupKind group, int rank, CellReport& c,
                           const BoundResult& best, const QuadratureSpec& spec) {
  if (group == GroupKind::SOEven && rank == 6) {
    // Printed 0.003346510; computed level-6 bound is 0.002346507...: the
    // printed value reads as the computed one with the leading digit bumped.
    double corrected = c.expected_value - 1e-3;
    if (best.level == 6 && rel_to(best.bound, corrected) <= 0.01) {
      c.note = "printed value exceeds the computed level-6 bound by exactly 1e-3;"
               " read as 0.002346510 it matches the computed " + g9(best.bound);
      return true;
    }
    return false;
  }
  if (group == GroupKind::SOEven && rank == 8) {
    // Printed 0.000579210; computed level-8 bound is 5.7963e-5: a factor-10
    // exponent slip.
    double corrected = c.expected_value / 10.0;
    if (best.level == 8 && rel_to(best.bound, corrected) <= 0.01) {
      c.note = "printed value is 10x the computed level-8 bound;"
               " read as 5.79210e-5 it matches the computed " + g9(best.bound);
      return true;
    }
    return false;
  }
  if (group == GroupKind::SOOdd && rank == 5) {
    // The printed row stops at level 2 (bound 1/49) although level 4 is
    // admissible for rank 5 and gives a smaller bound.
    TestFunction tf = make_test_function(TfKind::Naive, 1.0);
    BoundResult lvl2 = moment_bound(GroupKind::SOOdd, 5, 2, tf, spec);
    if (lvl2.valid && rel_to(lvl2.bound, c.expected_value) <= 1e-3) {
      c.note = "printed row uses level 2 (bound " + g9(lvl2.bound) +
               " = 1/49); level " + std::to_string(best.level) +
               " is admissible and improves it to " + g9(best.bound);
      return true;
    }
    return false;
  }
  if (group == GroupKind::SOOdd && rank == 19) {
    // The printed value reproduces the rank-21 bound at level 20, not the
    // rank-19 one.
    TestFunction tf = make_test_function(TfKind::Naive, 2.0 / 20.0);
    BoundResult r21 = moment_bound(GroupKind::SOOdd, 21, 20, tf, spec);
    if (best.level == 20 && r21.valid &&
        rel_to(r21.bound, c.expected_value) <= 0.01) {
      c.note = "printed value matches the rank-21 level-20 bound " +
               g9(r21.bound) + "; the computed rank-19 bound at level 20 is " +
               g9(best.bound);
      return true;
    }
    return false;
  }
  return false;
}

void attach_passing_note(GroupKind group, int rank, CellReport& c) {
  if (group == GroupKind::SOEven && rank == 20) {
    c.note = "search is capped at level 20 to mirror the published sweep;"
             " level 22 would lower this bound further";
  }
}

}  // namespace

ReproReport reproduce_main_tables(const RunConfig& cfg) {
  QuadratureSpec spec = cfg.quad();
  ReproReport rep;
  bool any_fail = false;
  for (GroupKind group : {GroupKind::SOEven, GroupKind::SOOdd}) {
    std::string tname = std::string(group_name(group)) + "-main";
    for (const auto& cell : paper_main_table(group)) {
      BoundResult best = bound_at_least(group, cell.rank, TfKind::Naive, spec, 20);
      CellReport c;
      c.table = tname;
      c.group = group;
      c.rank = cell.rank;
      c.expected_level = cell.level;
      c.computed_level = best.level;
      c.expected_printed = cell.printed;
      c.expected_value = parse_paper_number(cell.printed);
      c.computed = best.bound;
      fill_diffs(c);
      bool level_ok =
          cell.level < 0 ? best.level == 0 : best.level == cell.level;
      if (level_ok && c.rel_diff <= 0.01) {
        c.status = CellStatus::Pass;
        attach_passing_note(group, cell.rank, c);
      } else if (reconstruct_main_cell(group, cell.rank, c, best, spec)) {
        c.status = CellStatus::Flagged;
      } else {
        c.status = CellStatus::Fail;
        any_fail = true;
      }
      rep.cells.push_back(std::move(c));
    }
  }
  rep.overall = !any_fail;
  return rep;
}

ReproReport reproduce_one_level_tables(const RunConfig& cfg) {
  QuadratureSpec spec = cfg.quad();
  ReproReport rep;
  bool any_fail = false;
  for (GroupKind group : {GroupKind::SOEven, GroupKind::SOOdd}) {
    std::string gname = group_name(group);
    TfKind opt_kind = optimal_kind_of(group);
    TestFunction naive_tf = make_test_function(TfKind::Naive, 2.0);
    TestFunction opt_tf = make_test_function(opt_kind, 2.0);

    // The 4-digit constant g/phi(0) printed alongside each optimal table;
    // it equals the rank-1 optimal bound.
    {
      CellReport c;
      c.table = gname + "-optimal-constant";
      c.group = group;
      c.rank = 0;
      c.expected_printed = paper_optimal_constant(group);
      c.expected_value = parse_paper_number(c.expected_printed);
      c.computed = one_level_bound(group, 1, opt_tf, spec).bound;
      fill_diffs(c);
      c.status = c.abs_diff <= 5e-4 ? CellStatus::Pass : CellStatus::Fail;
      if (c.status == CellStatus::Fail) any_fail = true;
      rep.cells.push_back(std::move(c));
    }

    for (const auto& cell : paper_one_level_table(group)) {
      {
        CellReport c;
        c.table = gname + "-one-level-naive";
        c.group = group;
        c.rank = cell.rank;
        c.expected_printed = cell.naive_printed;
        c.expected_value = parse_paper_number(cell.naive_printed);
        BoundResult b = one_level_bound(group, cell.rank, naive_tf, spec);
        c.computed_level = b.level;
        c.computed = b.bound;
        fill_diffs(c);
        // printed values are roundings/truncations at 6-8 decimals
        c.status = c.abs_diff <= 5e-7 ? CellStatus::Pass : CellStatus::Fail;
        if (c.status == CellStatus::Fail) any_fail = true;
        rep.cells.push_back(std::move(c));
      }
      {
        CellReport c;
        c.table = gname + "-one-level-optimal";
        c.group = group;
        c.rank = cell.rank;
        c.expected_printed = cell.optimal_printed;
        c.expected_value = parse_paper_number(cell.optimal_printed);
        BoundResult b = one_level_bound(group, cell.rank, opt_tf, spec);
        c.computed_level = b.level;
        c.computed = b.bound;
        fill_diffs(c);
        if (group == GroupKind::SOOdd && cell.rank == 5) {
          // Printed 0.22908000 garbles the digits of 0.2229079...; the cell
          // must instead match the printed constant divided by the rank.
          double corrected = parse_paper_number(paper_optimal_constant(group)) / 5.0;
          if (std::fabs(c.computed - corrected) <= 5e-4) {
            c.status = CellStatus::Flagged;
            c.note = "printed cell garbles the digits of " + g9(corrected) +
                     " (constant / 5); computed value " + g9(c.computed) +
                     " matches the corrected reading";
          } else {
            c.status = CellStatus::Fail;
            any_fail = true;
          }
        } else {
          c.status = c.abs_diff <= 5e-4 ? CellStatus::Pass : CellStatus::Fail;
          if (c.status == CellStatus::Fail) any_fail = true;
        }
        rep.cells.push_back(std::move(c));
      }
    }
  }
  rep.overall = !any_fail;
  return rep;
}

namespace {

std::string render_report_csv(const ReproReport& rep) {
  std::string out =
      "table,rank,expected_level,computed_level,expected,computed,abs_diff,rel_diff,status,note\n";
  for (const auto& c : rep.cells) {
    out += c.table;
    out += ',';
    out += std::to_string(c.rank);
    out += ',';
    out += std::to_string(c.expected_level);
    out += ',';
    out += std::to_string(c.computed_level);
    out += ',';
    out += g9(c.expected_value);
    out += ',';
    out += g9(c.computed);
    out += ',';
    out += g3(c.abs_diff);
    out += ',';
    out += g3(c.rel_diff);
    out += ',';
    out += cell_status_name(c.status);
    out += ',';
    std::string note = c.note;
    for (char& ch : note)
      if (ch == ',') ch = ';';
    out += note;
    out += '\n';
  }
  out += "overall,";
  out += rep.overall ? "pass" : "fail";
  out += ",flagged=";
  out += std::to_string(rep.flagged_count());
  out += '\n';
  return out;
}

std::string render_report_json(const ReproReport& rep, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["meta"] = meta_json(cfg);
  j["overall"] = rep.overall;
  j["flagged"] = rep.flagged_count();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : rep.cells) {
    nlohmann::ordered_json o;
    o["table"] = c.table;
    o["rank"] = c.rank;
    o["expected_level"] = c.expected_level;
    o["computed_level"] = c.computed_level;
    o["expected_printed"] = c.expected_printed;
    o["expected"] = c.expected_value;
    o["computed"] = c.computed;
    o["abs_diff"] = c.abs_diff;
    o["rel_diff"] = c.rel_diff;
    o["status"] = cell_status_name(c.status);
    o["note"] = c.note;
    arr.push_back(std::move(o));
  }
  j["cells"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string render_report_text(const ReproReport& rep) {
  std::string out;
  for (const auto& c : rep.cells) {
    const char* tag = c.status == CellStatus::Pass     ? "[PASS]"
                      : c.status == CellStatus::Flagged ? "[FLAG]"
                                                        : "[FAIL]";
    out += tag;
    out += ' ';
    out += c.table;
    out += " rank=" + std::to_string(c.rank);
    if (c.expected_level >= 0 || c.computed_level >= 0) {
      out += " level=";
      out += c.expected_level < 0 ? "N/A" : std::to_string(c.expected_level);
      out += '/';
      out += std::to_string(c.computed_level);
    }
    out += " expected=" + c.expected_printed;
    out += " computed=" + g9(c.computed);
    out += " rel=" + g3(c.rel_diff);
    if (!c.note.empty()) out += "  -- " + c.note;
    out += '\n';
  }
  out += "overall: ";
  out += rep.overall ? "PASS" : "FAIL";
  out += " (" + std::to_string(rep.cells.size()) + " cells, " +
         std::to_string(rep.flagged_count()) + " flagged)\n";
  return out;
}

}  // namespace

std::string render_report(const ReproReport& report, const RunConfig& cfg) {
  switch (cfg.format) {
    case OutputFormat::Csv: return render_report_csv(report);
    case OutputFormat::Json: return render_report_json(report, cfg);
    case OutputFormat::Text: return render_report_text(report);
  }
  throw std::invalid_argument("bad output format value");
}

FigureSpec figure_spec(int id) {
  if (id < 5 || id > 12)
    throw std::invalid_argument("figure id must be in 5..12");
  FigureSpec f;
  f.id = id;
  bool even_group = id == 5 || id == 6 || id == 9 || id == 10;
  f.group = even_group ? GroupKind::SOEven : GroupKind::SOOdd;
  f.kind = id <= 8 ? TfKind::Naive : optimal_kind_of(f.group);
  bool low_levels = id == 5 || id == 7 || id == 9 || id == 11;
  f.levels = low_levels ? std::vector<int>{1, 2, 4, 6, 8, 10}
                        : std::vector<int>{12, 14, 16, 18, 20};
  if (even_group)
    for (int r = 2; r <= 20; r += 2) f.ranks.push_back(r);
  else
    for (int r = 1; r <= 21; r += 2) f.ranks.push_back(r);
  return f;
}

}  // namespace vanbound
