// Command-line front end: single bounds, rank x level grids, best-level
// tables, published-table reproduction, and plot-data presets.
//
// Exit codes: 0 success, 1 reproduction mismatch, 2 bad arguments,
// 3 quadrature tolerance not reached.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vanbound/bounds.hpp"
#include "vanbound/errors.hpp"
#include "vanbound/reporting.hpp"

namespace {

using namespace vanbound;

struct RangeArg {
  int lo = 0;
  int hi = 0;
};

RangeArg parse_range(const std::string& s) {
  RangeArg r;
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, pos));
      r.hi = std::stoi(s.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + s + "' (expected N or A..B)");
  }
  if (r.lo > r.hi)
    throw std::invalid_argument("empty range '" + s + "'");
  return r;
}

// Ranks follow the parity of the family: even orders for SO(even), odd for
// SO(odd), every integer for O.
std::vector<int> expand_ranks(GroupKind group, const RangeArg& r) {
  if (r.lo < 1) throw std::invalid_argument("ranks must be >= 1");
  std::vector<int> out;
  int start = r.lo;
  int step = 1;
  if (group == GroupKind::SOEven) {
    step = 2;
    if (start % 2 != 0) ++start;
  } else if (group == GroupKind::SOOdd) {
    step = 2;
    if (start % 2 == 0) ++start;
  }
  for (int v = start; v <= r.hi; v += step) out.push_back(v);
  if (out.empty())
    throw std::invalid_argument("rank range contains no admissible rank");
  return out;
}

// Levels are 1 (one-level bound) or even (moment order).
std::vector<int> expand_levels(const RangeArg& r) {
  if (r.lo < 1) throw std::invalid_argument("levels must be >= 1");
  std::vector<int> out;
  if (r.lo == 1 && r.hi >= 1) out.push_back(1);
  int start = r.lo <= 2 ? 2 : r.lo + (r.lo % 2);
  for (int v = start; v <= r.hi; v += 2) out.push_back(v);
  if (out.empty())
    throw std::invalid_argument("level range contains no admissible level");
  return out;
}

TfKind resolve_tf(const std::string& tf, GroupKind group) {
  if (tf == "naive") return TfKind::Naive;
  if (tf == "optimal") {
    if (group == GroupKind::O)
      throw std::invalid_argument(
          "no optimal test function is defined for group 'o'");
    return optimal_kind_of(group);
  }
  throw std::invalid_argument("unknown test function kind: " + tf);
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << payload;
  if (!f.good())
    throw std::runtime_error("failed writing output file: " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Upper bounds on central vanishing probabilities in newform families"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "",
                 "read option defaults from a key=value file (flags win)");

  RunConfig cfg;
  std::string format_s = "csv";
  std::string out_path;
  app.add_option("--tol", cfg.tolerance, "quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format_s, "output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this file");
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::string group_s, tf_s = "naive", which_s, ranks_s, levels_s;
  int rank = 0, level = 0, figure = 0;

  CLI::App* cmd_bound = app.add_subcommand(
      "bound", "one bound for a given group, rank, and level");
  cmd_bound->add_option("--group", group_s, "symmetry group")
      ->required()
      ->check(CLI::IsMember({"o", "so-even", "so-odd"}));
  cmd_bound->add_option("--rank", rank, "vanishing order bounded from above")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_bound->add_option("--level", level, "1 = one-level bound, even = moment order")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_bound->add_option("--tf", tf_s, "test function family")
      ->check(CLI::IsMember({"naive", "optimal"}))
      ->capture_default_str();

  CLI::App* cmd_table =
      app.add_subcommand("table", "grid of bounds over ranks x levels");
  cmd_table->add_option("--group", group_s, "symmetry group")
      ->required()
      ->check(CLI::IsMember({"o", "so-even", "so-odd"}));
  cmd_table->add_option("--ranks", ranks_s, "rank range A..B")->required();
  cmd_table->add_option("--levels", levels_s, "level range A..B")->required();
  cmd_table->add_option("--tf", tf_s, "test function family")
      ->check(CLI::IsMember({"naive", "optimal"}))
      ->capture_default_str();

  CLI::App* cmd_best = app.add_subcommand(
      "best", "best admissible level per rank (levels up to 20)");
  cmd_best->add_option("--group", group_s, "symmetry group")
      ->required()
      ->check(CLI::IsMember({"o", "so-even", "so-odd"}));
  cmd_best->add_option("--ranks", ranks_s, "rank range A..B")->required();
  cmd_best->add_option("--tf", tf_s, "test function family")
      ->check(CLI::IsMember({"naive", "optimal"}))
      ->capture_default_str();

  CLI::App* cmd_repro = app.add_subcommand(
      "reproduce", "compare computed bounds against the published tables");
  cmd_repro->add_option("--which", which_s, "which tables")
      ->required()
      ->check(CLI::IsMember({"main-tables", "one-level-tables"}));

  CLI::App* cmd_plot = app.add_subcommand(
      "plotdata", "grid preset matching a published figure (ids 5..12)");
  cmd_plot->add_option("--figure", figure, "figure id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.format = parse_format(format_s);
    QuadratureSpec spec = cfg.quad();
    std::string payload;
    int code = 0;

    if (cmd_bound->parsed()) {
      GroupKind group = parse_group(group_s);
      TfKind kind = resolve_tf(tf_s, group);
      BoundResult b;
      if (level == 1) {
        TestFunction tf = make_test_function(kind, 2.0);
        b = one_level_bound(group, rank, tf, spec);
      } else {
        if (level % 2 != 0)
          throw std::invalid_argument("moment level must be even");
        TestFunction tf = make_test_function(kind, 2.0 / level);
        b = moment_bound(group, rank, level, tf, spec);
      }
      payload = render_result(b, cfg);
    } else if (cmd_table->parsed()) {
      GroupKind group = parse_group(group_s);
      TfKind kind = resolve_tf(tf_s, group);
      auto ranks = expand_ranks(group, parse_range(ranks_s));
      auto levels = expand_levels(parse_range(levels_s));
      auto grid = bound_grid(group, ranks, levels, kind, spec,
                             effective_jobs(cfg.jobs));
      payload = render_rows(to_rows(grid), cfg);
    } else if (cmd_best->parsed()) {
      GroupKind group = parse_group(group_s);
      TfKind kind = resolve_tf(tf_s, group);
      auto ranks = expand_ranks(group, parse_range(ranks_s));
      auto best = best_level_table(group, ranks, kind, spec);
      payload = render_rows(to_rows(best), cfg);
    } else if (cmd_repro->parsed()) {
      ReproReport rep = which_s == "main-tables"
                            ? reproduce_main_tables(cfg)
                            : reproduce_one_level_tables(cfg);
      payload = render_report(rep, cfg);
      code = rep.overall ? 0 : 1;
    } else if (cmd_plot->parsed()) {
      FigureSpec f = figure_spec(figure);
      auto grid = bound_grid(f.group, f.ranks, f.levels, f.kind, spec,
                             effective_jobs(cfg.jobs));
      payload = render_rows(to_rows(grid), cfg);
    }

    emit(payload, out_path);
    return code;
  } catch (const ToleranceNotReached& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DecayCheckFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
