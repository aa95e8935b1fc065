// Command-line front end: tour generation, bound reports, tour
// verification, exact-oracle comparison, parameter sweeps, SVG rendering,
// and build-time measurement.
//
// Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mstsp/bench.hpp"
#include "mstsp/bounds.hpp"
#include "mstsp/grid.hpp"
#include "mstsp/oracle.hpp"
#include "mstsp/render.hpp"
#include "mstsp/report.hpp"
#include "mstsp/tour_io.hpp"
#include "mstsp/weave.hpp"

namespace {

using nlohmann::ordered_json;

struct FormatOpt {
  std::string value = "text";
  bool structured() const { return value == "structured"; }
};

void add_format_flag(CLI::App* cmd, FormatOpt* fmt) {
  cmd->add_option("--format", fmt->value, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

int cmd_tour(int m, int n, const std::string& out_path, const FormatOpt& fmt) {
  const mstsp::Tour tour = mstsp::build_tour(mstsp::GridDims(m, n));
  const mstsp::TourSummary summary = mstsp::summarize_tour(tour);
  const std::string text = mstsp::write_tour(tour);
  if (!out_path.empty()) {
    emit(out_path, text);
  }
  if (fmt.structured()) {
    ordered_json record = mstsp::tour_summary_json(summary);
    record["nodes"] = tour.order.size();
    record["out"] = out_path.empty() ? ordered_json(nullptr) : ordered_json(out_path);
    std::cout << record.dump() << "\n";
    return 0;
  }
  if (out_path.empty()) {
    std::cout << text;
    std::cerr << mstsp::tour_summary_text(summary);
  } else {
    std::cout << mstsp::tour_summary_text(summary);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_bounds(int m, int n, const FormatOpt& fmt) {
  const mstsp::BoundsReport report = mstsp::bounds_report(mstsp::GridDims(m, n));
  if (fmt.structured()) {
    std::cout << mstsp::bounds_json(report).dump() << "\n";
  } else {
    std::cout << mstsp::bounds_text(report);
  }
  return 0;
}

int cmd_verify(const std::string& path, const FormatOpt& fmt) {
  const mstsp::Tour tour = mstsp::read_tour_file(path);
  const mstsp::ValidationResult check = mstsp::validate_tour(tour);
  if (!check.ok()) {
    if (fmt.structured()) {
      std::cout << ordered_json{{"valid", false}, {"detail", check.message}}.dump()
                << "\n";
    } else {
      std::cout << "invalid: " << check.message << "\n";
    }
    return 1;
  }
  const mstsp::SquaredLength low = mstsp::min_edge(tour);
  if (fmt.structured()) {
    std::cout << ordered_json{{"valid", true},
                              {"m", tour.dims.m()},
                              {"n", tour.dims.n()},
                              {"min_edge_sq", low.value},
                              {"min_edge", mstsp::sig12(mstsp::edge_length(low))}}
                     .dump()
              << "\n";
  } else {
    std::cout << "valid; min edge " << mstsp::format_sqrt(low) << "\n";
  }
  return 0;
}

int cmd_compare(int m, int n, int oracle_limit, const std::string& witness_out,
                const FormatOpt& fmt) {
  const mstsp::GridDims dims(m, n);
  const mstsp::Tour weave = mstsp::build_tour(dims);
  const mstsp::SquaredLength weave_sq = mstsp::min_edge(weave);
  const mstsp::BoundsReport bounds = mstsp::bounds_report(dims);
  const mstsp::OracleResult oracle = mstsp::solve_exact(dims, oracle_limit);
  if (!witness_out.empty()) {
    mstsp::write_tour_file(oracle.witness, witness_out, "oracle witness");
  }
  if (fmt.structured()) {
    std::cout << ordered_json{{"m", m},
                              {"n", n},
                              {"weave_sq", weave_sq.value},
                              {"opt_sq", oracle.opt_sq.value},
                              {"lower_sq", bounds.lower_sq.value},
                              {"upper_sq", bounds.upper_sq.value},
                              {"weave_optimal", weave_sq == oracle.opt_sq}}
                     .dump()
              << "\n";
  } else {
    std::cout << "grid " << m << "x" << n << "\n"
              << "  weave tour:  " << mstsp::format_sqrt(weave_sq) << "\n"
              << "  exact OPT:   " << mstsp::format_sqrt(oracle.opt_sq) << "\n"
              << "  upper bound: " << mstsp::format_sqrt(bounds.upper_sq) << "\n"
              << (weave_sq == oracle.opt_sq ? "  weave is optimal here\n"
                                            : "  weave is not optimal here\n");
  }
  return 0;
}

struct SweepRow {
  std::optional<mstsp::BoundsReport> bounds;
  bool hamiltonian = false;
  mstsp::SquaredLength weave_sq;
  std::int64_t opt_sq = -1;  // -1 when outside the oracle range
};

int cmd_sweep(int m_min, int m_max, int n_min, int n_max, int oracle_limit, int jobs,
              const std::string& out_path, const FormatOpt& fmt) {
  if (m_min < 1 || m_min > m_max || n_min < 1 || n_min > n_max) {
    throw std::invalid_argument("empty sweep range");
  }
  std::vector<mstsp::GridDims> grids;
  for (int m = m_min; m <= m_max; ++m) {
    for (int n = std::max(n_min, m); n <= n_max; ++n) {
      if (mstsp::GridDims(m, n).node_count() < 3) continue;
      grids.emplace_back(m, n);
    }
  }
  std::vector<SweepRow> rows(grids.size());
  const auto work = [&](std::size_t index) {
    const mstsp::GridDims& dims = grids[index];
    SweepRow row;
    row.bounds = mstsp::bounds_report(dims);
    const mstsp::Tour tour = mstsp::build_tour(dims);
    row.hamiltonian = mstsp::validate_tour(tour).ok();
    row.weave_sq = mstsp::min_edge(tour);
    if (dims.node_count() <= oracle_limit) {
      row.opt_sq = mstsp::solve_exact(dims, oracle_limit).opt_sq.value;
    }
    rows[index] = row;
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < grids.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    const int thread_count = std::min<std::size_t>(jobs, grids.size());
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int w = 0; w < thread_count; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t index = cursor.fetch_add(1);
          if (index >= grids.size()) return;
          work(index);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  std::ostringstream out;
  if (fmt.structured()) {
    for (const SweepRow& row : rows) {
      ordered_json record = mstsp::bounds_json(*row.bounds);
      record["hamiltonian"] = row.hamiltonian;
      record["weave_sq"] = row.weave_sq.value;
      record["opt_sq"] =
          row.opt_sq >= 0 ? ordered_json(row.opt_sq) : ordered_json(nullptr);
      out << record.dump() << "\n";
    }
  } else {
    out << "   m    n  lower_sq  upper_sq  opt  ham      gap        alpha    opt_sq\n";
    for (const SweepRow& row : rows) {
      const std::string opt_text = row.opt_sq >= 0 ? std::to_string(row.opt_sq) : "-";
      char line[160];
      std::snprintf(line, sizeof line, "%4d %4d %9lld %9lld  %-3s  %-3s  %9.6f  %9.6f  %8s\n",
                    row.bounds->dims.m(), row.bounds->dims.n(),
                    static_cast<long long>(row.bounds->lower_sq.value),
                    static_cast<long long>(row.bounds->upper_sq.value),
                    row.bounds->optimal ? "yes" : "no", row.hamiltonian ? "ok" : "BAD",
                    row.bounds->gap, row.bounds->alpha, opt_text.c_str());
      out << line;
    }
  }
  emit(out_path, out.str());
  return 0;
}

int cmd_render(int m, int n, const std::string& out_path, const mstsp::RenderSpec& spec) {
  const mstsp::Tour tour = mstsp::build_tour(mstsp::GridDims(m, n));
  mstsp::render_svg_file(tour, out_path, spec);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_bench(const std::vector<std::string>& size_args, const FormatOpt& fmt) {
  std::vector<mstsp::GridDims> sizes;
  for (const std::string& arg : size_args) {
    const std::size_t sep = arg.find('x');
    int m = 0;
    int n = 0;
    try {
      if (sep == std::string::npos) {
        m = n = std::stoi(arg);
      } else {
        m = std::stoi(arg.substr(0, sep));
        n = std::stoi(arg.substr(sep + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad size \"" + arg + "\", expected MxN");
    }
    sizes.emplace_back(m, n);
  }
  if (sizes.empty()) {
    sizes = {mstsp::GridDims(100, 100), mstsp::GridDims(1000, 1000)};
  }
  const std::vector<mstsp::BenchRow> rows = mstsp::run_benchmark(sizes);
  if (fmt.structured()) {
    for (const mstsp::BenchRow& row : rows) {
      std::cout << ordered_json{{"m", row.dims.m()},
                                {"n", row.dims.n()},
                                {"nodes", row.nodes},
                                {"seconds", mstsp::sig12(row.seconds)},
                                {"ns_per_node", mstsp::sig12(row.ns_per_node)}}
                       .dump()
                << "\n";
    }
  } else {
    std::cout << "       grid       nodes    seconds   ns/node\n";
    for (const mstsp::BenchRow& row : rows) {
      char line[128];
      std::snprintf(line, sizeof line, "%5dx%-5d %10lld %10.6f %9.2f\n", row.dims.m(),
                    row.dims.n(), static_cast<long long>(row.nodes), row.seconds,
                    row.ns_per_node);
      std::cout << line;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-scatter tours, bounds, and exact optima on regular grids"};
  app.require_subcommand(1);

  int m = 0;
  int n = 0;
  std::string out_path;
  std::string in_path;
  std::string witness_out;
  FormatOpt fmt;
  int oracle_limit = mstsp::kDefaultOracleLimit;
  int jobs = 1;
  int m_min = 2;
  int m_max = 8;
  int n_min = 3;
  int n_max = 12;
  mstsp::RenderSpec render_spec;
  std::vector<std::string> bench_sizes;

  std::function<int()> run;

  CLI::App* tour = app.add_subcommand("tour", "Build the weave tour for an m x n grid");
  tour->add_option("m", m, "Rows")->required();
  tour->add_option("n", n, "Columns")->required();
  tour->add_option("--out", out_path, "Write the tour file here instead of stdout");
  add_format_flag(tour, &fmt);
  tour->callback([&] { run = [&] { return cmd_tour(m, n, out_path, fmt); }; });

  CLI::App* bounds = app.add_subcommand("bounds", "Report lower/upper bounds and quality");
  bounds->add_option("m", m, "Rows")->required();
  bounds->add_option("n", n, "Columns")->required();
  add_format_flag(bounds, &fmt);
  bounds->callback([&] { run = [&] { return cmd_bounds(m, n, fmt); }; });

  CLI::App* verify = app.add_subcommand("verify", "Validate a tour file and report its min edge");
  verify->add_option("file", in_path, "Tour file")->required();
  add_format_flag(verify, &fmt);
  verify->callback([&] { run = [&] { return cmd_verify(in_path, fmt); }; });

  CLI::App* compare = app.add_subcommand("compare", "Weave tour vs exact optimum vs bounds");
  compare->add_option("m", m, "Rows")->required();
  compare->add_option("n", n, "Columns")->required();
  compare->add_option("--oracle-limit", oracle_limit, "Exact-solver node cap")
      ->check(CLI::Range(3, mstsp::kOracleHardCap))
      ->capture_default_str();
  compare->add_option("--witness-out", witness_out, "Write the oracle's tour here");
  add_format_flag(compare, &fmt);
  compare->callback(
      [&] { run = [&] { return cmd_compare(m, n, oracle_limit, witness_out, fmt); }; });

  CLI::App* sweep = app.add_subcommand("sweep", "Bound/feasibility table over dimension ranges");
  sweep->add_option("--m-min", m_min, "Smallest row count")->capture_default_str();
  sweep->add_option("--m-max", m_max, "Largest row count")->capture_default_str();
  sweep->add_option("--n-min", n_min, "Smallest column count")->capture_default_str();
  sweep->add_option("--n-max", n_max, "Largest column count")->capture_default_str();
  sweep->add_option("--oracle-limit", oracle_limit, "Exact-solver node cap (0 disables)")
      ->check(CLI::Range(0, mstsp::kOracleHardCap))
      ->capture_default_str();
  sweep->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  sweep->add_option("--out", out_path, "Write the table here instead of stdout");
  add_format_flag(sweep, &fmt);
  sweep->callback([&] {
    run = [&] {
      return cmd_sweep(m_min, m_max, n_min, n_max, oracle_limit, jobs, out_path, fmt);
    };
  });

  CLI::App* render = app.add_subcommand("render", "Render the weave tour as SVG");
  render->add_option("m", m, "Rows")->required();
  render->add_option("n", n, "Columns")->required();
  render->add_option("--out", out_path, "Output SVG path")->required();
  render->add_option("--cell-size", render_spec.cell_px, "Cell size in pixels")
      ->capture_default_str();
  render->add_option("--margin", render_spec.margin_px, "Margin in pixels")
      ->capture_default_str();
  render->callback([&] { run = [&] { return cmd_render(m, n, out_path, render_spec); }; });

  CLI::App* bench = app.add_subcommand("bench", "Time tour construction across sizes");
  bench->add_option("sizes", bench_sizes, "Sizes as MxN (default: 100x100 1000x1000)");
  add_format_flag(bench, &fmt);
  bench->callback([&] { run = [&] { return cmd_bench(bench_sizes, fmt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run();
  } catch (const mstsp::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
