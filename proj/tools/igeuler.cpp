// igeuler: run verification suites or sample integral transforms over grids.
//
//   igeuler suite <name|all> --config <path> --out <path> [--seed N] [--jobs N]
//   igeuler sample <w|IQ0|xray|J> --grid <spec> [--config <path>] --out <path>
//
// Grid spec: four comma-separated axes "lo:hi:n" over the line chart
// (y1,y2,a1,a2); for J the axes are read as (theta,phi,offset,ignored) with
// plane normal (sin t cos p, sin t sin p, cos t). Exit codes: 0 all pass,
// 1 residuals exceed tolerance, 2 usage error, 3 numerical failure.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "ig/config.hpp"

namespace {

struct Axis {
  double lo = 0.0, hi = 0.0;
  int n = 1;
};

std::vector<Axis> parse_grid(const std::string& spec) {
  std::vector<Axis> axes;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    Axis a;
    if (std::sscanf(part.c_str(), "%lf:%lf:%d", &a.lo, &a.hi, &a.n) != 3)
      throw std::invalid_argument("bad grid axis: " + part);
    if (a.n < 1) a.n = 1;
    axes.push_back(a);
  }
  if (axes.size() != 4)
    throw std::invalid_argument("grid needs exactly 4 axes lo:hi:n");
  return axes;
}

double axis_value(const Axis& a, int i) {
  if (a.n == 1) return a.lo;
  return a.lo + (a.hi - a.lo) * i / (a.n - 1);
}

int cmd_suite(const std::string& name, ig::RunConfig cfg,
              const std::string& out_path) {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = ig::run_suites(name, cfg);
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  ig::write_csv_file(out_path, reports, cfg);
  std::string summary = ig::summary_json(reports, dt);
  std::ofstream(out_path + ".summary.json", std::ios::binary) << summary << '\n';
  std::cout << summary << '\n';
  return ig::all_pass(reports) ? 0 : 1;
}

int cmd_sample(const std::string& object, const ig::RunConfig& cfg,
               const std::string& grid_spec, const std::string& out_path) {
  auto axes = parse_grid(grid_spec);
  ig::SmoothField v = ig::zero_field(1), p = ig::zero_field(0);
  ig::make_solution_pair(cfg, v, p);

  std::function<double(const std::array<double, 4>&)> eval;
  if (object == "w") {
    eval = [&, w = ig::make_w_function(v, cfg.quad, ig::HalfPlane::H2, false)](
               const std::array<double, 4>& c) {
      return w(ig::LineNH{c[0], c[1], c[2], c[3]});
    };
  } else if (object == "IQ0") {
    eval = [&](const std::array<double, 4>& c) {
      return ig::iq_zero_lineintegral(v, p, ig::LineNH{c[0], c[1], c[2], c[3]},
                                      cfg.quad);
    };
  } else if (object == "xray") {
    eval = [&](const std::array<double, 4>& c) {
      return ig::xray(p, ig::LineNH{c[0], c[1], c[2], c[3]}, cfg.quad);
    };
  } else if (object == "J") {
    ig::SmoothField q0 = ig::q_zero(v, p);
    eval = [&, q0](const std::array<double, 4>& c) {
      ig::Vec3 nu{std::sin(c[0]) * std::cos(c[1]),
                  std::sin(c[0]) * std::sin(c[1]), std::cos(c[0])};
      if (ig::norm(nu) < 1e-12) nu = {0.0, 0.0, 1.0};
      return ig::radon_plane(q0, ig::PlaneFrame(nu, c[2]), cfg.quad);
    };
  } else {
    throw std::invalid_argument("unknown sample object: " + object);
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write: " + out_path);
  out << "# config=" << std::hex << ig::config_hash(cfg) << std::dec
      << " seed=" << cfg.seed << "\n";
  out << "suite,sample_id,coord_1,coord_2,coord_3,coord_4,residual,scale,"
         "tolerance,pass\n";
  char buf[40];
  int id = 0;
  for (int i0 = 0; i0 < axes[0].n; ++i0)
    for (int i1 = 0; i1 < axes[1].n; ++i1)
      for (int i2 = 0; i2 < axes[2].n; ++i2)
        for (int i3 = 0; i3 < axes[3].n; ++i3) {
          std::array<double, 4> c = {axis_value(axes[0], i0),
                                     axis_value(axes[1], i1),
                                     axis_value(axes[2], i2),
                                     axis_value(axes[3], i3)};
          double val = eval(c);
          out << "sample_" << object << ',' << id++;
          for (double x : c) {
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out << ',' << buf;
          }
          std::snprintf(buf, sizeof buf, "%.17g", val);
          out << ',' << buf << ",1,0,1\n";
        }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral-geometry toolkit for steady Euler flows"};
  app.require_subcommand(1);

  std::string suite_name, sample_object, config_path, out_path = "report.csv";
  std::string grid_spec;
  std::int64_t seed_override = -1;
  int jobs_override = 0;

  CLI::App* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("name", suite_name, "suite name or 'all'")->required();
  suite->add_option("--config", config_path, "JSON config file");
  suite->add_option("--out", out_path, "CSV report path");
  suite->add_option("--seed", seed_override, "override RNG seed");
  suite->add_option("--jobs", jobs_override, "worker threads (0 = auto)");

  CLI::App* sample = app.add_subcommand("sample", "evaluate a transform on a grid");
  sample->add_option("object", sample_object, "one of w, IQ0, xray, J")->required();
  sample->add_option("--grid", grid_spec, "four axes lo:hi:n, comma separated")
      ->required();
  sample->add_option("--config", config_path, "JSON config file");
  sample->add_option("--out", out_path, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    ig::RunConfig cfg =
        config_path.empty() ? ig::default_config() : ig::load_config(config_path);
    if (suite->parsed()) {
      if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
      if (jobs_override != 0) cfg.jobs = jobs_override;
      bool known = suite_name == "all";
      for (const auto& n : ig::suite_names()) known = known || n == suite_name;
      if (!known) {
        std::cerr << "unknown suite: " << suite_name << '\n';
        return 2;
      }
      return cmd_suite(suite_name, cfg, out_path);
    }
    return cmd_sample(sample_object, cfg, grid_spec, out_path);
  } catch (const ig::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what()
              << " (achieved error " << e.achieved_error() << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
