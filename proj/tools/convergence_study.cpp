// One-time convergence study backing the frozen defaults in the config:
// sweeps the finite-difference step over the FD-heavy identities and the
// quadrature density over the reported integrals, and writes the max
// normalized residual for each setting. The resulting table ships in
// docs/convergence_study.csv; rerun with `convergence_study <out.csv>`.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "ig/config.hpp"

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "convergence_study.csv";
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return 1;
  }
  out << "study,parameter,suite,max_residual,scale,normalized\n";
  char buf[160];
  auto emit = [&](const char* study, double param,
                  const std::vector<ig::ResidualReport>& reports) {
    for (const auto& r : reports) {
      double n = r.scale > 0.0 ? r.max_residual() / r.scale : 0.0;
      std::snprintf(buf, sizeof buf, "%s,%.17g,%s,%.17g,%.17g,%.17g\n", study,
                    param, r.suite.c_str(), r.max_residual(), r.scale, n);
      out << buf;
    }
  };

  ig::RunConfig base = ig::default_config();
  base.jobs = 0;
  base.counts.kernel_lines = 4;
  base.counts.range_lines = 20;
  base.counts.range2_lines = 3;
  base.counts.pde_lines = 6;
  base.counts.scalar_lines = 20;
  base.counts.w_samples = 10;
  base.counts.selfconv_samples = 8;

  const double steps[] = {4e-2, 2e-2, 1e-2, 5e-3, 2.5e-3, 1.25e-3};
  for (double h : steps) {
    ig::RunConfig c = base;
    c.fd.step_y = c.fd.step_alpha = h;
    std::cerr << "fd step " << h << "...\n";
    emit("fd_step", h, ig::run_suites("kernel_and_range", c));
    emit("fd_step", h, ig::run_suites("main_pde", c));
    emit("fd_step", h, ig::run_suites("w_construction", c));
  }

  const int densities[] = {4, 6, 8, 12, 16};
  for (int n : densities) {
    ig::RunConfig c = base;
    c.quad.points_per_unit = n;
    std::cerr << "quadrature density " << n << "...\n";
    emit("quad_density", n, ig::run_suites("self_convergence", c));
    emit("quad_density", n, ig::run_suites("conjectures", c));
  }

  std::cerr << "wrote " << out_path << '\n';
  return 0;
}
