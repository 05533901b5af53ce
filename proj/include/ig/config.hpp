#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ig/verify.hpp"

namespace ig {

// Field family driving the suites.
struct FieldConfig {
  std::string profile = "bump";  // "bump" | "poly" | "zero"
  double radius = 1.0;
  double amplitude = 1.0;
  // Translation applied to the radial pair. Nonzero by default: a centered
  // radial field makes several integrands vanish identically by symmetry,
  // which would turn their residual scales into 0 and the checks vacuous.
  Vec3 center{0.2, -0.15, 0.1};
};

// Per-suite sample counts.
struct SuiteCounts {
  int lemma31_planes = 20;
  int lemma31_z = 3;
  int kernel_lines = 67;  // x3 potentials ~ 200 line evaluations
  int range_lines = 50;
  int range2_lines = 6;
  int w_samples = 50;
  int pde_lines = 20;
  int scalar_lines = 50;
  int conj_lines = 100;
  int conj_planes = 30;
  int pointwise_points = 1000;
  int selfconv_samples = 12;
};

// Frozen per-suite tolerances (relative to each suite's scale).
struct Tolerances {
  double kernel = 1e-8;
  double range = 1e-5;
  double range2 = 1e-2;
  double lemma31 = 1e-7;
  double w_construction = 1e-6;
  double cor35 = 1e-4;
  double main_pde = 1e-4;
  double scalar = 1e-6;
  double conjectures = 1e-7;
  double pointwise = 1e-5;
  double self_convergence = 1e-9;
};

struct RunConfig {
  FieldConfig field;
  QuadratureSpec quad;
  FDSpec fd;
  SuiteCounts counts;
  Tolerances tol;
  std::uint64_t seed = 1;
  int jobs = 1;
};

RunConfig default_config();

// JSON round trip; load(save(c)) == c field for field.
std::string config_to_json(const RunConfig& c);
RunConfig config_from_json(const std::string& text);
RunConfig load_config(const std::string& path);
void save_config(const RunConfig& c, const std::string& path);

// FNV-1a hash of the canonical JSON dump, stamped into reports.
std::uint64_t config_hash(const RunConfig& c);

// Builds the configured (v, p) pair; throws std::invalid_argument for an
// unknown profile name.
void make_solution_pair(const RunConfig& c, SmoothField& v, SmoothField& p);
RadialProfile make_profile(const FieldConfig& f);

// The canonical suite registry. run_suites throws std::invalid_argument for
// an unknown name; "all" runs everything.
const std::vector<std::string>& suite_names();
std::vector<ResidualReport> run_suites(const std::string& name,
                                       const RunConfig& c);

// CSV report: one header comment line (# config=<hash> seed=<seed>), one
// header row, then rows suite,sample_id,coord_1..coord_4,residual,scale,
// tolerance,pass with %.17g numbers and '\n' endings.
void write_csv(std::ostream& os, const std::vector<ResidualReport>& reports,
               const RunConfig& c);
void write_csv_file(const std::string& path,
                    const std::vector<ResidualReport>& reports,
                    const RunConfig& c);

// JSON summary: suite -> {pass, max_residual, scale, tolerance, samples,
// restriction}, plus overall verdict and runtime.
std::string summary_json(const std::vector<ResidualReport>& reports,
                         double runtime_seconds);

bool all_pass(const std::vector<ResidualReport>& reports);

}  // namespace ig
