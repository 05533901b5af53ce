#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ig/fields.hpp"
#include "ig/operators.hpp"
#include "ig/sampling.hpp"
#include "ig/transforms.hpp"

namespace ig {

struct SampleResult {
  int id = 0;
  std::array<double, 4> coords{};  // line chart coords, plane (nx,ny,nz,d), or point
  double residual = 0.0;
};

// One identity checked on one sample set. pass <=> max residual <= tol * scale.
struct ResidualReport {
  std::string suite;
  std::uint64_t seed = 0;
  double scale = 0.0;
  double tolerance = 0.0;
  std::string restriction;  // e.g. the solution-family limitation
  std::vector<SampleResult> samples;

  double max_residual() const;
  bool pass() const { return max_residual() <= tolerance * scale; }
};

// Shared numerical policy for a suite run.
struct VerifyContext {
  QuadratureSpec quad{};
  FDSpec fd{};
  int jobs = 0;
};

// Lemma: plane integrals int_L <v,z><v,nu_L> dsigma vanish for solutions.
std::vector<ResidualReport> suite_lemma31(const SmoothField& v,
                                          const SmoothField& p, int n_planes,
                                          int n_z, std::uint64_t seed,
                                          const VerifyContext& cx,
                                          double tolerance);

// (a) I(d_s u) = 0 for random potentials; (b) L^{h+1} phi = 0 for X-ray
// images of random rank-h fields. tolerance_range2 applies to the optional
// rank-2 (L^3) part; pass a non-positive count to skip it.
std::vector<ResidualReport> suite_kernel_and_range(
    const RadialProfile& psi, int n_kernel_lines, int n_range_lines,
    std::uint64_t seed, const VerifyContext& cx, double tol_kernel,
    double tol_range, double tol_range2, int n_range2_lines);

// H1/H2 agreement, ray independence of w0, w(.,.,0,0) = w0, IF = 0, and the
// mixed-derivative formulas at the origin line.
std::vector<ResidualReport> suite_w_construction(const SmoothField& v,
                                                 const SmoothField& p,
                                                 int n_samples,
                                                 std::uint64_t seed,
                                                 const VerifyContext& cx,
                                                 double tol_construction,
                                                 double tol_cor35);

// P^2 w + 4 Delta_M w = 0, P I(v x v) = 2 Delta_M w, and P(I p) = 0.
std::vector<ResidualReport> suite_main_pde(const SmoothField& v,
                                           const SmoothField& p, int n_lines,
                                           int n_scalar_lines,
                                           std::uint64_t seed,
                                           const VerifyContext& cx,
                                           double tol_pde, double tol_scalar);

// w = 0, IQ0 = 0 on lines, JQ0 = 0 on planes for the radial family.
std::vector<ResidualReport> suite_conjectures_radial(
    const RadialProfile& psi, const Vec3& center, int n_lines, int n_planes,
    std::uint64_t seed, const VerifyContext& cx, double tolerance);

// Pointwise PDE systems for the components of Q0 plus Psi(v) = 0.
std::vector<ResidualReport> suite_pointwise_pdes(const SmoothField& v,
                                                 const SmoothField& p,
                                                 int n_points,
                                                 std::uint64_t seed,
                                                 const VerifyContext& cx,
                                                 double tolerance);

// Order-doubling self convergence of every transform the suites report.
std::vector<ResidualReport> suite_self_convergence(const SmoothField& v,
                                                   const SmoothField& p,
                                                   int n_samples,
                                                   std::uint64_t seed,
                                                   const VerifyContext& cx,
                                                   double tolerance);

}  // namespace ig
