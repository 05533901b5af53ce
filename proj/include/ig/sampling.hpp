#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ig/geometry.hpp"

namespace ig {

// Deterministic sample generators. All draws come from a single seeded
// mt19937_64 in a fixed order, so a (seed, count) pair always reproduces the
// same sample set.

struct LineBox {
  double y_max = 0.8;
  double alpha_max = 1.0;
};

std::vector<LineNH> sample_lines(std::uint64_t seed, int n, const LineBox& box);

// Random planes with uniformly random unit normal and offset in [-d_max, d_max].
std::vector<PlaneFrame> sample_planes(std::uint64_t seed, int n, double d_max);

// Random points in the ball of radius r_max.
std::vector<Vec3> sample_points(std::uint64_t seed, int n, double r_max);

// Uniform doubles, for ad-hoc coefficient draws.
std::vector<double> sample_uniform(std::uint64_t seed, int n, double lo, double hi);

// Run fn(0..n-1) on `jobs` workers (jobs <= 0: hardware concurrency).
// Deterministic as long as fn(i) writes only to slot i.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace ig
