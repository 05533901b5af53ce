#include "ig/sampling.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace ig {

std::vector<LineNH> sample_lines(std::uint64_t seed, int n, const LineBox& box) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uy(-box.y_max, box.y_max);
  std::uniform_real_distribution<double> ua(-box.alpha_max, box.alpha_max);
  std::vector<LineNH> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    double y1 = uy(rng), y2 = uy(rng), a1 = ua(rng), a2 = ua(rng);
    out.push_back({y1, y2, a1, a2});
  }
  return out;
}

std::vector<PlaneFrame> sample_planes(std::uint64_t seed, int n, double d_max) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> ud(-d_max, d_max);
  std::vector<PlaneFrame> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec3 nu{gauss(rng), gauss(rng), gauss(rng)};
    while (norm(nu) < 1e-6) nu = {gauss(rng), gauss(rng), gauss(rng)};
    out.emplace_back(normalized(nu), ud(rng));
  }
  return out;
}

std::vector<Vec3> sample_points(std::uint64_t seed, int n, double r_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-r_max, r_max);
  std::vector<Vec3> out;
  out.reserve(n);
  while ((int)out.size() < n) {
    Vec3 x{u(rng), u(rng), u(rng)};
    if (norm2(x) <= r_max * r_max) out.push_back(x);
  }
  return out;
}

std::vector<double> sample_uniform(std::uint64_t seed, int n, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> out(n);
  for (double& x : out) x = u(rng);
  return out;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = (int)std::thread::hardware_concurrency();
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : workers) t.join();
}

}  // namespace ig
