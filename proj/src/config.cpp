#include "ig/config.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ig {

using nlohmann::json;

namespace {

json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

json to_json(const RunConfig& c) {
  json j;
  j["field"] = {{"profile", c.field.profile},
                {"radius", c.field.radius},
                {"amplitude", c.field.amplitude},
                {"center", vec3_to_json(c.field.center)}};
  j["quadrature"] = {{"points_per_unit", c.quad.points_per_unit},
                     {"order", c.quad.order}};
  j["fd"] = {{"step_y", c.fd.step_y},
             {"step_alpha", c.fd.step_alpha},
             {"order", c.fd.order},
             {"richardson", c.fd.richardson}};
  j["counts"] = {{"lemma31_planes", c.counts.lemma31_planes},
                 {"lemma31_z", c.counts.lemma31_z},
                 {"kernel_lines", c.counts.kernel_lines},
                 {"range_lines", c.counts.range_lines},
                 {"range2_lines", c.counts.range2_lines},
                 {"w_samples", c.counts.w_samples},
                 {"pde_lines", c.counts.pde_lines},
                 {"scalar_lines", c.counts.scalar_lines},
                 {"conj_lines", c.counts.conj_lines},
                 {"conj_planes", c.counts.conj_planes},
                 {"pointwise_points", c.counts.pointwise_points},
                 {"selfconv_samples", c.counts.selfconv_samples}};
  j["tolerances"] = {{"kernel", c.tol.kernel},
                     {"range", c.tol.range},
                     {"range2", c.tol.range2},
                     {"lemma31", c.tol.lemma31},
                     {"w_construction", c.tol.w_construction},
                     {"cor35", c.tol.cor35},
                     {"main_pde", c.tol.main_pde},
                     {"scalar", c.tol.scalar},
                     {"conjectures", c.tol.conjectures},
                     {"pointwise", c.tol.pointwise},
                     {"self_convergence", c.tol.self_convergence}};
  j["seed"] = c.seed;
  j["jobs"] = c.jobs;
  return j;
}

template <typename T>
void opt(const json& j, const char* key, T& field) {
  if (j.contains(key)) field = j.at(key).get<T>();
}

RunConfig from_json(const json& j) {
  RunConfig c;
  if (j.contains("field")) {
    const json& f = j.at("field");
    opt(f, "profile", c.field.profile);
    opt(f, "radius", c.field.radius);
    opt(f, "amplitude", c.field.amplitude);
    if (f.contains("center")) c.field.center = vec3_from_json(f.at("center"));
  }
  if (j.contains("quadrature")) {
    const json& q = j.at("quadrature");
    opt(q, "points_per_unit", c.quad.points_per_unit);
    opt(q, "order", c.quad.order);
  }
  if (j.contains("fd")) {
    const json& f = j.at("fd");
    opt(f, "step_y", c.fd.step_y);
    opt(f, "step_alpha", c.fd.step_alpha);
    opt(f, "order", c.fd.order);
    opt(f, "richardson", c.fd.richardson);
  }
  if (j.contains("counts")) {
    const json& n = j.at("counts");
    opt(n, "lemma31_planes", c.counts.lemma31_planes);
    opt(n, "lemma31_z", c.counts.lemma31_z);
    opt(n, "kernel_lines", c.counts.kernel_lines);
    opt(n, "range_lines", c.counts.range_lines);
    opt(n, "range2_lines", c.counts.range2_lines);
    opt(n, "w_samples", c.counts.w_samples);
    opt(n, "pde_lines", c.counts.pde_lines);
    opt(n, "scalar_lines", c.counts.scalar_lines);
    opt(n, "conj_lines", c.counts.conj_lines);
    opt(n, "conj_planes", c.counts.conj_planes);
    opt(n, "pointwise_points", c.counts.pointwise_points);
    opt(n, "selfconv_samples", c.counts.selfconv_samples);
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    opt(t, "kernel", c.tol.kernel);
    opt(t, "range", c.tol.range);
    opt(t, "range2", c.tol.range2);
    opt(t, "lemma31", c.tol.lemma31);
    opt(t, "w_construction", c.tol.w_construction);
    opt(t, "cor35", c.tol.cor35);
    opt(t, "main_pde", c.tol.main_pde);
    opt(t, "scalar", c.tol.scalar);
    opt(t, "conjectures", c.tol.conjectures);
    opt(t, "pointwise", c.tol.pointwise);
    opt(t, "self_convergence", c.tol.self_convergence);
  }
  opt(j, "seed", c.seed);
  opt(j, "jobs", c.jobs);
  return c;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

RunConfig default_config() { return RunConfig{}; }

std::string config_to_json(const RunConfig& c) { return to_json(c).dump(2); }

RunConfig config_from_json(const std::string& text) {
  return from_json(json::parse(text));
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  in >> j;
  return from_json(j);
}

void save_config(const RunConfig& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write config file: " + path);
  out << config_to_json(c) << '\n';
}

std::uint64_t config_hash(const RunConfig& c) {
  // jobs is execution policy, not part of what determines the numbers;
  // reports must be byte-identical across worker counts, hash included
  RunConfig canonical = c;
  canonical.jobs = 1;
  std::string s = to_json(canonical).dump();  // sorted keys, no spacing
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

RadialProfile make_profile(const FieldConfig& f) {
  if (f.profile == "bump") return make_bump_profile(f.radius, f.amplitude);
  if (f.profile == "poly") return make_poly_profile(f.radius, f.amplitude);
  if (f.profile == "zero") return make_bump_profile(f.radius, 0.0);
  throw std::invalid_argument("unknown profile: " + f.profile);
}

void make_solution_pair(const RunConfig& c, SmoothField& v, SmoothField& p) {
  RadialProfile psi = make_profile(c.field);
  v = translate(radial_velocity(psi), c.field.center);
  p = translate(radial_pressure(psi), c.field.center);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "lemma31",          "kernel_and_range", "w_construction", "main_pde",
      "conjectures",      "pointwise",        "self_convergence"};
  return names;
}

std::vector<ResidualReport> run_suites(const std::string& name,
                                       const RunConfig& c) {
  if (name == "all") {
    std::vector<ResidualReport> out;
    for (const auto& n : suite_names()) {
      auto part = run_suites(n, c);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }

  VerifyContext cx{c.quad, c.fd, c.jobs};
  RadialProfile psi = make_profile(c.field);
  SmoothField v = zero_field(1), p = zero_field(0);
  make_solution_pair(c, v, p);

  if (name == "lemma31")
    return suite_lemma31(v, p, c.counts.lemma31_planes, c.counts.lemma31_z,
                         c.seed, cx, c.tol.lemma31);
  if (name == "kernel_and_range")
    return suite_kernel_and_range(psi, c.counts.kernel_lines,
                                  c.counts.range_lines, c.seed, cx,
                                  c.tol.kernel, c.tol.range, c.tol.range2,
                                  c.counts.range2_lines);
  if (name == "w_construction")
    return suite_w_construction(v, p, c.counts.w_samples, c.seed, cx,
                                c.tol.w_construction, c.tol.cor35);
  if (name == "main_pde")
    return suite_main_pde(v, p, c.counts.pde_lines, c.counts.scalar_lines,
                          c.seed, cx, c.tol.main_pde, c.tol.scalar);
  if (name == "conjectures")
    return suite_conjectures_radial(psi, c.field.center, c.counts.conj_lines,
                                    c.counts.conj_planes, c.seed, cx,
                                    c.tol.conjectures);
  if (name == "pointwise")
    return suite_pointwise_pdes(v, p, c.counts.pointwise_points, c.seed, cx,
                                c.tol.pointwise);
  if (name == "self_convergence")
    return suite_self_convergence(v, p, c.counts.selfconv_samples, c.seed, cx,
                                  c.tol.self_convergence);
  throw std::invalid_argument("unknown suite: " + name);
}

void write_csv(std::ostream& os, const std::vector<ResidualReport>& reports,
               const RunConfig& c) {
  os << "# config=" << std::hex << config_hash(c) << std::dec
     << " seed=" << c.seed << "\n";
  os << "suite,sample_id,coord_1,coord_2,coord_3,coord_4,residual,scale,"
        "tolerance,pass\n";
  for (const auto& rep : reports) {
    bool p = rep.pass();
    for (const auto& s : rep.samples) {
      os << rep.suite << ',' << s.id;
      for (double cc : s.coords) os << ',' << fmt17(cc);
      os << ',' << fmt17(s.residual) << ',' << fmt17(rep.scale) << ','
         << fmt17(rep.tolerance) << ',' << (p ? 1 : 0) << '\n';
    }
  }
}

void write_csv_file(const std::string& path,
                    const std::vector<ResidualReport>& reports,
                    const RunConfig& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write report file: " + path);
  write_csv(out, reports, c);
}

std::string summary_json(const std::vector<ResidualReport>& reports,
                         double runtime_seconds) {
  json j;
  j["runtime_seconds"] = runtime_seconds;
  j["pass"] = all_pass(reports);
  json suites = json::object();
  for (const auto& rep : reports) {
    suites[rep.suite] = {{"pass", rep.pass()},
                         {"max_residual", rep.max_residual()},
                         {"scale", rep.scale},
                         {"tolerance", rep.tolerance},
                         {"samples", rep.samples.size()},
                         {"restriction", rep.restriction}};
  }
  j["suites"] = suites;
  return j.dump(2);
}

bool all_pass(const std::vector<ResidualReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

}  // namespace ig
