#include <doctest.h>

#include <cmath>
#include <random>

#include "ig/geometry.hpp"
#include "ig/sampling.hpp"

using namespace ig;

TEST_CASE("chart from point and direction") {
  // line through (0,0,1) with direction (1,1,1) crosses z=0 at (-1,-1,0)
  LineNH m = chart_from_point_direction({0.0, 0.0, 1.0}, {1.0, 1.0, 1.0});
  CHECK(m.y1 == doctest::Approx(-1.0));
  CHECK(m.y2 == doctest::Approx(-1.0));
  CHECK(m.a1 == doctest::Approx(1.0));
  CHECK(m.a2 == doctest::Approx(1.0));
  CHECK_THROWS_AS(chart_from_point_direction({0, 0, 0}, {1.0, 2.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("k factors") {
  LineNH m{0.0, 0.0, 3.0, 4.0};
  auto kf = k_factors(m);
  CHECK(kf.k == doctest::Approx(std::sqrt(26.0)));
  CHECK(kf.k1 == doctest::Approx(std::sqrt(10.0)));
  CHECK(kf.k2 == doctest::Approx(std::sqrt(17.0)));
  CHECK(norm(m.unit_direction()) == doctest::Approx(1.0));
}

TEST_CASE("clip line to ball") {
  double t0, t1;
  LineNH axis{0.0, 0.0, 0.0, 0.0};
  REQUIRE(clip_line_to_ball(axis, 2.0, t0, t1));
  CHECK(t0 == doctest::Approx(-2.0));
  CHECK(t1 == doctest::Approx(2.0));
  LineNH far{10.0, 0.0, 0.0, 0.0};
  CHECK_FALSE(clip_line_to_ball(far, 2.0, t0, t1));
  // slanted line: endpoints must sit on the sphere
  LineNH m{0.3, -0.2, 0.7, -0.4};
  REQUIRE(clip_line_to_ball(m, 1.0, t0, t1));
  CHECK(norm(m.point(t0)) == doctest::Approx(1.0));
  CHECK(norm(m.point(t1)) == doctest::Approx(1.0));
}

TEST_CASE("half-plane frames: orthonormality, orientation, interior") {
  auto lines = sample_lines(7, 50, {0.8, 1.0});
  for (const LineNH& m : lines) {
    for (HalfPlane hp : {HalfPlane::H1, HalfPlane::H2}) {
      HalfPlaneFrame f(m, hp);
      CHECK(norm(f.along()) == doctest::Approx(1.0));
      CHECK(norm(f.interior()) == doctest::Approx(1.0));
      CHECK(norm(f.normal()) == doctest::Approx(1.0));
      CHECK(std::abs(dot(f.along(), f.interior())) < 1e-12);
      CHECK(std::abs(dot(f.along(), f.normal())) < 1e-12);
      // (e_m, nu_m, nu_H) positively oriented
      CHECK(det3(f.along(), f.interior(), f.normal()) ==
            doctest::Approx(1.0).epsilon(1e-10));
      // H1 is parallel to the x1-axis, H2 to the x2-axis
      Vec3 axis = hp == HalfPlane::H1 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
      CHECK(std::abs(dot(f.normal(), axis)) < 1e-12);
      // interior points into {x_i > y_i + a_i x3}
      Vec3 q = f.point(0.5, 0.0);
      if (hp == HalfPlane::H2)
        CHECK(q.y > m.y2 + m.a2 * q.z);
      else
        CHECK(q.x > m.y1 + m.a1 * q.z);
      // the boundary of the half-plane is the line itself
      Vec3 b = f.point(0.0, 0.7);
      CHECK(b.x == doctest::Approx(m.point(b.z).x));
      CHECK(b.y == doctest::Approx(m.point(b.z).y));
    }
  }
}

TEST_CASE("plane frame basis") {
  PlaneFrame f({0.36, -0.48, 0.8}, 0.3);
  CHECK(norm(f.normal()) == doctest::Approx(1.0));
  CHECK(std::abs(dot(f.basis1(), f.basis2())) < 1e-14);
  CHECK(std::abs(dot(f.basis1(), f.normal())) < 1e-14);
  CHECK(std::abs(dot(f.basis2(), f.normal())) < 1e-14);
  Vec3 q = f.point(1.3, -0.4);
  CHECK(dot(q, f.normal()) == doctest::Approx(0.3));
}

TEST_CASE("samplers are deterministic and parallel_for is order-safe") {
  auto a = sample_lines(42, 20, {0.8, 1.0});
  auto b = sample_lines(42, 20, {0.8, 1.0});
  for (int i = 0; i < 20; ++i) {
    CHECK(a[i].y1 == b[i].y1);
    CHECK(a[i].a2 == b[i].a2);
  }
  std::vector<double> serial(100), parallel(100);
  parallel_for(100, 1, [&](int i) { serial[i] = std::sin(i); });
  parallel_for(100, 7, [&](int i) { parallel[i] = std::sin(i); });
  CHECK(serial == parallel);
}

TEST_CASE("sampled points stay in the ball") {
  for (const Vec3& p : sample_points(3, 200, 0.9)) CHECK(norm(p) <= 0.9);
}
