#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sjd/domains.hpp"

using namespace sjd;

namespace {
std::mt19937_64 rng(20240901ull);
double uni(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}
complexd cbox(double r) { return {uni(-r, r), uni(-r, r)}; }
complexd cdisk(double rmax) {
  return std::polar(std::sqrt(uni(0, rmax * rmax)), uni(0, 2 * M_PI));
}
}  // namespace

TEST_CASE("cayley transform, frozen value and round trips") {
  const DiskPoint w = cayley_to_disk(UpperHalfPlanePoint{{1.0, 1.0}});
  CHECK(std::abs(w.w - complexd{0.2, -0.4}) < 1e-15);
  CHECK(std::abs(w.w) < 1.0);

  // i maps to the disk center.
  CHECK(std::abs(cayley_to_disk(UpperHalfPlanePoint{{0.0, 1.0}}).w) < 1e-15);

  for (int i = 0; i < 500; ++i) {
    const complexd v{uni(-5, 5), uni(0.01, 5)};
    const complexd back = cayley_to_uhp(cayley_to_disk(UpperHalfPlanePoint{v})).v;
    CHECK(std::abs(back - v) < 1e-12);
    const complexd w0 = cdisk(0.97);
    CHECK(std::abs(cayley_to_disk(cayley_to_uhp(DiskPoint{w0})).w - w0) < 1e-12);
  }
}

TEST_CASE("partial cayley transform") {
  // v = i is the base center; the fiber map reduces to the identity there.
  const SJDiskPoint p = partial_cayley(SJUHPPoint{{1.0, 2.0}, {0.0, 1.0}});
  CHECK(std::abs(p.w.w) < 1e-15);
  CHECK(std::abs(p.z - complexd{1.0, 2.0}) < 1e-15);

  for (int i = 0; i < 500; ++i) {
    const SJUHPPoint q{cbox(3.0), complexd{uni(-4, 4), uni(0.02, 4)}};
    const SJUHPPoint back = partial_cayley_inv(partial_cayley(q));
    CHECK(std::abs(back.u - q.u) < 1e-12);
    CHECK(std::abs(back.v.v - q.v.v) < 1e-12);
  }
}

TEST_CASE("FC transform, frozen value and involution") {
  const FCPoint p{complexd{0.5, 0.25}, complexd{0.3, -0.4}};
  const SJDiskPoint image = fc_forward(p);
  CHECK(std::abs(image.z - complexd{0.45, 0.525}) < 1e-15);
  CHECK(std::abs(image.w.w - p.w.w) < 1e-15);
  CHECK(std::abs(fc_inverse(image).eta - p.eta) < 1e-15);

  // w = 0 makes the transform trivial.
  CHECK(std::abs(fc_forward(FCPoint{{1.0, -2.0}, {0.0, 0.0}}).z -
                 complexd{1.0, -2.0}) < 1e-15);

  for (int i = 0; i < 500; ++i) {
    const FCPoint q{cbox(3.0), cdisk(0.95)};
    CHECK(std::abs(fc_inverse(fc_forward(q)).eta - q.eta) < 1e-12);
    const SJDiskPoint r{cbox(3.0), cdisk(0.95)};
    const SJDiskPoint back = fc_forward(fc_inverse(r));
    CHECK(std::abs(back.z - r.z) < 1e-12);
  }
}

TEST_CASE("FC1 transform on the half-plane chart") {
  const complexd eta{0.5, 0.25};
  const SJUHPPoint p = fc1_forward(eta, UpperHalfPlanePoint{{1.0, 2.0}});
  CHECK(std::abs(p.u - complexd{0.75, 0.5}) < 1e-15);
  CHECK(std::abs(fc1_inverse(p) - eta) < 1e-14);

  // Commuting diagram with the disk-chart FC transform.
  for (int i = 0; i < 500; ++i) {
    const complexd e = cbox(2.0);
    const UpperHalfPlanePoint v{complexd{uni(-3, 3), uni(0.05, 3)}};
    const SJDiskPoint via_uhp = partial_cayley(fc1_forward(e, v));
    const SJDiskPoint via_disk = fc_forward(FCPoint{e, cayley_to_disk(v)});
    CHECK(std::abs(via_uhp.z - via_disk.z) < 1e-12);
    CHECK(std::abs(via_uhp.w.w - via_disk.w.w) < 1e-12);
  }
}

TEST_CASE("EZ coordinates") {
  // u = p v + q with (x, y, p, q) = (1, 2, 0.5, -0.3).
  const SJUHPPoint p = ez_compose(EZCoordinates{1.0, 2.0, 0.5, -0.3});
  CHECK(std::abs(p.v.v - complexd{1.0, 2.0}) < 1e-15);
  CHECK(std::abs(p.u - complexd{0.2, 1.0}) < 1e-15);
  const EZCoordinates c = ez_decompose(p);
  CHECK(c.x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.y == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(c.p == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.q == doctest::Approx(-0.3).epsilon(1e-14));

  for (int i = 0; i < 500; ++i) {
    const SJUHPPoint q{cbox(3.0), complexd{uni(-4, 4), uni(0.02, 4)}};
    const SJUHPPoint back = ez_compose(ez_decompose(q));
    CHECK(std::abs(back.u - q.u) < 1e-12);
    CHECK(std::abs(back.v.v - q.v.v) < 1e-12);
  }
}

TEST_CASE("domain boundaries are rejected") {
  CHECK_THROWS_AS(DiskPoint(complexd(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(DiskPoint(complexd(0.8, 0.7)), DomainError);
  CHECK_THROWS_AS(UpperHalfPlanePoint(complexd(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(UpperHalfPlanePoint(complexd(0.0, -1.0)), DomainError);
  CHECK_THROWS_AS(EZCoordinates(0.0, 0.0, 0.0, 0.0), DomainError);
  CHECK_NOTHROW(DiskPoint(complexd(0.99, 0.0)));
  CHECK_NOTHROW(UpperHalfPlanePoint(complexd(-5.0, 1e-6)));
}
