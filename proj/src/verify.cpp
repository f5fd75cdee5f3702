#include "sjd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sjd {

namespace {

constexpr complexd kI{0.0, 1.0};

struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen);
  }

  complexd box(double r) { return {uniform(-r, r), uniform(-r, r)}; }

  complexd disk(double rmax) {
    const double r = std::sqrt(uniform(0.0, rmax * rmax));
    const double phi = uniform(0.0, 2.0 * M_PI);
    return std::polar(r, phi);
  }

  SU11Element su11(double bmax) {
    const complexd b = box(bmax);
    const double phase = uniform(0.0, 2.0 * M_PI);
    const complexd a = std::polar(std::sqrt(1.0 + std::norm(b)), phase);
    return SU11Element{a, b};
  }

  JacobiElement jacobi(double bmax, double amax) {
    return JacobiElement{su11(bmax), box(amax), uniform(-1.0, 1.0)};
  }

  SL2RElement sl2r(double r) {
    const double a = uniform(0.5, 0.5 + r), b = uniform(-r, r),
                 c = uniform(-r, r);
    return SL2RElement{a, b, c, (1.0 + b * c) / a};
  }

  // Hermitian coefficient set in the oscillatory regime (delta > 0).
  HamiltonianCoeffs oscillatory() {
    const double eps_0 = uniform(1.5, 3.0);
    const complexd eps_plus = disk(0.45 * eps_0);
    return HamiltonianCoeffs{box(1.0), eps_0, eps_plus};
  }
};

double max_abs(const RealTwoForm& a, const RealTwoForm& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m = std::max(m, std::abs(a.m[i][j] - b.m[i][j]));
  return m;
}

double dist(const SJDiskPoint& a, const SJDiskPoint& b) {
  return std::max(std::abs(a.z - b.z), std::abs(a.w.w - b.w.w));
}

using Check = std::function<double(Rng&, int)>;  // returns max error

InvariantResult run_check(const std::string& name, double tol, int samples,
                          std::uint64_t seed, const Check& body) {
  // Each invariant gets its own stream so that adding or reordering checks
  // never changes another check's samples.
  std::mt19937_64 mix(seed);
  mix.discard(std::hash<std::string>{}(name) % 64);
  Rng rng(mix());
  InvariantResult r;
  r.name = name;
  r.samples = samples;
  r.tolerance = tol;
  r.max_error = body(rng, samples);
  r.pass = r.max_error <= tol && std::isfinite(r.max_error);
  return r;
}

// --- individual checks --------------------------------------------------------

double check_cayley_round_trip(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const UpperHalfPlanePoint v{complexd{rng.uniform(-3, 3), rng.uniform(0.05, 4)}};
    err = std::max(err, std::abs(cayley_to_uhp(cayley_to_disk(v)).v - v.v));
    const DiskPoint w{rng.disk(0.95)};
    err = std::max(err, std::abs(cayley_to_disk(cayley_to_uhp(w)).w - w.w));
  }
  return err;
}

double check_partial_cayley_round_trip(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const SJUHPPoint p{rng.box(2.0),
                       complexd{rng.uniform(-3, 3), rng.uniform(0.05, 4)}};
    const SJUHPPoint back = partial_cayley_inv(partial_cayley(p));
    err = std::max(err, std::abs(back.u - p.u));
    err = std::max(err, std::abs(back.v.v - p.v.v));
  }
  return err;
}

double check_fc_round_trip(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const FCPoint p{rng.box(2.0), rng.disk(0.9)};
    const FCPoint back = fc_inverse(fc_forward(p));
    err = std::max(err, std::abs(back.eta - p.eta));
    const SJDiskPoint q{rng.box(2.0), rng.disk(0.9)};
    err = std::max(err, dist(fc_forward(fc_inverse(q)), q));
  }
  return err;
}

// FC1 followed by the partial Cayley transform must equal FC followed by
// nothing, with the bases linked by the Cayley transform.
double check_fc_chart_diagram(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const complexd eta = rng.box(2.0);
    const UpperHalfPlanePoint v{complexd{rng.uniform(-3, 3), rng.uniform(0.05, 4)}};
    const SJDiskPoint via_uhp = partial_cayley(fc1_forward(eta, v));
    const SJDiskPoint via_disk = fc_forward(FCPoint{eta, cayley_to_disk(v)});
    err = std::max(err, dist(via_uhp, via_disk));
    err = std::max(err,
                   std::abs(fc1_inverse(fc1_forward(eta, v)) - eta));
  }
  return err;
}

double check_ez_round_trip(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const SJUHPPoint p{rng.box(2.0),
                       complexd{rng.uniform(-3, 3), rng.uniform(0.05, 4)}};
    const SJUHPPoint back = ez_compose(ez_decompose(p));
    err = std::max(err, std::abs(back.u - p.u));
    err = std::max(err, std::abs(back.v.v - p.v.v));
    const EZCoordinates c{rng.uniform(-2, 2), rng.uniform(0.1, 3),
                          rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const EZCoordinates back_c = ez_decompose(ez_compose(c));
    err = std::max({err, std::abs(back_c.x - c.x), std::abs(back_c.y - c.y),
                    std::abs(back_c.p - c.p), std::abs(back_c.q - c.q)});
  }
  return err;
}

double check_group_axioms(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const JacobiElement j1 = rng.jacobi(1.0, 1.0), j2 = rng.jacobi(1.0, 1.0),
                        j3 = rng.jacobi(1.0, 1.0);
    const JacobiElement lhs = compose(compose(j1, j2), j3);
    const JacobiElement rhs = compose(j1, compose(j2, j3));
    err = std::max({err, std::abs(lhs.g.a - rhs.g.a),
                    std::abs(lhs.g.b - rhs.g.b),
                    std::abs(lhs.alpha - rhs.alpha), std::abs(lhs.t - rhs.t)});
    const JacobiElement e = compose(j1, inverse(j1));
    err = std::max({err, std::abs(e.g.a - 1.0), std::abs(e.g.b),
                    std::abs(e.alpha), std::abs(e.t)});
    const JacobiElement idl = compose(JacobiElement::identity(), j1);
    err = std::max({err, std::abs(idl.g.a - j1.g.a),
                    std::abs(idl.alpha - j1.alpha), std::abs(idl.t - j1.t)});
  }
  return err;
}

double check_left_action(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const JacobiElement j1 = rng.jacobi(0.8, 0.8), j2 = rng.jacobi(0.8, 0.8);
    const SJDiskPoint p{rng.box(1.5), rng.disk(0.85)};
    err = std::max(err, dist(act_disk(compose(j1, j2), p),
                             act_disk(j1, act_disk(j2, p))));
    const FCPoint q{rng.box(1.5), rng.disk(0.85)};
    const FCPoint lhs = act_fc(compose(j1, j2), q);
    const FCPoint rhs = act_fc(j1, act_fc(j2, q));
    err = std::max({err, std::abs(lhs.eta - rhs.eta),
                    std::abs(lhs.w.w - rhs.w.w)});
  }
  return err;
}

double check_star_homomorphism(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const SL2RElement m1 = rng.sl2r(0.8), m2 = rng.sl2r(0.8);
    const SU11Element lhs = star_conjugate(m1 * m2);
    const SU11Element rhs = star_conjugate(m1) * star_conjugate(m2);
    err = std::max({err, std::abs(lhs.a - rhs.a), std::abs(lhs.b - rhs.b)});
  }
  return err;
}

double check_uhp_disk_compatibility(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const SL2RElement h = rng.sl2r(0.6);
    const complexd alpha_uhp = rng.box(0.8);
    const SJUHPPoint p{rng.box(1.5),
                       complexd{rng.uniform(-2, 2), rng.uniform(0.1, 3)}};
    const SJDiskPoint via_uhp = partial_cayley(act_uhp(h, alpha_uhp, p));
    // Disk-side element: star-conjugated SU(1,1) part and the same
    // Heisenberg parameter (z' - z = 2i(n v + m)/(v + i) = alpha - conj(alpha) w
    // exactly when alpha = m + i n).
    const JacobiElement j{star_conjugate(h), alpha_uhp, 0.0};
    const SJDiskPoint via_disk = act_disk(j, partial_cayley(p));
    err = std::max(err, dist(via_uhp, via_disk));
  }
  return err;
}

double check_fc_equivariance(Rng& rng, int n) {
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const JacobiElement j = rng.jacobi(0.8, 0.8);
    const FCPoint p{rng.box(1.5), rng.disk(0.85)};
    const SJDiskPoint lhs = act_disk(j, fc_forward(p));
    const SJDiskPoint rhs = fc_forward(act_fc(j, p));
    err = std::max(err, dist(lhs, rhs));
  }
  return err;
}

double check_kernel_diagonal(Rng& rng, int n) {
  const ModelParams params(1.5);
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const SJDiskPoint p{rng.box(2.0), rng.disk(0.9)};
    const complexd lk = log_kernel(p, p, params);
    const double pot = kahler_potential(p, params);
    err = std::max(err, std::abs(lk - pot) / std::max(1.0, std::abs(pot)));
    const SJDiskPoint q{rng.box(2.0), rng.disk(0.9)};
    const complexd k_pq = kernel(p, q, params);
    err = std::max(err, std::abs(k_pq - std::conj(kernel(q, p, params))) /
                            std::max(1.0, std::abs(k_pq)));
  }
  return err;
}

double check_kernel_fc_identity(Rng& rng, int n) {
  const ModelParams params(1.5);
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const FCPoint p{rng.box(1.5), rng.disk(0.85)};
    const FCPoint q{rng.box(1.5), rng.disk(0.85)};
    const complexd lhs = log_kernel_fc(p, q, params);
    const complexd rhs = log_kernel(fc_forward(p), fc_forward(q), params);
    complexd d = lhs - rhs;
    // log branches may differ by 2 pi i
    d = {d.real(), std::remainder(d.imag(), 2.0 * M_PI)};
    err = std::max(err, std::abs(d));
  }
  return err;
}

double check_gram_psd(Rng& rng, int n) {
  const ModelParams params(1.0);
  double worst = 0.0;  // most negative quadratic form value seen (flipped sign)
  const int trials = std::max(1, n / 8);
  for (int t = 0; t < trials; ++t) {
    std::vector<SJDiskPoint> pts;
    for (int i = 0; i < 8; ++i)
      pts.emplace_back(rng.box(1.0), rng.disk(0.8));
    // Random coefficient vectors probe PSD-ness of the normalized Gram matrix.
    std::vector<complexd> c;
    for (int i = 0; i < 8; ++i) c.push_back(rng.box(1.0));
    complexd q = 0.0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const complexd g = std::exp(
            log_kernel(pts[i], pts[j], params) -
            0.5 * (kahler_potential(pts[i], params) +
                   kahler_potential(pts[j], params)));
        q += std::conj(c[i]) * g * c[j];
      }
    worst = std::max(worst, -q.real());
  }
  return worst;
}

RealMap fc_map_buggy() {
  return RealMap{
      [](const Vec4& x) {
        auto [eta, w] = unpack_point(x);
        return pack_point(eta + w * std::conj(eta), w);  // sign flipped
      },
      [](const Vec4& x) {
        (void)x;
        return fc_map().jacobian(x);
      }};
}

double check_fc_pullback(Rng& rng, int n, bool inject_bug) {
  const ModelParams params(1.25);
  const RealMap map = fc_map();
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const FCPoint p{rng.box(1.5), rng.disk(0.85)};
    const Vec4 x = pack_point(p.eta, p.w.w);
    const Vec4 y = inject_bug ? fc_map_buggy().apply(x) : map.apply(x);
    auto [z, w] = unpack_point(y);
    if (std::abs(w) >= 1.0) return 1.0;
    const RealTwoForm omega1 =
        to_real_two_form(metric_disk(SJDiskPoint{z, DiskPoint{w}}, params));
    const RealTwoForm pulled = pullback(omega1, map.jacobian(x));
    const RealTwoForm omega0 = to_real_two_form(metric_fc(p, params));
    err = std::max(err, max_abs(pulled, omega0));
  }
  return err;
}

double check_fc1_pullback(Rng& rng, int n) {
  const ModelParams params(1.25);
  const RealMap map = fc1_map();
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const complexd eta = rng.box(1.5);
    const complexd v{rng.uniform(-2, 2), rng.uniform(0.2, 3)};
    const Vec4 x = pack_point(eta, v);
    auto [u, vv] = unpack_point(map.apply(x));
    const RealTwoForm omega1p = to_real_two_form(
        metric_uhp(SJUHPPoint{u, UpperHalfPlanePoint{vv}}, params));
    const RealTwoForm pulled = pullback(omega1p, map.jacobian(x));
    // Product form on (eta, v): flat fiber plus the half-plane base metric.
    HermitianMetric2 prod;
    prod.h[0][0] = 1.0;
    prod.h[0][1] = prod.h[1][0] = 0.0;
    prod.h[1][1] = params.k / (2.0 * v.imag() * v.imag());
    err = std::max(err, max_abs(pulled, to_real_two_form(prod)));
  }
  return err;
}

double check_partial_cayley_pullback(Rng& rng, int n) {
  const ModelParams params(1.25);
  const RealMap map = partial_cayley_map();
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const complexd u = rng.box(1.5);
    const complexd v{rng.uniform(-2, 2), rng.uniform(0.2, 3)};
    const Vec4 x = pack_point(u, v);
    auto [z, w] = unpack_point(map.apply(x));
    const RealTwoForm omega1 =
        to_real_two_form(metric_disk(SJDiskPoint{z, DiskPoint{w}}, params));
    const RealTwoForm pulled = pullback(omega1, map.jacobian(x));
    const RealTwoForm omega1p = to_real_two_form(
        metric_uhp(SJUHPPoint{u, UpperHalfPlanePoint{v}}, params));
    err = std::max(err, max_abs(pulled, omega1p));
  }
  return err;
}

double check_group_invariance(Rng& rng, int n) {
  const ModelParams params(1.25);
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const JacobiElement j = rng.jacobi(0.5, 0.5);
    {
      const SJDiskPoint p{rng.box(1.0), rng.disk(0.7)};
      const RealMap map = act_disk_map(j);
      const Vec4 x = pack_point(p.z, p.w.w);
      auto [z2, w2] = unpack_point(map.apply(x));
      const RealTwoForm target = to_real_two_form(
          metric_disk(SJDiskPoint{z2, DiskPoint{w2}}, params));
      err = std::max(err, max_abs(pullback(target, map.jacobian(x)),
                                  to_real_two_form(metric_disk(p, params))));
    }
    {
      const FCPoint p{rng.box(1.0), rng.disk(0.7)};
      const RealMap map = act_fc_map(j);
      const Vec4 x = pack_point(p.eta, p.w.w);
      auto [e2, w2] = unpack_point(map.apply(x));
      const RealTwoForm target =
          to_real_two_form(metric_fc(FCPoint{e2, DiskPoint{w2}}, params));
      err = std::max(err, max_abs(pullback(target, map.jacobian(x)),
                                  to_real_two_form(metric_fc(p, params))));
    }
    {
      const SL2RElement h = rng.sl2r(0.5);
      const complexd alpha = rng.box(0.5);
      const SJUHPPoint p{rng.box(1.0),
                         complexd{rng.uniform(-1.5, 1.5), rng.uniform(0.2, 2.5)}};
      const RealMap map = act_uhp_map(h, alpha);
      const Vec4 x = pack_point(p.u, p.v.v);
      auto [u2, v2] = unpack_point(map.apply(x));
      const RealTwoForm target = to_real_two_form(
          metric_uhp(SJUHPPoint{u2, UpperHalfPlanePoint{v2}}, params));
      err = std::max(err, max_abs(pullback(target, map.jacobian(x)),
                                  to_real_two_form(metric_uhp(p, params))));
    }
  }
  return err;
}

double check_jacobian_consistency(Rng& rng, int n) {
  double err = 0.0;
  const RealMap maps[3] = {fc_map(), fc1_map(), partial_cayley_map()};
  for (int i = 0; i < n; ++i) {
    for (int mi = 0; mi < 3; ++mi) {
      const Vec4 x = mi == 0
                         ? pack_point(rng.box(1.0), rng.disk(0.7))
                         : pack_point(rng.box(1.0),
                                      complexd{rng.uniform(-1.5, 1.5),
                                               rng.uniform(0.3, 2.5)});
      const Mat4 ja = maps[mi].jacobian(x);
      const Mat4 jf = finite_difference_jacobian(maps[mi].apply, x);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          err = std::max(err, std::abs(ja[r][c] - jf[r][c]));
    }
  }
  return err;
}

double check_measure_change(Rng& rng, int n) {
  const ModelParams params(1.25);
  double err = 0.0;
  const RealMap map = fc_map();
  for (int i = 0; i < n; ++i) {
    const FCPoint p{rng.box(1.2), rng.disk(0.8)};
    const Vec4 x = pack_point(p.eta, p.w.w);
    const Vec4 y = map.apply(x);
    // |det J_FC| = 1 - |w|^2 exactly, so the disk density times the Jacobian
    // determinant must reproduce the FC density.
    const Mat4 j = map.jacobian(x);
    double det = 0.0;
    {
      // 4x4 determinant by cofactor expansion along the last two rows, which
      // here form the identity block, so det = det of the top-left 2x2 block
      // would hold only for block-triangular J; compute fully instead.
      auto det3 = [](const Mat4& m, int r0, int c0, int r1, int c1, int r2,
                     int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
      };
      det = j[0][0] * det3(j, 1, 1, 2, 2, 3, 3) -
            j[0][1] * det3(j, 1, 0, 2, 2, 3, 3) +
            j[0][2] * det3(j, 1, 0, 2, 1, 3, 3) -
            j[0][3] * det3(j, 1, 0, 2, 1, 3, 2);
    }
    const double lhs = measure_density(Chart::Disk, y, params) * std::abs(det);
    const double rhs = measure_density(Chart::FC, x, params);
    err = std::max(err, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return err;
}

double check_annihilator(Rng& rng, int n) {
  const ModelParams params(1.5);
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const SJDiskPoint p{rng.box(2.0), rng.disk(0.9)};
    const auto [x, y] = annihilator_residual(p, params);
    for (int c = 0; c < 3; ++c)
      err = std::max({err, std::abs(x[c]), std::abs(y[c])});
  }
  return err;
}

double check_riccati_closed_vs_numeric(Rng& rng, int n) {
  double err = 0.0;
  const int trials = std::max(1, n / 10);
  for (int t = 0; t < trials; ++t) {
    const HamiltonianCoeffs c = rng.oscillatory();
    const complexd w0 = rng.disk(0.5);
    const CoeffsFn fn = [&c](double) { return NonHermitianCoeffs::from(c); };
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.25 * i);
    const Trajectory traj =
        integrate_numeric(Chart::Disk, {0.0, w0}, fn, grid, StepParams{},
                          ModelParams(1.0));
    if (traj.status != TrajectoryStatus::Complete) continue;
    for (size_t i = 0; i < traj.times.size(); ++i)
      err = std::max(err, std::abs(traj.states[i][1] -
                                   solve_riccati_disk(w0, c, traj.times[i])));
  }
  return err;
}

double check_riccati_cayley_covariance(Rng& rng, int n) {
  double err = 0.0;
  const int trials = std::max(1, n / 10);
  for (int t = 0; t < trials; ++t) {
    const HamiltonianCoeffs c = rng.oscillatory();
    const complexd w0 = rng.disk(0.5);
    const complexd v0 = cayley_to_uhp(DiskPoint{w0}).v;
    for (double time : {0.3, 1.1, 2.7}) {
      try {
        const complexd v = solve_riccati_uhp(v0, c, time);
        const complexd w = solve_riccati_disk(w0, c, time);
        if (v.imag() <= kBoundaryMargin) continue;
        err = std::max(err,
                       std::abs(cayley_to_disk(UpperHalfPlanePoint{v}).w - w));
      } catch (const SingularityError&) {
      }
    }
  }
  return err;
}

double check_decoupling(Rng& rng, int n) {
  double err = 0.0;
  const int trials = std::max(1, n / 20);
  for (int t = 0; t < trials; ++t) {
    const HamiltonianCoeffs c = rng.oscillatory();
    const complexd w0 = rng.disk(0.4);
    const complexd z0 = rng.box(0.5);
    const complexd eta0 = fc_inverse(SJDiskPoint{z0, DiskPoint{w0}}).eta;
    const CoeffsFn fn = [&c](double) { return NonHermitianCoeffs::from(c); };
    std::vector<double> grid{0.0, 0.7, 1.5, 2.4};
    const Trajectory disk_traj = integrate_numeric(
        Chart::Disk, {z0, w0}, fn, grid, StepParams{}, ModelParams(1.0));
    const Trajectory fc_traj = integrate_numeric(
        Chart::FC, {eta0, w0}, fn, grid, StepParams{}, ModelParams(1.0));
    if (disk_traj.status != TrajectoryStatus::Complete ||
        fc_traj.status != TrajectoryStatus::Complete)
      continue;
    for (size_t i = 0; i < grid.size(); ++i) {
      const auto& ds = disk_traj.states[i];
      if (std::abs(ds[1]) >= 1.0) continue;
      const complexd eta_mapped =
          fc_inverse(SJDiskPoint{ds[0], DiskPoint{ds[1]}}).eta;
      err = std::max(err, std::abs(eta_mapped - fc_traj.states[i][0]));
      err = std::max(err, std::abs(ds[1] - fc_traj.states[i][1]));
      // Closed form, same quantities.
      err = std::max(err, std::abs(solve_eta_closed(eta0, c, grid[i]) -
                                   fc_traj.states[i][0]));
    }
  }
  return err;
}

double check_energy_conservation(Rng& rng, int n) {
  double err = 0.0;
  const int trials = std::max(1, n / 20);
  const ModelParams params(1.0);
  for (int t = 0; t < trials; ++t) {
    const HamiltonianCoeffs c = rng.oscillatory();
    const complexd w0 = rng.disk(0.4);
    const complexd eta0 = rng.box(0.8);
    const CoeffsFn fn = [&c](double) { return NonHermitianCoeffs::from(c); };
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(0.5 * i);
    const Trajectory traj = integrate_numeric(Chart::FC, {eta0, w0}, fn, grid,
                                              StepParams{}, params);
    if (traj.status != TrajectoryStatus::Complete) continue;
    for (double e : traj.energy)
      err = std::max(err, std::abs(e - traj.energy.front()));
  }
  return err;
}

double check_critical_point(Rng& rng, int n) {
  double err = 0.0;
  const int trials = std::max(1, n / 20);
  const ModelParams params(1.0);
  const double h = 1e-6;
  for (int t = 0; t < trials; ++t) {
    const HamiltonianCoeffs c = rng.oscillatory();
    const auto [w_c, eta_c] = critical_point(c);
    if (std::abs(w_c) >= 0.95) continue;
    // Flow velocity vanishes at the critical point.
    const auto vel = eom(Chart::FC, {eta_c, w_c}, c);
    err = std::max({err, std::abs(vel[0]), std::abs(vel[1])});
    // Finite-difference gradient of the energy vanishes too.
    const Vec4 x0 = pack_point(eta_c, w_c);
    for (int d = 0; d < 4; ++d) {
      Vec4 xp = x0, xm = x0;
      xp[d] += h;
      xm[d] -= h;
      auto [ep_f, ep_b] = unpack_point(xp);
      auto [em_f, em_b] = unpack_point(xm);
      const double grad = (energy(Chart::FC, {ep_f, ep_b}, c, params) -
                           energy(Chart::FC, {em_f, em_b}, c, params)) /
                          (2.0 * h);
      err = std::max(err, std::abs(grad));
    }
  }
  return err;
}

double check_berry_two_chart(Rng& rng, int n) {
  const ModelParams params(1.0);
  double err = 0.0;
  const int trials = std::max(1, n / 100);
  for (int t = 0; t < trials; ++t) {
    const double r = rng.uniform(0.2, 0.6);
    const complexd eta_base = rng.box(0.5);
    // Richardson-extrapolate each chart's midpoint sum so that the comparison
    // is not limited by the second-order quadrature error.
    auto phases = [&](int segs) {
      std::vector<FCPoint> fc_path;
      std::vector<SJDiskPoint> disk_path;
      fc_path.reserve(segs + 1);
      disk_path.reserve(segs + 1);
      for (int i = 0; i <= segs; ++i) {
        const double th = 2.0 * M_PI * i / segs;
        const FCPoint p{eta_base * std::exp(kI * th), std::polar(r, th)};
        fc_path.push_back(p);
        disk_path.push_back(fc_forward(p));
      }
      return std::make_pair(berry_phase_fc(fc_path, params),
                            berry_phase_disk(disk_path, params));
    };
    const auto [fc_f, disk_f] = phases(20000);
    const auto [fc_c, disk_c] = phases(10000);
    const double fc_extrap = (4.0 * fc_f - fc_c) / 3.0;
    const double disk_extrap = (4.0 * disk_f - disk_c) / 3.0;
    err = std::max(err, std::abs(fc_extrap - disk_extrap));
  }
  return err;
}

double check_geodesic(Rng& rng, int n) {
  const ModelParams params(1.0);
  double err = 0.0;
  const int trials = std::max(1, n / 100);
  const double dt = 1e-3;
  for (int t = 0; t < trials; ++t) {
    const complexd B = rng.box(0.8);
    if (std::abs(B) < 0.1) continue;
    const complexd eta = rng.box(0.5);
    std::vector<complexd> z, w;
    for (int i = -200; i <= 200; ++i) {
      const complexd wi = geodesic_disk(B, i * dt);
      w.push_back(wi);
      z.push_back(fc_forward(FCPoint{eta, DiskPoint{wi}}).z);
    }
    const auto [r1, r2] = geodesic_residual(z, w, dt, params);
    err = std::max({err, r1, r2});
  }
  return err;
}

double check_stays_in_disk(Rng& rng, int n) {
  int mismatches = 0;
  const int trials = std::max(1, n / 10);
  for (int t = 0; t < trials; ++t) {
    const double eps_0 = rng.uniform(1.5, 3.0);
    const complexd eps_plus = std::polar(rng.uniform(0.15, 0.45) * eps_0,
                                         rng.uniform(0.0, 2.0 * M_PI));
    const HamiltonianCoeffs c{rng.box(1.0), eps_0, eps_plus};
    const complexd w0 = rng.disk(0.9);
    bool predicted;
    try {
      predicted = stays_in_disk(w0, c);
    } catch (const UnsupportedRegime&) {
      continue;
    }
    const double period = 4.0 * M_PI / std::sqrt(riccati_roots(c).delta);
    double max_abs_w = 0.0;
    bool singular = false;
    for (int i = 0; i <= 400; ++i) {
      try {
        max_abs_w = std::max(
            max_abs_w, std::abs(solve_riccati_disk(w0, c, period * i / 400.0)));
      } catch (const SingularityError&) {
        singular = true;
        break;
      }
    }
    const bool observed = !singular && max_abs_w < 1.0;
    // Skip near-threshold samples where the sampled maximum is ambiguous.
    if (!singular && std::abs(max_abs_w - 1.0) < 1e-3) continue;
    if (predicted != observed) ++mismatches;
  }
  return static_cast<double>(mismatches);
}

double check_top_form(Rng& rng, int n) {
  double err = 0.0;
  const ModelParams params(1.25);
  for (int i = 0; i < n; ++i) {
    const FCPoint p{rng.box(1.0), rng.disk(0.8)};
    const auto [top, reference] = top_form_check(p, params);
    err = std::max(err, std::abs(top / reference - (-2.0)));
  }
  return err;
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed, int samples,
                              bool inject_fc_bug) {
  VerifyReport rep;
  rep.seed = seed;
  const int n = std::max(1, samples);
  auto add = [&](const std::string& name, double tol, int count,
                 const Check& body) {
    rep.results.push_back(run_check(name, tol, count, seed, body));
  };

  add("domains/cayley_round_trip", 1e-12, n, check_cayley_round_trip);
  add("domains/partial_cayley_round_trip", 1e-12, n,
      check_partial_cayley_round_trip);
  add("domains/fc_round_trip", 1e-12, n, check_fc_round_trip);
  add("domains/fc_chart_diagram", 1e-10, n, check_fc_chart_diagram);
  add("domains/ez_round_trip", 1e-12, n, check_ez_round_trip);
  add("group/axioms", 1e-10, n, check_group_axioms);
  add("group/left_action", 1e-10, n, check_left_action);
  add("group/star_homomorphism", 1e-12, n, check_star_homomorphism);
  add("group/uhp_disk_compatibility", 1e-10, n, check_uhp_disk_compatibility);
  add("group/fc_equivariance", 1e-10, n, check_fc_equivariance);
  add("geometry/kernel_diagonal", 1e-11, n, check_kernel_diagonal);
  add("geometry/kernel_fc_identity", 1e-10, n, check_kernel_fc_identity);
  add("geometry/gram_psd", 1e-9, n, check_gram_psd);
  add("geometry/fc_pullback", 1e-9, n,
      [inject_fc_bug](Rng& rng, int count) {
        return check_fc_pullback(rng, count, inject_fc_bug);
      });
  add("geometry/fc1_pullback", 1e-9, n, check_fc1_pullback);
  add("geometry/partial_cayley_pullback", 1e-9, n,
      check_partial_cayley_pullback);
  add("geometry/group_invariance", 1e-8, n, check_group_invariance);
  add("geometry/jacobian_consistency", 1e-6, std::max(1, n / 10),
      check_jacobian_consistency);
  add("geometry/measure_change_of_variables", 1e-9, n, check_measure_change);
  add("geometry/top_form_ratio", 1e-12, n, check_top_form);
  add("geometry/annihilator", 1e-11, n, check_annihilator);
  add("dynamics/riccati_closed_vs_numeric", 1e-8, n,
      check_riccati_closed_vs_numeric);
  add("dynamics/riccati_cayley_covariance", 1e-8, n,
      check_riccati_cayley_covariance);
  add("dynamics/decoupling", 1e-8, n, check_decoupling);
  add("dynamics/energy_conservation", 1e-8, n, check_energy_conservation);
  add("dynamics/critical_point", 1e-8, n, check_critical_point);
  add("dynamics/berry_two_chart", 1e-8, n, check_berry_two_chart);
  add("dynamics/geodesic_residual", 1e-6, n, check_geodesic);
  add("dynamics/stays_in_disk", 0.0, n, check_stays_in_disk);
  return rep;
}

}  // namespace sjd
