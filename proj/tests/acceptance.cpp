// Acceptance gate: one pass/fail line per criterion, pinned tolerances.

#include <cstdio>
#include <random>
#include <vector>

#include "sjd/dynamics.hpp"

using namespace sjd;

namespace {

std::mt19937_64 rng(424242ull);
double uni(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}
complexd cbox(double r) { return {uni(-r, r), uni(-r, r)}; }
complexd rand_disk(double rmax) {
  return std::polar(std::sqrt(uni(0, rmax * rmax)), uni(0, 2 * M_PI));
}
HamiltonianCoeffs rand_coeffs() {
  const double eps_0 = uni(1.5, 3.0);
  return HamiltonianCoeffs{cbox(1.0), eps_0, rand_disk(0.45 * eps_0)};
}
CoeffsFn constant(const HamiltonianCoeffs& c) {
  const NonHermitianCoeffs nc = NonHermitianCoeffs::from(c);
  return [nc](double) { return nc; };
}
std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> g;
  for (int i = 0; i <= n; ++i) g.push_back(a + (b - a) * i / n);
  return g;
}
double form_dist(const RealTwoForm& a, const RealTwoForm& b) {
  double m = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m = std::max(m, std::abs(a.m[i][j] - b.m[i][j]));
  return m;
}

int failures = 0;
void report(int idx, const char* name, double err, double tol) {
  const bool ok = err <= tol && std::isfinite(err);
  if (!ok) ++failures;
  std::printf("%s  [%2d] %-38s max_err=%.3e  tol=%.1e\n",
              ok ? "PASS" : "FAIL", idx, name, err, tol);
}

// 1. FC and FC1 split the chart two-forms into product forms.
void criterion_1() {
  const ModelParams params(1.25);
  double err_analytic = 0.0, err_fd = 0.0;
  const RealMap fc = fc_map();
  const RealMap fc1 = fc1_map();
  for (int i = 0; i < 1000; ++i) {
    {
      const FCPoint p{cbox(1.5), rand_disk(0.85)};
      const Vec4 x = pack_point(p.eta, p.w.w);
      auto [z, w] = unpack_point(fc.apply(x));
      const RealTwoForm omega1 =
          to_real_two_form(metric_disk(SJDiskPoint{z, DiskPoint{w}}, params));
      const RealTwoForm product = to_real_two_form(metric_fc(p, params));
      err_analytic =
          std::max(err_analytic,
                   form_dist(pullback(omega1, fc.jacobian(x)), product));
      err_fd = std::max(
          err_fd, form_dist(pullback(omega1, finite_difference_jacobian(
                                                 fc.apply, x)),
                            product));
    }
    {
      const complexd eta = cbox(1.5);
      const complexd v{uni(-2, 2), uni(0.2, 3)};
      const Vec4 x = pack_point(eta, v);
      auto [u, vv] = unpack_point(fc1.apply(x));
      const RealTwoForm omega1p = to_real_two_form(
          metric_uhp(SJUHPPoint{u, UpperHalfPlanePoint{vv}}, params));
      HermitianMetric2 prod;
      prod.h[0][0] = 1.0;
      prod.h[0][1] = prod.h[1][0] = 0.0;
      prod.h[1][1] = params.k / (2.0 * v.imag() * v.imag());
      const RealTwoForm product = to_real_two_form(prod);
      err_analytic =
          std::max(err_analytic,
                   form_dist(pullback(omega1p, fc1.jacobian(x)), product));
      err_fd = std::max(
          err_fd, form_dist(pullback(omega1p, finite_difference_jacobian(
                                                  fc1.apply, x)),
                            product));
    }
  }
  report(1, "FC/FC1 two-form split (analytic J)", err_analytic, 1e-9);
  report(1, "FC/FC1 two-form split (FD J)", err_fd, 1e-6);
}

// 2. The group actions preserve the chart two-forms.
void criterion_2() {
  const ModelParams params(1.25);
  double err = 0.0;
  for (int i = 0; i < 200; ++i) {
    const complexd b = cbox(0.5);
    const JacobiElement j{
        SU11Element{std::polar(std::sqrt(1.0 + std::norm(b)), uni(0, 2 * M_PI)),
                    b},
        cbox(0.5), 0.0};
    {
      const SJDiskPoint p{cbox(1.0), rand_disk(0.7)};
      const RealMap map = act_disk_map(j);
      const Vec4 x = pack_point(p.z, p.w.w);
      auto [z2, w2] = unpack_point(map.apply(x));
      const RealTwoForm target = to_real_two_form(
          metric_disk(SJDiskPoint{z2, DiskPoint{w2}}, params));
      err = std::max(err, form_dist(pullback(target, map.jacobian(x)),
                                    to_real_two_form(metric_disk(p, params))));
    }
    {
      const FCPoint p{cbox(1.0), rand_disk(0.7)};
      const RealMap map = act_fc_map(j);
      const Vec4 x = pack_point(p.eta, p.w.w);
      auto [e2, w2] = unpack_point(map.apply(x));
      const RealTwoForm target =
          to_real_two_form(metric_fc(FCPoint{e2, DiskPoint{w2}}, params));
      err = std::max(err, form_dist(pullback(target, map.jacobian(x)),
                                    to_real_two_form(metric_fc(p, params))));
    }
    {
      const double a = uni(0.6, 1.4), bb = uni(-0.5, 0.5), c = uni(-0.5, 0.5);
      const SL2RElement h{a, bb, c, (1 + bb * c) / a};
      const complexd alpha = cbox(0.5);
      const SJUHPPoint p{cbox(1.0), complexd{uni(-1.5, 1.5), uni(0.2, 2.5)}};
      const RealMap map = act_uhp_map(h, alpha);
      const Vec4 x = pack_point(p.u, p.v.v);
      auto [u2, v2] = unpack_point(map.apply(x));
      const RealTwoForm target = to_real_two_form(
          metric_uhp(SJUHPPoint{u2, UpperHalfPlanePoint{v2}}, params));
      err = std::max(err, form_dist(pullback(target, map.jacobian(x)),
                                    to_real_two_form(metric_uhp(p, params))));
    }
  }
  report(2, "group invariance of the two-forms", err, 1e-8);
}

// 3. Worked base equation: closed form vs numeric, stationary fixed point.
void criterion_3() {
  const HamiltonianCoeffs c{{1.0, 0.0}, 2.0, {0.5, 0.0}};
  double err = 0.0;
  const Trajectory traj =
      integrate_numeric(Chart::Disk, {complexd{0, 0}, complexd{0, 0}},
                        constant(c), linspace(0, 10, 100), StepParams{},
                        ModelParams(1.0));
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const complexd closed = solve_riccati_disk(0.0, c, traj.times[i]);
    err = std::max(err, std::abs(traj.states[i][1] - closed) /
                            std::max(1.0, std::abs(closed)));
  }
  report(3, "base closed form vs RK4 (t in [0,10])", err, 1e-8);

  const complexd w_c{std::sqrt(3.0) - 2.0, 0.0};
  double err_fp = 0.0;
  for (double t : linspace(0, 10, 20))
    err_fp = std::max(err_fp, std::abs(solve_riccati_disk(w_c, c, t) - w_c));
  const Trajectory fp =
      integrate_numeric(Chart::FC, {complexd{0, 0}, w_c}, constant(c),
                        linspace(0, 10, 20), StepParams{}, ModelParams(1.0));
  for (const auto& s : fp.states)
    err_fp = std::max(err_fp, std::abs(s[1] - w_c));
  report(3, "fixed point sqrt(3)-2 stationary", err_fp, 1e-12);
}

// 4. FC decouples the coupled fiber equation.
void criterion_4() {
  double err = 0.0;
  for (int t = 0; t < 50; ++t) {
    const HamiltonianCoeffs c = rand_coeffs();
    const complexd w0 = rand_disk(0.4);
    const complexd z0 = cbox(0.5);
    const complexd eta0 = fc_inverse(SJDiskPoint{z0, DiskPoint{w0}}).eta;
    const std::vector<double> grid = linspace(0, 2.5, 5);
    const Trajectory disk_traj =
        integrate_numeric(Chart::Disk, {z0, w0}, constant(c), grid,
                          StepParams{}, ModelParams(1.0));
    const Trajectory fc_traj =
        integrate_numeric(Chart::FC, {eta0, w0}, constant(c), grid,
                          StepParams{}, ModelParams(1.0));
    if (disk_traj.status != TrajectoryStatus::Complete ||
        fc_traj.status != TrajectoryStatus::Complete)
      continue;
    for (size_t i = 0; i < grid.size(); ++i) {
      const auto& ds = disk_traj.states[i];
      const complexd mapped =
          fc_inverse(SJDiskPoint{ds[0], DiskPoint{ds[1]}}).eta;
      err = std::max(err, std::abs(mapped - fc_traj.states[i][0]));
      err = std::max(err, std::abs(ds[1] - fc_traj.states[i][1]));
    }
  }
  report(4, "FC decoupling (50 coefficient sets)", err, 1e-8);
}

// 5. Half-plane closed form equals the disk closed form through Cayley,
//    with the mode-constant ratio matching the printed matching relation.
void criterion_5() {
  double err = 0.0;
  for (int t = 0; t < 50; ++t) {
    const HamiltonianCoeffs c = rand_coeffs();
    const complexd w0 = rand_disk(0.5);
    const complexd v0 = cayley_to_uhp(DiskPoint{w0}).v;
    for (double time : linspace(0.1, 3.0, 8)) {
      try {
        const complexd v = solve_riccati_uhp(v0, c, time);
        if (v.imag() <= kBoundaryMargin) continue;
        err = std::max(err,
                       std::abs(cayley_to_disk(UpperHalfPlanePoint{v}).w -
                                solve_riccati_disk(w0, c, time)));
      } catch (const SingularityError&) {
      }
    }
    // Constant matching: f / rho = (eps_+ - w2) / (eps_+ - w1).
    const RiccatiRoots r = riccati_roots(c);
    const complexd A = 0.5 * (c.eps_minus + c.eps_plus + c.eps_0);
    const double sd = std::sqrt(r.delta);
    const complexd v1 = 0.5 * (c.eps_plus - c.eps_minus + sd);
    const complexd v2 = 0.5 * (c.eps_plus - c.eps_minus - sd);
    const complexd kI{0.0, 1.0};
    const complexd f = (c.eps_plus * w0 - r.w2) / (r.w1 - c.eps_plus * w0);
    const complexd rho = (A * v0 - kI * v2) / (kI * v1 - A * v0);
    err = std::max(err, std::abs(f / rho - (c.eps_plus - r.w2) /
                                               (c.eps_plus - r.w1)));
  }
  report(5, "Cayley covariance of closed forms", err, 1e-9);
}

// 6. Energy conservation along trajectories and the closed-form conserved
//    values of both energy parts.  The printed fiber-part constant is
//    inconsistent; the value asserted here is the one rebuilt from the mode
//    amplitudes M, N (see the decision record), which matches trajectories.
void criterion_6() {
  const ModelParams params(1.0);
  double err_drift = 0.0, err_closed = 0.0;
  for (int t = 0; t < 20; ++t) {
    const HamiltonianCoeffs c = rand_coeffs();
    const complexd w0 = rand_disk(0.4);
    const complexd eta0 = cbox(0.8);
    const Trajectory traj =
        integrate_numeric(Chart::FC, {eta0, w0}, constant(c),
                          linspace(0, 10, 40), StepParams{}, params);
    if (traj.status != TrajectoryStatus::Complete) continue;
    for (double e : traj.energy)
      err_drift = std::max(err_drift, std::abs(e - traj.energy.front()));

    // Base-part constant from the mode coefficients C1 = f, C2 = 1.
    const RiccatiRoots r = riccati_roots(c);
    const complexd f = (c.eps_plus * w0 - r.w2) / (r.w1 - c.eps_plus * w0);
    const double c1 = std::norm(f), c2 = 1.0;
    const complexd w1 = r.w1, w2 = r.w2;
    const double h_w_closed =
        params.k *
        (c.eps_0 + 2.0 * ((-w1 * w1 * c1 + w2 * w2 * c2) /
                          (-w1 * c1 + w2 * c2))
                             .real());
    // Fiber-part constant from the mode amplitudes.
    const EtaClosedForm e = eta_closed_form(eta0, c);
    const complexd mn = e.M * e.N;
    const complexd h_p =
        std::conj(c.eps_a) * e.P + c.eps_a * std::conj(e.P) +
        0.5 * (c.eps_plus * e.P * e.P +
               c.eps_minus * std::conj(e.P) * std::conj(e.P) +
               c.eps_0 * std::norm(e.P));
    const double h_eta_closed =
        h_p.real() + (c.eps_plus * mn + c.eps_minus * std::conj(mn)).real() +
        0.5 * c.eps_0 * (std::norm(e.M) + std::norm(e.N));

    // Compare against the pointwise energy parts along the trajectory.
    for (size_t i = 0; i < traj.states.size(); ++i) {
      const complexd eta = traj.states[i][0], w = traj.states[i][1];
      const double P = 1.0 - std::norm(w);
      const double h_eta =
          (std::conj(c.eps_a) * eta + c.eps_a * std::conj(eta) +
           0.5 * (c.eps_plus * eta * eta +
                  c.eps_minus * std::conj(eta) * std::conj(eta) +
                  c.eps_0 * std::norm(eta)))
              .real();
      const double h_w =
          params.k * c.eps_0 +
          2.0 * params.k / P *
              (c.eps_plus * w + c.eps_minus * std::conj(w) +
               c.eps_0 * std::norm(w))
                  .real();
      err_closed = std::max(err_closed, std::abs(h_w - h_w_closed));
      err_closed = std::max(err_closed, std::abs(h_eta - h_eta_closed));
    }
  }
  report(6, "energy drift over t in [0,10]", err_drift, 1e-8);
  report(6, "conserved closed-form energy parts", err_closed, 1e-8);
}

// 7. Critical point gradient and Hessian classification.
void criterion_7() {
  const ModelParams params(1.0);
  double err_grad = 0.0;
  int classified = 0, pos_seen = 0, neg_seen = 0, sign_mismatch = 0;
  for (int t = 0; t < 400 && classified < 20; ++t) {
    const double eps_0 = uni(-3.0, 3.0);
    if (std::abs(eps_0) < 1.0) continue;
    const double m = uni(-0.2, 0.2) * std::abs(eps_0);
    const HamiltonianCoeffs c{cbox(1.0), eps_0, complexd{m, 0.0}};
    if (riccati_roots(c).delta <= 0.0) continue;

    const double p = 0.5 * eps_0;
    const HessianInfo info = hessian_classify(c, params);
    // Eigenvalues of the Hessian quadratic form: {g, g, p + 2m, p - 2m}.
    const bool positive_definite =
        info.g > 0.0 && p + 2.0 * m > 0.0 && p - 2.0 * m > 0.0;
    const bool index_two = info.g > 0.0 && p + 2.0 * m < 0.0 && p - 2.0 * m < 0.0;
    if (!positive_definite && !index_two) continue;
    if ((info.classification == CriticalPointType::PositiveDefinite) !=
        positive_definite)
      ++sign_mismatch;
    (positive_definite ? pos_seen : neg_seen)++;
    ++classified;

    if (eps_0 > 0.0) {
      const auto [w_c, eta_c] = critical_point(c);
      if (std::abs(w_c) >= 0.95) continue;
      const double h = 1e-6;
      for (int d = 0; d < 4; ++d) {
        Vec4 xp = pack_point(eta_c, w_c), xm = xp;
        xp[d] += h;
        xm[d] -= h;
        auto [pf, pb] = unpack_point(xp);
        auto [mf, mb] = unpack_point(xm);
        err_grad = std::max(
            err_grad, std::abs(energy(Chart::FC, {pf, pb}, c, params) -
                               energy(Chart::FC, {mf, mb}, c, params)) /
                          (2.0 * h));
      }
    }
  }
  report(7, "FD gradient norm at the critical point", err_grad, 1e-8);
  const double class_err =
      (classified >= 20 && pos_seen > 0 && neg_seen > 0) ? sign_mismatch : 1.0;
  report(7, "Hessian sign classification (both signs)", class_err, 0.0);
}

// 8. Berry phase on the standard circle, quadrature order, chart agreement.
void criterion_8() {
  const ModelParams params(1.0);
  auto circle = [&](int segs) {
    std::vector<FCPoint> path;
    for (int i = 0; i <= segs; ++i)
      path.emplace_back(complexd{0, 0},
                        DiskPoint{std::polar(0.5, 2 * M_PI * i / double(segs))});
    return path;
  };
  const double exact = -4.0 * M_PI / 3.0;
  const double phi1 = berry_phase_fc(circle(10000), params);
  report(8, "circle r=0.5: |phi_B| = 4pi/3", std::abs(std::abs(phi1) -
                                                      4.0 * M_PI / 3.0),
         1e-6);
  const double e1 = std::abs(phi1 - exact);
  const double e2 = std::abs(berry_phase_fc(circle(20000), params) - exact);
  report(8, "second-order quadrature (ratio-4)", std::abs(e1 / e2 - 4.0),
         0.05);

  // Chart agreement on a path with a nontrivial fiber component, comparing
  // Richardson-extrapolated values.  Realized sign: identical in both charts.
  auto phases = [&](int segs) {
    std::vector<FCPoint> fc_path;
    std::vector<SJDiskPoint> disk_path;
    for (int i = 0; i <= segs; ++i) {
      const double th = 2 * M_PI * i / double(segs);
      const FCPoint p{complexd{0.3, -0.2} * std::exp(complexd{0, th}),
                      DiskPoint{std::polar(0.4, th)}};
      fc_path.push_back(p);
      disk_path.push_back(fc_forward(p));
    }
    return std::make_pair(berry_phase_fc(fc_path, params),
                          berry_phase_disk(disk_path, params));
  };
  const auto [f1, d1] = phases(20000);
  const auto [f2, d2] = phases(10000);
  report(8, "two-chart agreement (same sign)",
         std::abs((4 * f1 - f2) / 3 - (4 * d1 - d2) / 3), 1e-8);
}

// 9. Geodesic residuals on the particular solution and a negative control.
void criterion_9() {
  const ModelParams params(1.0);
  const double dt = 1e-3;
  double err = 0.0;
  double control = 1e9;
  for (int t = 0; t < 10; ++t) {
    const complexd B = std::polar(uni(0.3, 0.8), uni(0, 2 * M_PI));
    const complexd eta = cbox(0.5);
    std::vector<complexd> z, w, z_bad, w_bad;
    for (int i = -200; i <= 200; ++i) {
      const complexd wi = geodesic_disk(B, i * dt);
      w.push_back(wi);
      z.push_back(fc_forward(FCPoint{eta, DiskPoint{wi}}).z);
      const complexd wb = 0.5 * B * std::sin(2.0 * i * dt);
      w_bad.push_back(wb);
      z_bad.push_back(fc_forward(FCPoint{eta, DiskPoint{wb}}).z);
    }
    const auto [r1, r2] = geodesic_residual(z, w, dt, params);
    err = std::max({err, r1, r2});
    const auto [b1, b2] = geodesic_residual(z_bad, w_bad, dt, params);
    control = std::min(control, std::max(b1, b2));
  }
  report(9, "geodesic residuals (particular sol.)", err, 1e-6);
  report(9, "geodesic negative control > 1e-3", control > 1e-3 ? 0.0 : 1.0,
         0.0);
}

// 10. Kernel suite.
void criterion_10() {
  const ModelParams params(1.5);
  double err_diag = 0.0, err_sub = 0.0, err_meas = 0.0;
  double gram_worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const SJDiskPoint p{cbox(2.0), rand_disk(0.9)};
    const double pot = kahler_potential(p, params);
    err_diag = std::max(err_diag, std::abs(log_kernel(p, p, params) - pot) /
                                      std::max(1.0, std::abs(pot)));

    const FCPoint q{cbox(1.5), rand_disk(0.85)};
    const FCPoint q2{cbox(1.5), rand_disk(0.85)};
    complexd d = log_kernel_fc(q, q2, params) -
                 log_kernel(fc_forward(q), fc_forward(q2), params);
    d = {d.real(), std::remainder(d.imag(), 2.0 * M_PI)};
    err_sub = std::max(err_sub, std::abs(d));

    const FCPoint r{cbox(1.2), rand_disk(0.8)};
    const Vec4 x = pack_point(r.eta, r.w.w);
    const Vec4 y = fc_map().apply(x);
    const double det = 1.0 - std::norm(r.w.w);
    err_meas = std::max(
        err_meas, std::abs(measure_density(Chart::Disk, y, params) * det -
                           measure_density(Chart::FC, x, params)) /
                      std::max(1.0, measure_density(Chart::FC, x, params)));
  }
  const ModelParams gp(1.0);
  for (int t = 0; t < 40; ++t) {
    std::vector<SJDiskPoint> pts;
    for (int i = 0; i < 8; ++i) pts.emplace_back(cbox(1.0), rand_disk(0.8));
    std::vector<complexd> coef;
    for (int i = 0; i < 8; ++i) coef.push_back(cbox(1.0));
    complexd quad = 0.0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        quad += std::conj(coef[i]) *
                std::exp(log_kernel(pts[i], pts[j], gp) -
                         0.5 * (kahler_potential(pts[i], gp) +
                                kahler_potential(pts[j], gp))) *
                coef[j];
    gram_worst = std::max(gram_worst, -quad.real());
  }
  report(10, "diagonal kernel = exp(potential)", err_diag, 1e-12);
  report(10, "kernel substitution identity", err_sub, 1e-10);
  report(10, "Gram matrices PSD (8 points)", gram_worst, 1e-9);
  report(10, "measure change of variables", err_meas, 1e-9);
}

// 11. Algebraic layer: group axioms, annihilators, restriction criterion.
void criterion_11() {
  double err_axioms = 0.0;
  for (int i = 0; i < 300; ++i) {
    auto rand_j = [&] {
      const complexd b = cbox(0.8);
      return JacobiElement{
          SU11Element{std::polar(std::sqrt(1.0 + std::norm(b)),
                                 uni(0, 2 * M_PI)),
                      b},
          cbox(1.0), uni(-1, 1)};
    };
    const JacobiElement j1 = rand_j(), j2 = rand_j(), j3 = rand_j();
    const JacobiElement lhs = compose(compose(j1, j2), j3);
    const JacobiElement rhs = compose(j1, compose(j2, j3));
    err_axioms = std::max(
        {err_axioms, std::abs(lhs.g.a - rhs.g.a), std::abs(lhs.g.b - rhs.g.b),
         std::abs(lhs.alpha - rhs.alpha), std::abs(lhs.t - rhs.t)});
    const JacobiElement e = compose(j1, inverse(j1));
    err_axioms = std::max({err_axioms, std::abs(e.g.a - 1.0), std::abs(e.g.b),
                           std::abs(e.alpha), std::abs(e.t)});
  }
  report(11, "group axioms", err_axioms, 1e-10);

  const ModelParams params(1.5);
  double err_ann = 0.0;
  for (int i = 0; i < 500; ++i) {
    const SJDiskPoint p{cbox(2.0), rand_disk(0.9)};
    const auto [x, y] = annihilator_residual(p, params);
    for (int c = 0; c < 3; ++c)
      err_ann = std::max({err_ann, std::abs(x[c]), std::abs(y[c])});
  }
  report(11, "annihilator residuals (500 points)", err_ann, 1e-11);

  int mismatches = 0, checked = 0;
  for (int t = 0; t < 400 && checked < 20; ++t) {
    const double eps_0 = uni(1.5, 3.0);
    const HamiltonianCoeffs c{
        cbox(1.0), eps_0,
        std::polar(uni(0.15, 0.45) * eps_0, uni(0, 2 * M_PI))};
    const complexd w0 = rand_disk(0.9);
    bool predicted;
    try {
      predicted = stays_in_disk(w0, c);
    } catch (const UnsupportedRegime&) {
      continue;
    }
    const double period = 4.0 * M_PI / std::sqrt(riccati_roots(c).delta);
    double max_w = 0.0;
    bool singular = false;
    for (int i = 0; i <= 400; ++i) {
      try {
        max_w = std::max(max_w,
                         std::abs(solve_riccati_disk(w0, c, period * i / 400)));
      } catch (const SingularityError&) {
        singular = true;
        break;
      }
    }
    if (!singular && std::abs(max_w - 1.0) < 1e-3) continue;
    if (predicted != (!singular && max_w < 1.0)) ++mismatches;
    ++checked;
  }
  report(11, "restriction criterion (20 sets)",
         checked >= 20 ? static_cast<double>(mismatches) : 1.0, 0.0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%s (%d failing checks)\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures);
  return failures == 0 ? 0 : 1;
}
