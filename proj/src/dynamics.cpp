#include "sjd/dynamics.hpp"

#include <cmath>
#include <limits>

namespace sjd {

namespace {

constexpr complexd kI{0.0, 1.0};
constexpr double kTiny = 1e-14;
constexpr double kDomainGuard = 1e-10;

double disk_P(complexd w) { return 1.0 - std::norm(w); }

std::array<complexd, 2> velocity(Chart chart, const std::array<complexd, 2>& s,
                                 const NonHermitianCoeffs& c) {
  switch (chart) {
    case Chart::Disk: {
      const complexd z = s[0], w = s[1];
      const complexd z_dot =
          -kI * (c.eps_a + c.eps_b * w + (0.5 * c.eps_0 + c.eps_plus * w) * z);
      const complexd w_dot =
          -kI * (c.eps_minus + c.eps_0 * w + c.eps_plus * w * w);
      return {z_dot, w_dot};
    }
    case Chart::FC: {
      const complexd eta = s[0], w = s[1];
      const complexd wc = std::conj(w);
      const complexd R =
          c.eps_a + (c.eps_b - std::conj(c.eps_a)) * w -
          std::conj(c.eps_b) * wc * w;
      const complexd S = 0.5 * c.eps_0 +
                         (c.eps_plus - std::conj(c.eps_minus)) * w -
                         0.5 * std::conj(c.eps_0) * wc * w;
      const complexd T = c.eps_minus +
                         0.5 * (c.eps_0 - std::conj(c.eps_0)) * w -
                         std::conj(c.eps_plus) * wc * w;
      const complexd eta_dot =
          -kI * (R + S * eta + T * std::conj(eta)) / (1.0 - wc * w);
      const complexd w_dot =
          -kI * (c.eps_minus + c.eps_0 * w + c.eps_plus * w * w);
      return {eta_dot, w_dot};
    }
    case Chart::UHP: {
      const complexd u = s[0], v = s[1];
      const complexd esum = c.eps_0 + c.eps_plus + c.eps_minus;
      const complexd v_dot = -0.5 * (esum * v * v +
                                     2.0 * kI * (c.eps_minus - c.eps_plus) * v +
                                     (c.eps_0 - c.eps_minus - c.eps_plus));
      const complexd u_dot =
          -0.5 * (c.eps_a * (v + kI) + c.eps_b * (v - kI) +
                  (esum * v + kI * (c.eps_minus - c.eps_plus)) * u);
      return {u_dot, v_dot};
    }
  }
  return {};
}

std::array<complexd, 2> rk4_step(Chart chart, const std::array<complexd, 2>& y,
                                 double t, double h, const CoeffsFn& fn) {
  auto f = [&](double tt, const std::array<complexd, 2>& s) {
    return velocity(chart, s, fn(tt));
  };
  auto add = [](const std::array<complexd, 2>& a,
                const std::array<complexd, 2>& b, double s) {
    return std::array<complexd, 2>{a[0] + s * b[0], a[1] + s * b[1]};
  };
  const auto k1 = f(t, y);
  const auto k2 = f(t + 0.5 * h, add(y, k1, 0.5 * h));
  const auto k3 = f(t + 0.5 * h, add(y, k2, 0.5 * h));
  const auto k4 = f(t + h, add(y, k3, h));
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * (k2[0] + k3[0]) + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * (k2[1] + k3[1]) + k4[1])};
}

double domain_margin_of(Chart chart, const std::array<complexd, 2>& s) {
  return chart == Chart::UHP ? s[1].imag() : std::abs(s[1]);
}

bool inside_domain(Chart chart, const std::array<complexd, 2>& s) {
  if (chart == Chart::UHP) return s[1].imag() > kDomainGuard;
  return std::abs(s[1]) <= 1.0 - kDomainGuard;
}

// Berry one-form increment between two nearby fc-chart states, midpoint rule.
double berry_increment_fc(const std::array<complexd, 2>& s0,
                          const std::array<complexd, 2>& s1, double k) {
  const complexd eta = 0.5 * (s0[0] + s1[0]);
  const complexd w = 0.5 * (s0[1] + s1[1]);
  const double P = disk_P(w);
  const complexd d_eta = s1[0] - s0[0];
  const complexd d_w = s1[1] - s0[1];
  const complexd etab = std::conj(eta), wb = std::conj(w);
  const complexd x =
      (2.0 * k * wb / P - 0.5 * etab * etab) * d_w + (etab + wb * eta) * d_eta;
  return -x.imag();
}

std::array<complexd, 2> to_fc_state(Chart chart,
                                    const std::array<complexd, 2>& s) {
  switch (chart) {
    case Chart::FC:
      return s;
    case Chart::Disk: {
      const FCPoint p = fc_inverse(SJDiskPoint{s[0], DiskPoint{s[1]}});
      return {p.eta, p.w.w};
    }
    case Chart::UHP: {
      const SJDiskPoint d =
          partial_cayley(SJUHPPoint{s[0], UpperHalfPlanePoint{s[1]}});
      const FCPoint p = fc_inverse(d);
      return {p.eta, p.w.w};
    }
  }
  return {};
}

}  // namespace

RiccatiRoots riccati_roots(const HamiltonianCoeffs& c) {
  const complexd prod = c.eps_plus * c.eps_minus;
  if (std::abs(prod.imag()) > 1e-12 * (1.0 + std::abs(prod)))
    throw InvariantError("riccati_roots: eps_+ eps_- must be real");
  const double delta = c.eps_0 * c.eps_0 - 4.0 * prod.real();
  const complexd sqrt_delta =
      delta >= 0.0 ? complexd{std::sqrt(delta), 0.0}
                   : complexd{0.0, std::sqrt(-delta)};
  return RiccatiRoots{delta, 0.5 * (-c.eps_0 + sqrt_delta),
                      0.5 * (-c.eps_0 - sqrt_delta)};
}

std::array<complexd, 2> eom(Chart chart, const std::array<complexd, 2>& state,
                            const HamiltonianCoeffs& c) {
  return velocity(chart, state, NonHermitianCoeffs::from(c));
}

std::array<complexd, 2> eom_general(Chart chart,
                                    const std::array<complexd, 2>& state,
                                    const NonHermitianCoeffs& c) {
  return velocity(chart, state, c);
}

std::array<complexd, 2> eom_nonhermitian_fc(const FCPoint& p,
                                            const NonHermitianCoeffs& c) {
  return velocity(Chart::FC, {p.eta, p.w.w}, c);
}

complexd solve_riccati_disk(complexd w0, const HamiltonianCoeffs& c, double t) {
  if (std::abs(c.eps_plus) < kTiny) {
    // Linear branch: i w' = eps_- + eps_0 w.
    if (std::abs(c.eps_0) < kTiny) return w0 - kI * c.eps_minus * t;
    const complexd shift = c.eps_minus / c.eps_0;
    return std::exp(-kI * c.eps_0 * t) * (w0 + shift) - shift;
  }
  const RiccatiRoots r = riccati_roots(c);
  if (r.delta <= 0.0)
    throw UnsupportedRegime(
        "solve_riccati_disk: delta <= 0, use the numeric integrator");
  const complexd denom_f = r.w1 - c.eps_plus * w0;
  if (std::abs(denom_f) < kTiny) return w0;  // fixed point w1 / eps_+
  const complexd f = (c.eps_plus * w0 - r.w2) / denom_f;
  const complexd phase = std::exp(kI * std::sqrt(r.delta) * t);
  const complexd den = 1.0 + f * phase;
  if (std::abs(den) < 1e-12)
    throw SingularityError("solve_riccati_disk: trajectory pole");
  return (f * r.w1 * phase + r.w2) / (c.eps_plus * den);
}

bool stays_in_disk(complexd w0, const HamiltonianCoeffs& c) {
  const RiccatiRoots r = riccati_roots(c);
  if (r.delta <= 0.0 || c.eps_0 <= 0.0)
    throw UnsupportedRegime("stays_in_disk: requires delta > 0 and eps_0 > 0");
  const double delta_ratio =
      4.0 * (c.eps_plus * c.eps_minus).real() / (c.eps_0 * c.eps_0);
  if (delta_ratio <= 0.0 || delta_ratio >= 1.0)
    throw UnsupportedRegime("stays_in_disk: requires 0 < 4 e+ e- / e0^2 < 1");
  const complexd denom_f = r.w1 - c.eps_plus * w0;
  if (std::abs(denom_f) < kTiny) return true;  // pinned at the interior root
  const double f_mag = std::abs((c.eps_plus * w0 - r.w2) / denom_f);
  const double threshold =
      (1.0 + std::sqrt(1.0 - delta_ratio)) / std::sqrt(delta_ratio);
  return f_mag > threshold;
}

complexd solve_riccati_uhp(complexd v0, const HamiltonianCoeffs& c, double t) {
  const complexd A = 0.5 * (c.eps_minus + c.eps_plus + c.eps_0);
  const complexd B = kI * (c.eps_minus - c.eps_plus);
  const complexd C = 0.5 * (c.eps_0 - c.eps_minus - c.eps_plus);
  if (std::abs(A) < kTiny) {
    // -v' = B v + C, affine linear.
    if (std::abs(B) < kTiny) return v0 - C * t;
    const complexd shift = C / B;
    return std::exp(-B * t) * (v0 + shift) - shift;
  }
  const RiccatiRoots r = riccati_roots(c);
  if (r.delta <= 0.0)
    throw UnsupportedRegime(
        "solve_riccati_uhp: delta <= 0, use the numeric integrator");
  const double sqrt_delta = std::sqrt(r.delta);
  const complexd v1 = 0.5 * (c.eps_plus - c.eps_minus + sqrt_delta);
  const complexd v2 = 0.5 * (c.eps_plus - c.eps_minus - sqrt_delta);
  const complexd denom_rho = kI * v1 - A * v0;
  if (std::abs(denom_rho) < kTiny) return v0;  // fixed point i v1 / A
  const complexd rho = (A * v0 - kI * v2) / denom_rho;
  const complexd phase = std::exp(kI * sqrt_delta * t);
  const complexd den = rho * phase + 1.0;
  if (std::abs(den) < 1e-12)
    throw SingularityError("solve_riccati_uhp: trajectory pole");
  return kI * (v1 * rho * phase + v2) / (A * den);
}

complexd solve_z_variation(const std::function<complexd(double)>& w_of_t,
                           const HamiltonianCoeffs& c, complexd z0, double t,
                           double quad_step) {
  // Accumulate I_B = int B dt and I_C = int A exp(i I_B) dt with RK4, then
  // z(t) = exp(-i I_B) (z0 - i I_C).
  auto rhs = [&](double s, const std::array<complexd, 2>& y) {
    const complexd w = w_of_t(s);
    const complexd A = c.eps_a + std::conj(c.eps_a) * w;
    const complexd B = 0.5 * c.eps_0 + c.eps_plus * w;
    return std::array<complexd, 2>{B, A * std::exp(kI * y[0])};
  };
  std::array<complexd, 2> y{0.0, 0.0};
  const double dir = t >= 0.0 ? 1.0 : -1.0;
  double s = 0.0;
  const double remaining_total = std::abs(t);
  const int n = std::max(1, static_cast<int>(std::ceil(remaining_total / quad_step)));
  const double h = dir * remaining_total / n;
  for (int i = 0; i < n; ++i) {
    const auto k1 = rhs(s, y);
    const auto k2 = rhs(s + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
    const auto k3 = rhs(s + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
    const auto k4 = rhs(s + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
    y[0] += h / 6.0 * (k1[0] + 2.0 * (k2[0] + k3[0]) + k4[0]);
    y[1] += h / 6.0 * (k1[1] + 2.0 * (k2[1] + k3[1]) + k4[1]);
    s += h;
  }
  return std::exp(-kI * y[0]) * (z0 - kI * y[1]);
}

complexd EtaClosedForm::eval(double t) const {
  const double omega = 0.5 * std::sqrt(delta);
  return M * std::exp(kI * omega * t) + N * std::exp(-kI * omega * t) + P;
}

EtaClosedForm eta_closed_form(complexd eta0, const HamiltonianCoeffs& c) {
  const RiccatiRoots roots = riccati_roots(c);
  if (std::abs(c.eps_plus) < kTiny || roots.delta <= 0.0)
    throw UnsupportedRegime(
        "eta_closed_form: requires eps_+ != 0 and delta > 0");
  EtaClosedForm out;
  out.delta = roots.delta;
  out.P = (4.0 * c.eps_minus * std::conj(c.eps_a) - 2.0 * c.eps_0 * c.eps_a) /
          roots.delta;
  // Mode amplitudes from the R-linear constraint
  //   M - (w2 / eps_+) conj(M) = eta0 - P, N = eta0 - P - M,
  // the closed-form solution of the underlying real linear system.
  const complexd xi0 = eta0 - out.P;
  const complexd cc = -roots.w2 / std::conj(c.eps_minus);
  out.M = (xi0 + cc * std::conj(xi0)) / (1.0 - std::norm(cc));
  out.N = xi0 - out.M;
  // Paper-style constants, kept for reference/reporting.
  out.q = (-0.25 * c.eps_0 * (c.eps_a + std::conj(c.eps_a)) +
           0.5 * (c.eps_a * c.eps_plus + std::conj(c.eps_a) * c.eps_minus))
              .real();
  out.r = 0.5 * (c.eps_minus + c.eps_plus - c.eps_0).real();
  out.alpha = std::abs(out.q) > kTiny
                  ? kI * (out.r / out.q) * xi0
                  : complexd{0.0, 0.0};
  const complexd beta_den = kI * out.q * (c.eps_minus + roots.w2);
  out.beta = std::abs(beta_den) > kTiny
                 ? out.N * out.r * std::sqrt(roots.delta) / beta_den
                 : complexd{0.0, 0.0};
  return out;
}

complexd solve_eta_closed(complexd eta0, const HamiltonianCoeffs& c, double t) {
  if (std::abs(c.eps_plus) < kTiny) {
    // i eta' = eps_a + eps_0/2 eta, elementary.
    if (std::abs(c.eps_0) < kTiny) return eta0 - kI * c.eps_a * t;
    const complexd shift = 2.0 * c.eps_a / c.eps_0;
    return std::exp(-0.5 * kI * c.eps_0 * t) * (eta0 + shift) - shift;
  }
  return eta_closed_form(eta0, c).eval(t);
}

Trajectory integrate_numeric(Chart chart, const std::array<complexd, 2>& state0,
                             const CoeffsFn& coeffs_fn,
                             const std::vector<double>& t_grid,
                             const StepParams& sp, const ModelParams& params) {
  if (t_grid.size() < 1) throw InvariantError("integrate_numeric: empty grid");
  for (size_t i = 1; i < t_grid.size(); ++i)
    if (t_grid[i] <= t_grid[i - 1])
      throw InvariantError("integrate_numeric: grid must increase strictly");
  if (!inside_domain(chart, state0))
    throw DomainError("integrate_numeric: initial state outside chart domain");

  Trajectory traj;
  traj.chart = chart;

  auto record = [&](double t, const std::array<complexd, 2>& s) {
    const NonHermitianCoeffs nc = coeffs_fn(t);
    double e = std::numeric_limits<double>::quiet_NaN();
    if (nc.is_hermitian(1e-12)) {
      HamiltonianCoeffs hc{nc.eps_a, nc.eps_0.real(), nc.eps_plus};
      e = energy(chart, s, hc, params);
    }
    double phi_d = 0.0, phi_b = 0.0;
    if (!traj.times.empty()) {
      const double dt = t - traj.times.back();
      const double e_prev = traj.energy.back();
      phi_d = traj.phi_d_cum.back() -
              (std::isnan(e) || std::isnan(e_prev)
                   ? 0.0
                   : 0.5 * (e + e_prev) * dt);
      phi_b = traj.phi_b_cum.back() +
              berry_increment_fc(to_fc_state(chart, traj.states.back()),
                                 to_fc_state(chart, s), params.k);
    }
    traj.times.push_back(t);
    traj.states.push_back(s);
    traj.energy.push_back(e);
    traj.domain_margin.push_back(domain_margin_of(chart, s));
    traj.phi_d_cum.push_back(phi_d);
    traj.phi_b_cum.push_back(phi_b);
  };

  record(t_grid[0], state0);
  std::array<complexd, 2> y = state0;
  double h = sp.h;

  for (size_t gi = 1; gi < t_grid.size(); ++gi) {
    double t = t_grid[gi - 1];
    const double t_end = t_grid[gi];
    while (t < t_end) {
      const double step = std::min(h, t_end - t);
      const auto full = rk4_step(chart, y, t, step, coeffs_fn);
      auto half = rk4_step(chart, y, t, 0.5 * step, coeffs_fn);
      half = rk4_step(chart, half, t + 0.5 * step, 0.5 * step, coeffs_fn);
      const double err =
          std::max(std::abs(half[0] - full[0]), std::abs(half[1] - full[1])) /
          15.0;
      if (err > sp.tol && step > sp.min_h) {
        h = 0.5 * step;
        if (h < sp.min_h) {
          traj.status = TrajectoryStatus::StepUnderflow;
          return traj;
        }
        continue;
      }
      if (!inside_domain(chart, half)) {
        traj.status = TrajectoryStatus::DomainExit;
        return traj;
      }
      y = half;
      t += step;
      if (err < 0.01 * sp.tol) h = std::min(2.0 * h, sp.h);
    }
    record(t_end, y);
  }
  return traj;
}

double energy(Chart chart, const std::array<complexd, 2>& state,
              const HamiltonianCoeffs& c, const ModelParams& params) {
  switch (chart) {
    case Chart::FC: {
      const complexd eta = state[0], w = state[1];
      const double P = disk_P(w);
      if (P <= 0.0) throw DomainError("energy: |w| >= 1");
      const complexd h_eta =
          std::conj(c.eps_a) * eta + c.eps_a * std::conj(eta) +
          0.5 * (c.eps_plus * eta * eta +
                 c.eps_minus * std::conj(eta) * std::conj(eta) +
                 c.eps_0 * std::norm(eta));
      const complexd h_w = params.k * c.eps_0 +
                           2.0 * params.k / P *
                               (c.eps_plus * w + c.eps_minus * std::conj(w) +
                                c.eps_0 * std::norm(w));
      return (h_eta + h_w).real();
    }
    case Chart::Disk: {
      const complexd z = state[0], w = state[1];
      const double P = disk_P(w);
      if (P <= 0.0) throw DomainError("energy: |w| >= 1");
      const complexd etab =
          std::conj((z + w * std::conj(z)) / P);
      const complexd h =
          params.k * c.eps_0 + std::conj(c.eps_a) * z +
          c.eps_plus * (2.0 * params.k * w + 0.5 * z * z) +
          (c.eps_a + std::conj(c.eps_a) * w +
           (0.5 * c.eps_0 + c.eps_plus * w) * z) * etab +
          (c.eps_minus + c.eps_0 * w + c.eps_plus * w * w) *
              (0.5 * etab * etab + 2.0 * params.k * std::conj(w) / P);
      return h.real();
    }
    case Chart::UHP: {
      const SJDiskPoint d =
          partial_cayley(SJUHPPoint{state[0], UpperHalfPlanePoint{state[1]}});
      return energy(Chart::Disk, {d.z, d.w.w}, c, params);
    }
  }
  return 0.0;
}

std::pair<complexd, complexd> critical_point(const HamiltonianCoeffs& c) {
  const RiccatiRoots r = riccati_roots(c);
  if (r.delta <= 0.0 || std::abs(c.eps_plus) < kTiny)
    throw UnsupportedRegime("critical_point: requires delta > 0, eps_+ != 0");
  const complexd w_c = (-c.eps_0 + std::sqrt(r.delta)) / (2.0 * c.eps_plus);
  if (std::abs(w_c) >= 1.0)
    throw UnsupportedRegime(
        "critical_point: the stationary base point lies outside the disk");
  const complexd eta_c =
      2.0 * (2.0 * std::conj(c.eps_a) * c.eps_minus - c.eps_a * c.eps_0) /
      r.delta;
  return {w_c, eta_c};
}

HessianInfo hessian_classify(const HamiltonianCoeffs& c,
                             const ModelParams& params) {
  const RiccatiRoots r = riccati_roots(c);
  if (r.delta <= 0.0)
    throw UnsupportedRegime("hessian_classify: requires delta > 0");
  const double sqrt_delta = std::sqrt(r.delta);
  const double ratio =
      4.0 * (c.eps_plus * c.eps_minus).real() / (c.eps_0 - sqrt_delta);
  const double g = params.k / (2.0 * sqrt_delta) * ratio * ratio;
  const double p = 0.5 * c.eps_0;
  const double m = c.eps_minus.real();
  return HessianInfo{g, p + 2.0 * m > 0.0
                            ? CriticalPointType::PositiveDefinite
                            : CriticalPointType::IndexTwo};
}

double berry_phase_fc(const std::vector<FCPoint>& path,
                      const ModelParams& params) {
  double phi = 0.0;
  for (size_t i = 1; i < path.size(); ++i) {
    const complexd eta = 0.5 * (path[i - 1].eta + path[i].eta);
    const complexd w = 0.5 * (path[i - 1].w.w + path[i].w.w);
    const double P = disk_P(w);
    if (P <= 0.0) throw DomainError("berry_phase_fc: path leaves the disk");
    const complexd etab = std::conj(eta), wb = std::conj(w);
    const complexd x =
        (2.0 * params.k * wb / P - 0.5 * etab * etab) *
            (path[i].w.w - path[i - 1].w.w) +
        (etab + wb * eta) * (path[i].eta - path[i - 1].eta);
    phi -= x.imag();
  }
  return phi;
}

double berry_phase_disk(const std::vector<SJDiskPoint>& path,
                        const ModelParams& params) {
  double phi = 0.0;
  for (size_t i = 1; i < path.size(); ++i) {
    const complexd z = 0.5 * (path[i - 1].z + path[i].z);
    const complexd w = 0.5 * (path[i - 1].w.w + path[i].w.w);
    const double P = disk_P(w);
    if (P <= 0.0) throw DomainError("berry_phase_disk: path leaves the disk");
    const complexd etab = std::conj((z + w * std::conj(z)) / P);
    const complexd x =
        etab * (path[i].z - path[i - 1].z) +
        (0.5 * etab * etab + 2.0 * params.k * std::conj(w) / P) *
            (path[i].w.w - path[i - 1].w.w);
    phi -= x.imag();
  }
  return phi;
}

double dynamical_phase(const Trajectory& traj, const HamiltonianCoeffs& c,
                       const ModelParams& params, QuadRule rule) {
  double phi = 0.0;
  for (size_t i = 1; i < traj.times.size(); ++i) {
    const double dt = traj.times[i] - traj.times[i - 1];
    if (rule == QuadRule::Trapezoid) {
      phi -= 0.5 * (traj.energy[i] + traj.energy[i - 1]) * dt;
    } else {
      const std::array<complexd, 2> mid{
          0.5 * (traj.states[i][0] + traj.states[i - 1][0]),
          0.5 * (traj.states[i][1] + traj.states[i - 1][1])};
      phi -= energy(traj.chart, mid, c, params) * dt;
    }
  }
  return phi;
}

complexd geodesic_disk(complexd B, double t) {
  const double mag = std::abs(B);
  if (mag == 0.0) return 0.0;
  return B * std::tanh(t * mag) / mag;
}

std::pair<double, double> geodesic_residual(const std::vector<complexd>& z,
                                            const std::vector<complexd>& w,
                                            double dt,
                                            const ModelParams& params) {
  if (z.size() != w.size() || z.size() < 3)
    throw InvariantError("geodesic_residual: need >= 3 aligned samples");
  const double k = params.k;
  double r1_max = 0.0, r2_max = 0.0;
  for (size_t i = 1; i + 1 < z.size(); ++i) {
    const complexd zd = (z[i + 1] - z[i - 1]) / (2.0 * dt);
    const complexd wd = (w[i + 1] - w[i - 1]) / (2.0 * dt);
    const complexd zdd = (z[i + 1] - 2.0 * z[i] + z[i - 1]) / (dt * dt);
    const complexd wdd = (w[i + 1] - 2.0 * w[i] + w[i - 1]) / (dt * dt);
    const double P = disk_P(w[i]);
    const complexd etab =
        std::conj((z[i] + w[i] * std::conj(z[i])) / P);
    const complexd wb = std::conj(w[i]);
    const complexd r1 = 2.0 * k * zdd - etab * zd * zd +
                        2.0 * (2.0 * k * wb / P - etab * etab) * zd * wd -
                        etab * etab * etab * wd * wd;
    const complexd r2 = 2.0 * k * wdd + zd * zd + 2.0 * etab * zd * wd +
                        (4.0 * k * wb / P + etab * etab) * wd * wd;
    r1_max = std::max(r1_max, std::abs(r1));
    r2_max = std::max(r2_max, std::abs(r2));
  }
  return {r1_max, r2_max};
}

}  // namespace sjd
