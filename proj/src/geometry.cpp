#include "sjd/geometry.hpp"

#include <cmath>

namespace sjd {

namespace {

constexpr complexd kI{0.0, 1.0};

double disk_P(complexd w) { return 1.0 - std::norm(w); }

// Real 2x2 block of the Jacobian of one complex output component with
// respect to one complex input, from the Wirtinger pair (df/dz, df/dconj(z)).
void put_wirtinger_block(Mat4& jac, int row, int col, complexd d, complexd dbar) {
  jac[row][col] = (d + dbar).real();
  jac[row][col + 1] = -(d - dbar).imag();
  jac[row + 1][col] = (d + dbar).imag();
  jac[row + 1][col + 1] = (d - dbar).real();
}

Mat4 zero_mat4() {
  Mat4 m{};
  return m;
}

}  // namespace

ModelParams::ModelParams(double k_, bool strict) : k(k_) {
  if (k <= 0.75)
    throw InvariantError("ModelParams: k must exceed 3/4");
  if (strict) {
    const double two_k = 2.0 * k;
    if (std::abs(two_k - std::round(two_k)) > 1e-12 || two_k < 2.0 - 1e-12)
      throw InvariantError("ModelParams: strict mode requires 2k in {2,3,...}");
  }
}

double kahler_potential(const SJDiskPoint& p, const ModelParams& params) {
  const complexd z = p.z, w = p.w.w;
  const double P = disk_P(w);
  const complexd quad =
      (2.0 * z * std::conj(z) + z * z * std::conj(w) + std::conj(z) * std::conj(z) * w) /
      (2.0 * P);
  return quad.real() - 2.0 * params.k * std::log(P);
}

complexd log_kernel(const SJDiskPoint& p, const SJDiskPoint& q,
                    const ModelParams& params) {
  const complexd z = p.z, w = p.w.w;
  const complexd zpc = std::conj(q.z), wpc = std::conj(q.w.w);
  const complexd one_minus = 1.0 - w * wpc;
  const complexd F =
      (2.0 * zpc * z + z * z * wpc + zpc * zpc * w) / (2.0 * one_minus);
  return -2.0 * params.k * std::log(one_minus) + F;
}

complexd kernel(const SJDiskPoint& p, const SJDiskPoint& q,
                const ModelParams& params) {
  return std::exp(log_kernel(p, q, params));
}

complexd log_kernel_fc(const FCPoint& p, const FCPoint& q,
                       const ModelParams& params) {
  const complexd eta = p.eta, w = p.w.w;
  const complexd etap = q.eta, wpc = std::conj(q.w.w);
  const complexd one_minus = 1.0 - w * wpc;
  const complexd zeta = eta - etap;
  const complexd two_F =
      2.0 * (std::conj(eta) * zeta + std::norm(etap)) -
      w * std::conj(eta) * std::conj(eta) - wpc * etap * etap +
      (-2.0 * std::norm(zeta) + w * std::conj(zeta) * std::conj(zeta) +
       wpc * zeta * zeta) / one_minus;
  return -2.0 * params.k * std::log(one_minus) + 0.5 * two_F;
}

complexd kernel_fc(const FCPoint& p, const FCPoint& q,
                   const ModelParams& params) {
  return std::exp(log_kernel_fc(p, q, params));
}

HermitianMetric2 metric_disk(const SJDiskPoint& p, const ModelParams& params) {
  const complexd w = p.w.w;
  const double P = disk_P(w);
  const complexd eta = fc_inverse(p).eta;
  HermitianMetric2 m;
  m.h[0][0] = 1.0 / P;
  m.h[0][1] = eta / P;
  m.h[1][0] = std::conj(eta) / P;
  m.h[1][1] = 2.0 * params.k / (P * P) + std::norm(eta) / P;
  return m;
}

HermitianMetric2 metric_fc(const FCPoint& p, const ModelParams& params) {
  const double P = disk_P(p.w.w);
  HermitianMetric2 m;
  m.h[0][0] = 1.0;
  m.h[0][1] = m.h[1][0] = 0.0;
  m.h[1][1] = 2.0 * params.k / (P * P);
  return m;
}

HermitianMetric2 metric_uhp(const SJUHPPoint& p, const ModelParams& params) {
  const complexd u = p.u, v = p.v.v;
  const double y = v.imag();
  // mu = (u - conj u)/(v - conj v) = Im(u)/Im(v), real.
  const double mu = u.imag() / y;
  const double c = 1.0 / y;
  HermitianMetric2 m;
  m.h[0][0] = c;
  m.h[0][1] = -c * mu;
  m.h[1][0] = -c * mu;
  m.h[1][1] = params.k / (2.0 * y * y) + c * mu * mu;
  return m;
}

RealTwoForm to_real_two_form(const HermitianMetric2& m) {
  // Complex differentials of the four real basis directions.
  static const std::array<std::array<complexd, 2>, 4> zs = {{
      {{1.0, 0.0}}, {{kI, 0.0}}, {{0.0, 1.0}}, {{0.0, kI}}}};
  RealTwoForm out{zero_mat4()};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      complexd hij = 0.0, hji = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          hij += m.h[a][b] * zs[i][a] * std::conj(zs[j][b]);
          hji += m.h[a][b] * zs[j][a] * std::conj(zs[i][b]);
        }
      const double v = (kI * (hij - hji)).real();
      out.m[i][j] = v;
      out.m[j][i] = -v;
    }
  }
  return out;
}

RealTwoForm pullback(const RealTwoForm& target, const Mat4& jacobian) {
  RealTwoForm out{zero_mat4()};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          s += jacobian[a][i] * target.m[a][b] * jacobian[b][j];
      out.m[i][j] = s;
    }
  return out;
}

Vec4 pack_point(complexd fiber, complexd base) {
  return {fiber.real(), fiber.imag(), base.real(), base.imag()};
}

std::pair<complexd, complexd> unpack_point(const Vec4& x) {
  return {complexd{x[0], x[1]}, complexd{x[2], x[3]}};
}

RealMap fc_map() {
  return RealMap{
      [](const Vec4& x) {
        auto [eta, w] = unpack_point(x);
        return pack_point(eta - w * std::conj(eta), w);
      },
      [](const Vec4& x) {
        auto [eta, w] = unpack_point(x);
        Mat4 j = zero_mat4();
        put_wirtinger_block(j, 0, 0, 1.0, -w);             // dz/d(eta)
        put_wirtinger_block(j, 0, 2, -std::conj(eta), 0);  // dz/dw
        put_wirtinger_block(j, 2, 2, 1.0, 0.0);
        return j;
      }};
}

RealMap fc1_map() {
  return RealMap{
      [](const Vec4& x) {
        auto [eta, v] = unpack_point(x);
        const complexd u = ((v + kI) * eta - (v - kI) * std::conj(eta)) / (2.0 * kI);
        return pack_point(u, v);
      },
      [](const Vec4& x) {
        auto [eta, v] = unpack_point(x);
        Mat4 j = zero_mat4();
        const complexd inv2i = 1.0 / (2.0 * kI);
        put_wirtinger_block(j, 0, 0, (v + kI) * inv2i, -(v - kI) * inv2i);
        put_wirtinger_block(j, 0, 2, (eta - std::conj(eta)) * inv2i, 0.0);
        put_wirtinger_block(j, 2, 2, 1.0, 0.0);
        return j;
      }};
}

RealMap partial_cayley_map() {
  return RealMap{
      [](const Vec4& x) {
        auto [u, v] = unpack_point(x);
        const complexd den = v + kI;
        return pack_point(2.0 * kI * u / den, (v - kI) / den);
      },
      [](const Vec4& x) {
        auto [u, v] = unpack_point(x);
        const complexd den = v + kI;
        Mat4 j = zero_mat4();
        put_wirtinger_block(j, 0, 0, 2.0 * kI / den, 0.0);
        put_wirtinger_block(j, 0, 2, -2.0 * kI * u / (den * den), 0.0);
        put_wirtinger_block(j, 2, 2, 2.0 * kI / (den * den), 0.0);
        return j;
      }};
}

RealMap act_disk_map(const JacobiElement& j) {
  return RealMap{
      [j](const Vec4& x) {
        auto [z, w] = unpack_point(x);
        const SJDiskPoint out = act_disk(j, SJDiskPoint{z, DiskPoint{w}});
        return pack_point(out.z, out.w.w);
      },
      [j](const Vec4& x) {
        auto [z, w] = unpack_point(x);
        const complexd a = j.g.a, b = j.g.b, alpha = j.alpha;
        const complexd den = std::conj(b) * w + std::conj(a);
        const complexd num = alpha - std::conj(alpha) * w + z;
        Mat4 jac = zero_mat4();
        put_wirtinger_block(jac, 0, 0, 1.0 / den, 0.0);
        put_wirtinger_block(jac, 0, 2,
                            (-std::conj(alpha) * den - num * std::conj(b)) /
                                (den * den),
                            0.0);
        put_wirtinger_block(jac, 2, 2, 1.0 / (den * den), 0.0);
        return jac;
      }};
}

RealMap act_fc_map(const JacobiElement& j) {
  return RealMap{
      [j](const Vec4& x) {
        auto [eta, w] = unpack_point(x);
        const FCPoint out = act_fc(j, FCPoint{eta, DiskPoint{w}});
        return pack_point(out.eta, out.w.w);
      },
      [j](const Vec4& x) {
        auto [eta, w] = unpack_point(x);
        (void)eta;
        const complexd den = std::conj(j.g.b) * w + std::conj(j.g.a);
        Mat4 jac = zero_mat4();
        put_wirtinger_block(jac, 0, 0, j.g.a, j.g.b);
        put_wirtinger_block(jac, 2, 2, 1.0 / (den * den), 0.0);
        return jac;
      }};
}

RealMap act_uhp_map(const SL2RElement& h, complexd alpha) {
  return RealMap{
      [h, alpha](const Vec4& x) {
        auto [u, v] = unpack_point(x);
        const SJUHPPoint out =
            act_uhp(h, alpha, SJUHPPoint{u, UpperHalfPlanePoint{v}});
        return pack_point(out.u, out.v.v);
      },
      [h, alpha](const Vec4& x) {
        auto [u, v] = unpack_point(x);
        const complexd den = h.c * v + h.d;
        const double m = alpha.real(), n = alpha.imag();
        Mat4 jac = zero_mat4();
        put_wirtinger_block(jac, 0, 0, 1.0 / den, 0.0);
        put_wirtinger_block(jac, 0, 2,
                            (n * den - (u + n * v + m) * h.c) / (den * den),
                            0.0);
        put_wirtinger_block(jac, 2, 2, 1.0 / (den * den), 0.0);
        return jac;
      }};
}

Mat4 finite_difference_jacobian(const std::function<Vec4(const Vec4&)>& f,
                                const Vec4& x, double step) {
  Mat4 j = zero_mat4();
  for (int col = 0; col < 4; ++col) {
    Vec4 xp = x, xm = x;
    xp[col] += step;
    xm[col] -= step;
    const Vec4 fp = f(xp), fm = f(xm);
    for (int row = 0; row < 4; ++row)
      j[row][col] = (fp[row] - fm[row]) / (2.0 * step);
  }
  return j;
}

double measure_density(Chart chart, const Vec4& point,
                       const ModelParams& params) {
  auto [fiber, base] = unpack_point(point);
  switch (chart) {
    case Chart::Disk: {
      const complexd z = fiber, w = base;
      const double P = disk_P(w);
      if (P <= 0.0) throw DomainError("measure_density: |w| >= 1");
      const complexd quad =
          2.0 * z * std::conj(z) + z * z * std::conj(w) +
          std::conj(z) * std::conj(z) * w;
      return std::pow(P, 2.0 * params.k) * std::exp(-quad.real() / (2.0 * P)) /
             (P * P * P);
    }
    case Chart::FC: {
      const complexd eta = fiber, w = base;
      const double P = disk_P(w);
      if (P <= 0.0) throw DomainError("measure_density: |w| >= 1");
      const complexd two_F = 2.0 * std::norm(eta) -
                             std::conj(w) * eta * eta -
                             w * std::conj(eta) * std::conj(eta);
      return std::pow(P, 2.0 * params.k) * std::exp(-0.5 * two_F.real()) /
             (P * P);
    }
    case Chart::UHP:
      throw DomainError("measure_density: no UHP chart density");
  }
  return 0.0;
}

std::pair<double, double> top_form_check(const FCPoint& p,
                                         const ModelParams& params) {
  const RealTwoForm omega0 = to_real_two_form(metric_fc(p, params));
  // omega ^ omega = 2 Pf(Omega) dV on four real coordinates.
  const Mat4& m = omega0.m;
  const double pf = m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2];
  const double top_coeff = 2.0 * pf;
  const double P = disk_P(p.w.w);
  const double nu_density = 1.0 / (P * P);
  return {top_coeff, -8.0 * params.k * nu_density};
}

DiffOpCoeffs diff_op_coeffs(const SJDiskPoint& p, const ModelParams& params) {
  const complexd z = p.z, w = p.w.w;
  const double k = params.k;
  DiffOpCoeffs c;
  c.a = {0.0, 1.0, 0.0};
  c.a_dag = {z, w, 0.0};
  c.k_minus = {0.0, 0.0, 1.0};
  c.k_zero = {k, 0.5 * z, w};
  c.k_plus = {0.5 * z * z + 2.0 * k * w, z * w, w * w};
  return c;
}

std::pair<std::array<complexd, 3>, std::array<complexd, 3>>
annihilator_residual(const SJDiskPoint& p, const ModelParams& params) {
  const complexd z = p.z, w = p.w.w;
  const double k = params.k;

  // Action of the generators on the coherent-state vector itself
  // (adjoint ordering relative to diff_op_coeffs): triples (const, d/dz, d/dw).
  const std::array<complexd, 3> a{z, w, 0.0};
  const std::array<complexd, 3> a_dag{0.0, 1.0, 0.0};
  const std::array<complexd, 3> k_plus{0.0, 0.0, 1.0};
  const std::array<complexd, 3> k_zero{k, 0.5 * z, w};
  const std::array<complexd, 3> k_minus{0.5 * z * z + 2.0 * k * w, z * w, w * w};

  auto combine = [&](complexd ca, complexd cad, complexd ckp, complexd ck0,
                     complexd ckm) {
    std::array<complexd, 3> r{};
    for (int i = 0; i < 3; ++i)
      r[i] = ca * a[i] + cad * a_dag[i] + ckp * k_plus[i] + ck0 * k_zero[i] +
             ckm * k_minus[i];
    return r;
  };

  // X = k a + (z^2/2 - k w) a' + z w K+ - z K0.  (The K+ coefficient z w is
  // forced by the defining linear system; with it the residual vanishes
  // identically.)
  const auto x = combine(k, 0.5 * z * z - k * w, z * w, -z, 0.0);
  // Y = z^3/2 a' + (2 k w + z^2) w K+ - (4 k w + z^2) K0 + 2 k K-.
  const auto y = combine(0.0, 0.5 * z * z * z, (2.0 * k * w + z * z) * w,
                         -(4.0 * k * w + z * z), 2.0 * k);
  return {x, y};
}

}  // namespace sjd
