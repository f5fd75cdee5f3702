#pragma once

#include <array>
#include <functional>

#include "sjd/domains.hpp"
#include "sjd/group.hpp"

namespace sjd {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Mat2c = std::array<std::array<complexd, 2>, 2>;

enum class Chart { Disk, FC, UHP };

/// Model parameters: Bargmann index k of the discrete-series weight.
struct ModelParams {
  double k = 1.0;

  // strict: require 2k in {2, 3, ...}; otherwise only k > 3/4 (Lambda1 > 0).
  explicit ModelParams(double k_ = 1.0, bool strict = false);

  // Normalization of the scalar product; carried for reference, not used
  // by any quadrature here.
  double lambda1() const { return (4.0 * k - 3.0) / (2.0 * M_PI * M_PI); }
};

/// Coefficient matrix h of a Kaehler metric, -i omega = sum h_ab dz_a ^ dconj(z_b),
/// in the (fiber, base) coordinate order of the chart.
struct HermitianMetric2 {
  Mat2c h;
};

/// The same two-form over real coordinates (Re z1, Im z1, Re z2, Im z2),
/// Omega_ij = omega(e_i, e_j).  Convention: dz ^ dconj(z) = -2i dRe z ^ dIm z.
struct RealTwoForm {
  Mat4 m;
};

/// Values at a point of the first-order differential operator representing a
/// Lie algebra generator: X = p + q_z d/dz + q_w d/dw.
struct DiffOp {
  complexd p, q_z, q_w;
};

struct DiffOpCoeffs {
  DiffOp a, a_dag, k_plus, k_zero, k_minus;
};

// --- potential and kernels -------------------------------------------------

double kahler_potential(const SJDiskPoint& p, const ModelParams& params);

// log K(p; conj q) for the reproducing kernel on C x D_1; kernels are
// evaluated in log form and exponentiated on demand (exp of quadratics
// overflows quickly for |z| > 20).
complexd log_kernel(const SJDiskPoint& p, const SJDiskPoint& q,
                    const ModelParams& params);
complexd kernel(const SJDiskPoint& p, const SJDiskPoint& q,
                const ModelParams& params);

complexd log_kernel_fc(const FCPoint& p, const FCPoint& q,
                       const ModelParams& params);
complexd kernel_fc(const FCPoint& p, const FCPoint& q,
                   const ModelParams& params);

// --- metrics and forms -----------------------------------------------------

HermitianMetric2 metric_disk(const SJDiskPoint& p, const ModelParams& params);
HermitianMetric2 metric_fc(const FCPoint& p, const ModelParams& params);
HermitianMetric2 metric_uhp(const SJUHPPoint& p, const ModelParams& params);

RealTwoForm to_real_two_form(const HermitianMetric2& m);

// phi^* omega = J^T Omega J with J the real Jacobian of phi at the base point.
RealTwoForm pullback(const RealTwoForm& target, const Mat4& jacobian);

// --- real-coordinate maps with Jacobians ------------------------------------

/// A smooth map between 4-real-dimensional charts together with its
/// analytic Jacobian.  Fiber coordinate first: (Re f, Im f, Re b, Im b).
struct RealMap {
  std::function<Vec4(const Vec4&)> apply;
  std::function<Mat4(const Vec4&)> jacobian;
};

Vec4 pack_point(complexd fiber, complexd base);
std::pair<complexd, complexd> unpack_point(const Vec4& x);

RealMap fc_map();                 // (eta, w) -> (z, w)
RealMap fc1_map();                // (eta, v) -> (u, v)
RealMap partial_cayley_map();     // (u, v)   -> (z, w)
RealMap act_disk_map(const JacobiElement& j);
RealMap act_fc_map(const JacobiElement& j);
RealMap act_uhp_map(const SL2RElement& h, complexd alpha);

Mat4 finite_difference_jacobian(const std::function<Vec4(const Vec4&)>& f,
                                const Vec4& x, double step = 1e-5);

// --- measures ---------------------------------------------------------------

// Integrand density of the invariant scalar product: weight times the
// coordinate density, per chart.
double measure_density(Chart chart, const Vec4& point,
                       const ModelParams& params);

// Coefficient of omega_0 ^ omega_0 as a top form versus -8k times the FC
// measure density.  The constant is reported, not asserted.
std::pair<double, double> top_form_check(const FCPoint& p,
                                         const ModelParams& params);

// --- Lie algebra differential operators --------------------------------------

DiffOpCoeffs diff_op_coeffs(const SJDiskPoint& p, const ModelParams& params);

// Residual coefficient triples (constant, d/dz, d/dw) of the two operator
// combinations X, Y that annihilate the coherent-state vector; both vanish
// identically on the Siegel-Jacobi disk.
std::pair<std::array<complexd, 3>, std::array<complexd, 3>>
annihilator_residual(const SJDiskPoint& p, const ModelParams& params);

}  // namespace sjd
