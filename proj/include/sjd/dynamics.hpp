#pragma once

#include <functional>
#include <vector>

#include "sjd/geometry.hpp"

namespace sjd {

class UnsupportedRegime : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SingularityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Coefficients of a hermitian Hamiltonian linear in the Jacobi generators:
/// eps_a a + conj(eps_a) a' + eps_0 K0 + eps_plus K+ + eps_minus K-,
/// with eps_minus = conj(eps_plus) and eps_0 real.
struct HamiltonianCoeffs {
  complexd eps_a;
  double eps_0;
  complexd eps_plus;
  complexd eps_minus;

  HamiltonianCoeffs(complexd eps_a_, double eps_0_, complexd eps_plus_)
      : eps_a(eps_a_), eps_0(eps_0_), eps_plus(eps_plus_),
        eps_minus(std::conj(eps_plus_)) {}
};

/// Fully independent coefficients (non-hermitian Hamiltonian).
struct NonHermitianCoeffs {
  complexd eps_a, eps_b, eps_0, eps_plus, eps_minus;

  static NonHermitianCoeffs from(const HamiltonianCoeffs& c) {
    return {c.eps_a, std::conj(c.eps_a), c.eps_0, c.eps_plus, c.eps_minus};
  }

  bool is_hermitian(double tol = 1e-12) const {
    return std::abs(eps_b - std::conj(eps_a)) <= tol &&
           std::abs(eps_0.imag()) <= tol &&
           std::abs(eps_minus - std::conj(eps_plus)) <= tol;
  }
};

/// Roots of the characteristic equation w^2 + eps_0 w + eps_+ eps_- = 0.
struct RiccatiRoots {
  double delta;  // eps_0^2 - 4 eps_+ eps_-
  complexd w1, w2;

  bool oscillatory() const { return delta > 0.0; }
};

RiccatiRoots riccati_roots(const HamiltonianCoeffs& c);

// --- equations of motion -----------------------------------------------------

/// Chart velocity (fiber_dot, base_dot) generated by a hermitian Hamiltonian.
std::array<complexd, 2> eom(Chart chart, const std::array<complexd, 2>& state,
                            const HamiltonianCoeffs& c);

/// Same for the general (non-hermitian) coefficient set; on the FC chart this
/// is the eta equation with the (1 - conj(w) w)^{-1} (R + S eta + T conj(eta))
/// right-hand side, which collapses to the decoupled hermitian form exactly
/// when the coefficients are hermitian.
std::array<complexd, 2> eom_general(Chart chart,
                                    const std::array<complexd, 2>& state,
                                    const NonHermitianCoeffs& c);

std::array<complexd, 2> eom_nonhermitian_fc(const FCPoint& p,
                                            const NonHermitianCoeffs& c);

// --- closed-form solvers ------------------------------------------------------

complexd solve_riccati_disk(complexd w0, const HamiltonianCoeffs& c, double t);
complexd solve_riccati_uhp(complexd v0, const HamiltonianCoeffs& c, double t);

/// Whether the closed-form disk trajectory started at w0 stays inside the
/// disk for all times: |C1/C2| > sqrt(w2/w1) with eps_0 > 0, 0 < delta < 1.
bool stays_in_disk(complexd w0, const HamiltonianCoeffs& c);

/// Variation-of-parameters solution of the z equation given w(t).
complexd solve_z_variation(const std::function<complexd(double)>& w_of_t,
                           const HamiltonianCoeffs& c, complexd z0, double t,
                           double quad_step = 1e-3);

/// Closed form of the decoupled eta equation,
/// eta(t) = M exp(i sqrt(delta) t / 2) + N exp(-i sqrt(delta) t / 2) + P.
/// M, N are determined directly from eta(0) through the real linear system;
/// q, r, alpha, beta carry the paper-style constants for reference.
struct EtaClosedForm {
  double delta;
  complexd M, N, P;
  double q, r;
  complexd alpha, beta;

  complexd eval(double t) const;
};

EtaClosedForm eta_closed_form(complexd eta0, const HamiltonianCoeffs& c);
complexd solve_eta_closed(complexd eta0, const HamiltonianCoeffs& c, double t);

// --- numeric integration ------------------------------------------------------

struct StepParams {
  double h = 1e-3;       // base RK4 step
  double tol = 1e-10;    // per-step Richardson error bound
  double min_h = 1e-12;  // below this the step is declared underflowed
};

enum class TrajectoryStatus { Complete, DomainExit, StepUnderflow };

struct Trajectory {
  Chart chart = Chart::Disk;
  std::vector<double> times;
  std::vector<std::array<complexd, 2>> states;
  std::vector<double> energy;         // NaN where coefficients are not hermitian
  std::vector<double> domain_margin;  // |w| on disk/fc charts, Im v on uhp
  std::vector<double> phi_d_cum;      // cumulative dynamical phase
  std::vector<double> phi_b_cum;      // cumulative Berry phase
  TrajectoryStatus status = TrajectoryStatus::Complete;
};

using CoeffsFn = std::function<NonHermitianCoeffs(double)>;

Trajectory integrate_numeric(Chart chart, const std::array<complexd, 2>& state0,
                             const CoeffsFn& coeffs_fn,
                             const std::vector<double>& t_grid,
                             const StepParams& sp, const ModelParams& params);

// --- energy, critical points, phases ------------------------------------------

double energy(Chart chart, const std::array<complexd, 2>& state,
              const HamiltonianCoeffs& c, const ModelParams& params);

/// Fixed point (w_c, eta_c) of the flow; also the critical point of the
/// energy function.  Requires delta > 0 and eps_plus != 0.
std::pair<complexd, complexd> critical_point(const HamiltonianCoeffs& c);

enum class CriticalPointType { PositiveDefinite, IndexTwo };

struct HessianInfo {
  double g;  // coefficient of w conj(w) in the Hessian function
  CriticalPointType classification;
};

HessianInfo hessian_classify(const HamiltonianCoeffs& c,
                             const ModelParams& params);

/// Berry phase along a discretized path, midpoint-rule line integral of the
/// connection one-form.  The realized sign convention is
/// phi_B = -Im integral of (d f) contracted with the path velocity, and the
/// two chart expressions agree including sign.
double berry_phase_fc(const std::vector<FCPoint>& path,
                      const ModelParams& params);
double berry_phase_disk(const std::vector<SJDiskPoint>& path,
                        const ModelParams& params);

enum class QuadRule { Trapezoid, Midpoint };

/// phi_D = -integral of the energy along the trajectory.
double dynamical_phase(const Trajectory& traj, const HamiltonianCoeffs& c,
                       const ModelParams& params,
                       QuadRule rule = QuadRule::Trapezoid);

// --- geodesics -----------------------------------------------------------------

/// Geodesic of the Siegel disk through 0: w(t) = B tanh(t |B|) / |B|.
complexd geodesic_disk(complexd B, double t);

/// Max absolute residuals of the two geodesic equations on a uniformly
/// sampled (z, w) path, derivatives by central differences.
std::pair<double, double> geodesic_residual(const std::vector<complexd>& z,
                                            const std::vector<complexd>& w,
                                            double dt,
                                            const ModelParams& params);

}  // namespace sjd
