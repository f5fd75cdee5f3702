#pragma once

#include <complex>
#include <stdexcept>

namespace sjd {

using complexd = std::complex<double>;

// Open-domain margin: points closer to the boundary than this are rejected,
// since every formula downstream divides by 1 - |w|^2 or v - conj(v).
inline constexpr double kBoundaryMargin = 1e-14;

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Point of the Siegel disk D_1 = { w : |w| < 1 }.
struct DiskPoint {
  complexd w;

  explicit DiskPoint(complexd w_) : w(w_) {
    if (std::abs(w) >= 1.0 - kBoundaryMargin)
      throw DomainError("DiskPoint: |w| must be < 1");
  }
};

/// Point of the Siegel upper half-plane X_1 = { v : Im v > 0 }.
struct UpperHalfPlanePoint {
  complexd v;

  explicit UpperHalfPlanePoint(complexd v_) : v(v_) {
    if (v.imag() <= kBoundaryMargin)
      throw DomainError("UpperHalfPlanePoint: Im v must be > 0");
  }
};

/// Point of the Siegel-Jacobi disk C x D_1 in the (z, w) chart.
struct SJDiskPoint {
  complexd z;
  DiskPoint w;

  SJDiskPoint(complexd z_, DiskPoint w_) : z(z_), w(w_) {}
  SJDiskPoint(complexd z_, complexd w_) : z(z_), w(w_) {}
};

/// Point of C x D_1 in the product (eta, w) chart.
struct FCPoint {
  complexd eta;
  DiskPoint w;

  FCPoint(complexd eta_, DiskPoint w_) : eta(eta_), w(w_) {}
  FCPoint(complexd eta_, complexd w_) : eta(eta_), w(w_) {}
};

/// Point of the Siegel-Jacobi upper half-plane C x X_1 in the (u, v) chart.
struct SJUHPPoint {
  complexd u;
  UpperHalfPlanePoint v;

  SJUHPPoint(complexd u_, UpperHalfPlanePoint v_) : u(u_), v(v_) {}
  SJUHPPoint(complexd u_, complexd v_) : u(u_), v(v_) {}
};

/// Eichler-Zagier real coordinates: v = x + i y, u = p v + q.
struct EZCoordinates {
  double x, y, p, q;

  EZCoordinates(double x_, double y_, double p_, double q_)
      : x(x_), y(y_), p(p_), q(q_) {
    if (y <= kBoundaryMargin)
      throw DomainError("EZCoordinates: y must be > 0");
  }
};

// Cayley transform between the disk and the upper half-plane.
DiskPoint cayley_to_disk(const UpperHalfPlanePoint& p);
UpperHalfPlanePoint cayley_to_uhp(const DiskPoint& p);

// Partial Cayley transform between the two Siegel-Jacobi charts:
//   w = (v - i)/(v + i),  z = 2 i u / (v + i).
SJDiskPoint partial_cayley(const SJUHPPoint& p);
SJUHPPoint partial_cayley_inv(const SJDiskPoint& p);

// The FC diffeomorphism splitting the Kaehler form of C x D_1 into the
// product form:  z = eta - w * conj(eta),  eta = (z + w conj(z))/(1 - |w|^2).
SJDiskPoint fc_forward(const FCPoint& p);
FCPoint fc_inverse(const SJDiskPoint& p);

// Half-plane analogue: 2 i u = (v + i) eta - (v - i) conj(eta).
SJUHPPoint fc1_forward(complexd eta, const UpperHalfPlanePoint& v);
complexd fc1_inverse(const SJUHPPoint& p);

EZCoordinates ez_decompose(const SJUHPPoint& p);
SJUHPPoint ez_compose(const EZCoordinates& c);

}  // namespace sjd
