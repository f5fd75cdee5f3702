#include "sjd/domains.hpp"

namespace sjd {

namespace {
constexpr complexd kI{0.0, 1.0};
}

DiskPoint cayley_to_disk(const UpperHalfPlanePoint& p) {
  return DiskPoint{(p.v - kI) / (p.v + kI)};
}

UpperHalfPlanePoint cayley_to_uhp(const DiskPoint& p) {
  return UpperHalfPlanePoint{kI * (1.0 + p.w) / (1.0 - p.w)};
}

SJDiskPoint partial_cayley(const SJUHPPoint& p) {
  const complexd den = p.v.v + kI;
  return SJDiskPoint{2.0 * kI * p.u / den, DiskPoint{(p.v.v - kI) / den}};
}

SJUHPPoint partial_cayley_inv(const SJDiskPoint& p) {
  const UpperHalfPlanePoint v = cayley_to_uhp(p.w);
  // z = 2 i u / (v + i)  =>  u = z (v + i) / (2 i)
  return SJUHPPoint{p.z * (v.v + kI) / (2.0 * kI), v};
}

SJDiskPoint fc_forward(const FCPoint& p) {
  return SJDiskPoint{p.eta - p.w.w * std::conj(p.eta), p.w};
}

FCPoint fc_inverse(const SJDiskPoint& p) {
  const double P = 1.0 - std::norm(p.w.w);
  return FCPoint{(p.z + p.w.w * std::conj(p.z)) / P, p.w};
}

SJUHPPoint fc1_forward(complexd eta, const UpperHalfPlanePoint& v) {
  const complexd u = ((v.v + kI) * eta - (v.v - kI) * std::conj(eta)) / (2.0 * kI);
  return SJUHPPoint{u, v};
}

complexd fc1_inverse(const SJUHPPoint& p) {
  const complexd u = p.u, v = p.v.v;
  return (u * std::conj(v) - std::conj(u) * v + kI * (std::conj(u) - u)) /
         (std::conj(v) - v);
}

EZCoordinates ez_decompose(const SJUHPPoint& p) {
  const double x = p.v.v.real(), y = p.v.v.imag();
  const double pp = p.u.imag() / y;
  const double q = p.u.real() - pp * x;
  return EZCoordinates{x, y, pp, q};
}

SJUHPPoint ez_compose(const EZCoordinates& c) {
  const complexd v{c.x, c.y};
  return SJUHPPoint{c.p * v + c.q, UpperHalfPlanePoint{v}};
}

}  // namespace sjd
