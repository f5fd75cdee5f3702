#include "sjd/group.hpp"

#include <cassert>
#include <cmath>

namespace sjd {

namespace {
constexpr complexd kI{0.0, 1.0};
constexpr double kRenormTol = 1e-9;
constexpr double kInvariantTol = 1e-12;
}  // namespace

SU11Element::SU11Element(complexd a_, complexd b_) : a(a_), b(b_) {
  const double p = std::norm(a) - std::norm(b);
  if (std::abs(p - 1.0) > kRenormTol)
    throw InvariantError("SU11Element: |a|^2 - |b|^2 != 1");
  if (std::abs(p - 1.0) > kInvariantTol) {
    const double s = 1.0 / std::sqrt(p);
    a *= s;
    b *= s;
  }
}

SL2RElement::SL2RElement(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  if (std::abs(a * d - b * c - 1.0) > kRenormTol)
    throw InvariantError("SL2RElement: ad - bc != 1");
}

SU11Element star_conjugate(const SL2RElement& m) {
  // C = [[i, i], [-1, 1]],  C^{-1} = 1/(2i) [[1, -i], [1, i]].
  // First row of C^{-1} M C:
  //   alpha = ((a + d) + i (b - c)) / 2
  //   beta  = ((a - d) - i (b + c)) / 2
  const complexd alpha = 0.5 * complexd{m.a + m.d, m.b - m.c};
  const complexd beta = 0.5 * complexd{m.a - m.d, -(m.b + m.c)};
  return SU11Element{alpha, beta};
}

JacobiElement compose(const JacobiElement& j1, const JacobiElement& j2) {
  const complexd shifted = j2.g.linear_inv(j1.alpha);
  return JacobiElement{j1.g * j2.g, shifted + j2.alpha,
                       j1.t + j2.t + std::imag(shifted * std::conj(j2.alpha))};
}

JacobiElement inverse(const JacobiElement& j) {
  return JacobiElement{j.g.inverse(), -j.g.linear(j.alpha), -j.t};
}

SJDiskPoint act_disk(const JacobiElement& j, const SJDiskPoint& p) {
  const complexd den = std::conj(j.g.b) * p.w.w + std::conj(j.g.a);
  assert(std::abs(den) > 1e-14);
  return SJDiskPoint{
      (j.alpha - std::conj(j.alpha) * p.w.w + p.z) / den,
      DiskPoint{(j.g.a * p.w.w + j.g.b) / den}};
}

SJUHPPoint act_uhp(const SL2RElement& h, complexd alpha, const SJUHPPoint& p) {
  const complexd den = h.c * p.v.v + h.d;
  assert(std::abs(den) > 1e-14);
  const double m = alpha.real(), n = alpha.imag();
  return SJUHPPoint{(p.u + n * p.v.v + m) / den,
                    UpperHalfPlanePoint{(h.a * p.v.v + h.b) / den}};
}

FCPoint act_fc(const JacobiElement& j, const FCPoint& p) {
  return FCPoint{j.g.linear(p.eta + j.alpha),
                 DiskPoint{j.g.moebius(p.w.w)}};
}

}  // namespace sjd
