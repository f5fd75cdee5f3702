#pragma once

#include "sjd/domains.hpp"

namespace sjd {

class InvariantError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Element of SU(1,1), stored as the first row (a, b) of
/// [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1.
///
/// Constructors renormalize when the pseudo-norm is within 1e-9 of 1 and
/// reject otherwise, so invariant drift stays bounded in long products.
struct SU11Element {
  complexd a, b;

  SU11Element(complexd a_, complexd b_);

  static SU11Element identity() { return SU11Element{1.0, 0.0}; }

  SU11Element inverse() const { return SU11Element{std::conj(a), -b}; }

  // R-linear action on C:  g . x = a x + b conj(x).
  complexd linear(complexd x) const { return a * x + b * std::conj(x); }
  // g^{-1} . x = conj(a) x - b conj(x).
  complexd linear_inv(complexd x) const {
    return std::conj(a) * x - b * std::conj(x);
  }

  // Moebius action on the disk:  w -> (a w + b) / (conj(b) w + conj(a)).
  complexd moebius(complexd w) const {
    return (a * w + b) / (std::conj(b) * w + std::conj(a));
  }

  friend SU11Element operator*(const SU11Element& g1, const SU11Element& g2) {
    return SU11Element{g1.a * g2.a + g1.b * std::conj(g2.b),
                       g1.a * g2.b + g1.b * std::conj(g2.a)};
  }
};

/// Element of SL(2, R) with a d - b c = 1.
struct SL2RElement {
  double a, b, c, d;

  SL2RElement(double a_, double b_, double c_, double d_);

  static SL2RElement identity() { return SL2RElement{1, 0, 0, 1}; }

  friend SL2RElement operator*(const SL2RElement& m1, const SL2RElement& m2) {
    return SL2RElement{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                       m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
  }
};

/// Jacobi group element (g, alpha, t): SU(1,1) part, Heisenberg translation,
/// center coordinate.  t is carried through composition only; no action
/// formula depends on it.
struct JacobiElement {
  SU11Element g;
  complexd alpha;
  double t;

  JacobiElement(SU11Element g_, complexd alpha_, double t_ = 0.0)
      : g(g_), alpha(alpha_), t(t_) {}

  static JacobiElement identity() {
    return JacobiElement{SU11Element::identity(), 0.0, 0.0};
  }
};

/// Conjugation C^{-1} M C taking SL(2,R) to SU(1,1).
SU11Element star_conjugate(const SL2RElement& m);

// Composition law:
//   (g1, a1, t1) o (g2, a2, t2)
//     = (g1 g2, g2^{-1}.a1 + a2, t1 + t2 + Im((g2^{-1}.a1) conj(a2))).
// With this law the chart actions below compose on the left:
//   act(compose(j1, j2), p) = act(j1, act(j2, p)).
JacobiElement compose(const JacobiElement& j1, const JacobiElement& j2);
JacobiElement inverse(const JacobiElement& j);

SJDiskPoint act_disk(const JacobiElement& j, const SJDiskPoint& p);
SJUHPPoint act_uhp(const SL2RElement& h, complexd alpha, const SJUHPPoint& p);
FCPoint act_fc(const JacobiElement& j, const FCPoint& p);

}  // namespace sjd
