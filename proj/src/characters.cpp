#include "holr/characters.hpp"

#include <cmath>

namespace holr {

namespace {

bool in_window(cplx v, double singular) {
  double r = std::abs(v);
  return std::isfinite(v.real()) && std::isfinite(v.imag()) && r > singular && r < 1.0 / singular;
}

}  // namespace

bool WeylChar::valid(double singular) const {
  return in_window(a, singular) && in_window(b, singular) && in_window(m, singular);
}

WeylChar LogWeylChar::chi() const { return {exp2pi(alpha), exp2pi(beta), exp2pi(mu)}; }

LogWeylChar principal_logs(const WeylChar& chi) {
  return {log_param(chi.a), log_param(chi.b), log_param(chi.m)};
}

SL2StarElement SL2StarElement::identity() { return from_coords(1.0, 0.0, 0.0); }

SL2StarElement SL2StarElement::from_coords(cplx kappa, cplx epsilon, cplx phi) {
  SL2StarElement e;
  e.lower << kappa, 0.0, phi, 1.0;
  e.upper << 1.0, epsilon, 0.0, kappa;
  return e;
}

Eigen::Matrix2cd psi(const WeylChar& chi) {
  Eigen::Matrix2cd p;
  p << chi.a, -chi.b * (chi.a - chi.m), (chi.a - 1.0 / chi.m) / chi.b, chi.m + 1.0 / chi.m - chi.a;
  return p;
}

SL2StarElement to_z0_char(const WeylChar& chi) {
  return SL2StarElement::from_coords(chi.a, chi.b * (chi.a - chi.m), (chi.a - 1.0 / chi.m) / chi.b);
}

SL2StarElement char_product(const SL2StarElement& c1, const SL2StarElement& c2) {
  SL2StarElement r{c1.lower * c2.lower, c1.upper * c2.upper};
  double scale = 1.0 + r.lower.norm() + r.upper.norm();
  double off = std::abs(r.lower(0, 1)) + std::abs(r.lower(1, 1) - 1.0) + std::abs(r.upper(1, 0)) +
               std::abs(r.upper(0, 0) - 1.0) + std::abs(r.upper(1, 1) - r.lower(0, 0));
  if (off > 1e-12 * scale) throw ConstraintError("product left the SL2* subgroup");
  return r;
}

BraidOutcome braid(const WeylChar& c1, const WeylChar& c2, int sign, double singular) {
  const cplx a1 = c1.a, b1 = c1.b, m1 = c1.m;
  const cplx a2 = c2.a, b2 = c2.b, m2 = c2.m;
  BraidOutcome out;
  cplx A, b1p, b2p;
  if (sign == 1) {
    A = 1.0 - (m1 * b1 / b2) * (1.0 - a1 / m1) * (1.0 - 1.0 / (m2 * a2));
    b1p = (m2 * b2 / m1) / (1.0 - m2 * a2 * (1.0 - b2 / (m1 * b1)));
    b2p = b1 * (1.0 - (m1 / a1) * (1.0 - b2 / (m1 * b1)));
  } else if (sign == -1) {
    A = 1.0 - (b2 / (m1 * b1)) * (1.0 - m1 * a1) * (1.0 - m2 / a2);
    b1p = (m2 * b2 / m1) * (1.0 - (a2 / m2) * (1.0 - m1 * b1 / b2));
    b2p = b1 / (1.0 - (1.0 / (m1 * a1)) * (1.0 - m1 * b1 / b2));
  } else {
    throw std::invalid_argument("crossing sign must be +1 or -1");
  }
  out.discriminant = A;
  out.chi1p = {a1 / A, b1p, m1};
  out.chi2p = {a2 * A, b2p, m2};
  out.admissible = in_window(A, singular) && out.chi1p.valid(singular) && out.chi2p.valid(singular);
  out.pinched = is_pinched(c1, c2, singular);
  return out;
}

bool is_pinched(const WeylChar& c1, const WeylChar& c2, double singular) {
  cplx lhs = c2.b, rhs = c1.m * c1.b;
  return std::abs(lhs - rhs) <= singular * std::max(std::abs(lhs), std::abs(rhs));
}

PairClass classify_pair(const WeylChar& c1, const WeylChar& c2, int sign, double singular) {
  BraidOutcome o = braid(c1, c2, sign, singular);
  PairClass pc;
  pc.admissible = o.admissible;
  pc.pinched = o.pinched;
  pc.discriminant = o.discriminant;
  SL2StarElement z1 = to_z0_char(c1), z2 = to_z0_char(c2);
  pc.y_value = 1.0 + z1.en() * z2.fn() * z2.kn() / z1.kn();
  return pc;
}

double casimir_relation(const RootConfig& cfg, const WeylChar& chi, cplx mu) {
  if (std::abs(exp2pi(mu) - chi.m) > cfg.tol.constraint * std::max(1.0, std::abs(chi.m)) * 1e2) {
    throw ConstraintError("ω^{Nμ} does not match m");
  }
  const cplx t = omega_pow(cfg, mu + 0.5);
  const cplx s = t + 1.0 / t;
  // Chebyshev-type recurrence P_{k+1} = s P_k - P_{k-1}, P_0 = 2, P_1 = s.
  cplx p0 = 2.0, p1 = s;
  for (int k = 1; k < cfg.N; ++k) {
    cplx p2 = s * p1 - p0;
    p0 = p1;
    p1 = p2;
  }
  SL2StarElement z = to_z0_char(chi);
  cplx rhs = z.en() * z.fn() - chi.a - 1.0 / chi.a;
  return std::abs(p1 - rhs);
}

}  // namespace holr
