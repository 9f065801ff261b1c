#pragma once

#include <Eigen/Dense>

#include "holr/qdilog.hpp"

namespace holr {

/// Central character (a, b, m) = (χ(xᴺ), χ(yᴺ), χ(zᴺ)) of the Weyl algebra.
struct WeylChar {
  cplx a{1.0};
  cplx b{1.0};
  cplx m{1.0};

  bool valid(double singular = 1e-9) const;
};

/// Logarithms (α, β, μ) of a central character; m is recovered as e^{2πiμ}.
struct LogWeylChar {
  cplx alpha{0.0};
  cplx beta{0.0};
  cplx mu{0.0};

  WeylChar chi() const;
};

/// Principal-branch logs of a character.
LogWeylChar principal_logs(const WeylChar& chi);

/// Pair of triangular matrices ([[κ,0],[φ,1]], [[1,ε],[0,κ]]).
struct SL2StarElement {
  Eigen::Matrix2cd lower;
  Eigen::Matrix2cd upper;

  cplx kappa() const { return lower(0, 0); }
  cplx phi() const { return lower(1, 0); }
  cplx epsilon() const { return upper(0, 1); }

  /// Values of Kᴺ, Eᴺ, Fᴺ on the character.
  cplx kn() const { return kappa(); }
  cplx en() const { return epsilon(); }
  cplx fn() const { return phi() / kappa(); }

  static SL2StarElement identity();
  static SL2StarElement from_coords(cplx kappa, cplx epsilon, cplx phi);
};

struct BraidOutcome {
  WeylChar chi2p;
  WeylChar chi1p;
  bool admissible = false;
  bool pinched = false;
  cplx discriminant{0.0};  // A for sign +1, Ã for sign -1
};

struct PairClass {
  bool admissible = false;
  bool pinched = false;
  cplx discriminant{0.0};
  cplx y_value{0.0};  // (χ₁⊗χ₂)(1 + K₁⁻ᴺE₁ᴺF₂ᴺK₂ᴺ)
};

Eigen::Matrix2cd psi(const WeylChar& chi);

SL2StarElement to_z0_char(const WeylChar& chi);

SL2StarElement char_product(const SL2StarElement& c1, const SL2StarElement& c2);

/// (χ₂′, χ₁′) = B^{±1}(χ₁, χ₂).
BraidOutcome braid(const WeylChar& chi1, const WeylChar& chi2, int sign, double singular = 1e-9);

bool is_pinched(const WeylChar& chi1, const WeylChar& chi2, double singular = 1e-9);

PairClass classify_pair(const WeylChar& chi1, const WeylChar& chi2, int sign, double singular = 1e-9);

/// |P_N(χ̂(Ω)) - (χ(EᴺFᴺ) - a - a⁻¹)| with P_N(t + t⁻¹) = tᴺ + t⁻ᴺ.
double casimir_relation(const RootConfig& cfg, const WeylChar& chi, cplx mu);

}  // namespace holr
