#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "holr/characters.hpp"

namespace holr {

/// Region labels around a crossing; the array index used by ZetaSet.
enum Region : int { RN = 0, RW = 1, RS = 2, RE = 3 };

/// Everything needed to assemble one R-matrix.
struct CrossingData {
  int sign = 1;
  LogWeylChar lc1, lc2, lc1p, lc2p;
  std::array<cplx, 4> gamma{};  // indexed by Region
  std::optional<cplx> kappa;    // empty means AUTO

  /// Checks meridian, region and braiding consistency; throws ConstraintError.
  void validate(const RootConfig& cfg) const;
  bool pinched(double singular = 1e-9) const;
};

/// The crossing of opposite sign whose braiding inverts that of `c` (an R2 move).
CrossingData r2_partner(const CrossingData& c);

/// Integer branch offsets for the output logs chosen by make_crossing.
struct BranchChoice {
  int beta1p = 0;
  int beta2p = 0;
  int alpha2p = 0;
};

/// Builds a consistent crossing from the incoming log-characters and γ_N.
/// Output logs are principal plus the given offsets.
CrossingData make_crossing(const RootConfig& cfg, int sign, const LogWeylChar& lc1, const LogWeylChar& lc2,
                           cplx gammaN, BranchChoice branches = {});

/// K = e^{2πiγ_N} / (1 - (b₂′/b₁)^ε).
cplx crossing_K(const CrossingData& c);

/// ζ⁰ of the four tetrahedra; finite at pinched crossings.
std::array<cplx, 4> zeta0_values(const CrossingData& c);

struct ZetaSet {
  std::array<cplx, 4> z0{};
  std::array<cplx, 4> z1{};
  cplx kappa{0.0};
  bool pinched = false;

  Flattening flat(Region r) const { return Flattening(z0[r], z1[r], 1e-8); }
};

/// All eight ζ values; throws SingularError at a pinched crossing unless allow_pinched.
ZetaSet crossing_zetas(const RootConfig& cfg, const CrossingData& c, bool allow_pinched = false);

/// Dense N²×N² tensor. For RMATRIX, entries((n₁,n₂),(n₁′,n₂′)) = R̂_{n₁n₂}^{n₁′n₂′};
/// for BRAIDING it is the operator in the Fourier product basis.
struct RTensor {
  enum class Kind { RMATRIX, BRAIDING };

  int N = 0;
  Kind kind = Kind::RMATRIX;
  Eigen::MatrixXcd entries;

  cplx at(int n1, int n2, int n1p, int n2p) const { return entries(n1 * N + n2, n1p * N + n2p); }
  cplx& at(int n1, int n2, int n1p, int n2p) { return entries(n1 * N + n2, n1p * N + n2p); }
};

/// Generic closed formula, parallel over rows.
RTensor rmat(const RootConfig& cfg, const CrossingData& c);
/// Same formula assembled on one thread; reference for rmat.
RTensor rmat_serial(const RootConfig& cfg, const CrossingData& c);

/// B[(n₂′,n₁′),(n₁,n₂)] = R̂_{n₁n₂}^{n₁′n₂′}; the braiding τR or R̄τ as an operator.
Eigen::MatrixXcd braiding_from(const RTensor& r);
/// Inverse of braiding_from.
RTensor rmatrix_from_braiding(const Eigen::MatrixXcd& b, int N);

/// Braiding operator of a crossing; pinched crossings use the pinched closed form.
Eigen::MatrixXcd braiding_op(const RootConfig& cfg, const CrossingData& c);

/// Operator intertwining π with π′∘𝓡^W (positive) or π′∘(𝓡^W)⁻¹ on swapped factors (negative).
Eigen::MatrixXcd intertwiner(const RTensor& r, int sign);

/// Four-factor decomposition. Diagonal factors are stored as vectors over (n₁,n₂).
struct FactorOps {
  int sign = 1;
  Eigen::VectorXcd ZE, ZW;
  Eigen::MatrixXcd ZN, ZS;  // (n′, n) entries
};
FactorOps factorized_ops(const RootConfig& cfg, const CrossingData& c);
/// (1/N) Z_E (Z_N ⊗ Z_S) Z_W, or τ (1/N) Z̄_E (Z̄_S ⊗ Z̄_N) Z̄_W τ for negative crossings.
Eigen::MatrixXcd compose_factorized(const FactorOps& ops);

/// Pinched closed form; non-standard colorings are reduced by the β rule,
/// negative crossings through the inverse of the positive partner.
RTensor rmat_pinched(const RootConfig& cfg, const CrossingData& c);

/// Kashaev's matrix θ N ω^{n₂′-n₁+1/2} / (four Pochhammer factors).
RTensor kashaev_rmat(const RootConfig& cfg);

/// Crossing at the Kashaev character point (α = μ = -1/2, β₁ = β₂′ = 0, β₂ = β₁′ = -1/2).
CrossingData kashaev_crossing();

/// Coefficient matrix rewritten in the weight basis {v_n}.
RTensor to_weight_basis(const RootConfig& cfg, const RTensor& fourier);

RTensor pinched_dual_rmat(const RootConfig& cfg, const CrossingData& c);
/// Requires α₁ = μ₁ = α₁′ and α₂′ = α₂.
RTensor nilpotent_dual_rmat(const RootConfig& cfg, const CrossingData& c);
RTensor colored_jones_rmat(const RootConfig& cfg);

struct WeightBasisResult {
  RTensor conjugated;
  RTensor closed_form;
};
WeightBasisResult weight_basis_rmat(const RootConfig& cfg, const CrossingData& c);

/// Closed-form determinant of the braiding.
cplx det_braiding(const RootConfig& cfg, const CrossingData& c);
cplx det_lu(const Eigen::MatrixXcd& m);

/// Integer shifts of region logs (k) and segment β logs (l, order 1, 2, 1′, 2′).
struct Shifts {
  std::array<int, 4> k{};
  std::array<int, 4> l{};
};

/// R̃[m] = phase · ω^{Σ k_j idx_j(m+l)} · R[m+l].
struct TransformResult {
  CrossingData shifted;
  cplx phase{1.0};
  std::array<int, 4> index_shift{};
  std::array<int, 4> gamma_k{};
};
TransformResult transform_rules(const RootConfig& cfg, const CrossingData& c, const Shifts& s);
RTensor apply_transform(const RootConfig& cfg, const RTensor& r, const TransformResult& t);

/// The β-rule exponent B(f̃, f).
cplx beta_rule_exponent(const CrossingData& c, const std::array<int, 4>& l);

}  // namespace holr
