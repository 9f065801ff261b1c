#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace holr {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kTwoPiI{0.0, 2.0 * kPi};

/// Tolerances shared by every module.
struct Tolerance {
  double rel = 1e-8;
  double constraint = 1e-10;
  double singular = 1e-9;

  void validate() const;
};

/// Raised when an argument sits on a pole or branch point.
class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a defining constraint (flattening, fusion, consistency) fails.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order N together with the roots ω = e^{2πi/N} and ξ = e^{πi/N}.
struct RootConfig {
  explicit RootConfig(int n, Tolerance t = {});

  int N;
  cplx omega;
  cplx xi;
  Tolerance tol;
};

/// Principal logarithm with Im in (-π, π]; signed zeros are ignored.
cplx principal_log(cplx z);

/// Log(z) / (2πi), the principal "log-parameter" of z.
cplx log_param(cplx z);

/// e^{2πi x}
cplx exp2pi(cplx x);

/// ω^x = exp(2πi x / N).
cplx omega_pow(const RootConfig& cfg, cplx x);

/// q-Pochhammer symbol (a; q)_k for any integer k.
cplx qpoch(cplx a, cplx q, int k, double singular = 1e-9);

/// (ω; ω)_k for k ≥ 0.
cplx qpoch_omega(const RootConfig& cfg, int k);

/// Cyclic dilogarithm ⟨ζ|k⟩ = 1 / (ω^{ζ+1}; ω)_k.
cplx cyc_dilog(const RootConfig& cfg, cplx zeta, int k);

/// Classical dilogarithm Li₂ on the principal sheet.
cplx li2(cplx z);

/// A pair (ζ⁰, ζ¹) with e^{2πiζ¹}(1 - e^{2πiζ⁰}) = 1.
class Flattening {
 public:
  Flattening(cplx zeta0, cplx zeta1, double constraint_tol = 1e-10);

  /// ζ¹ from the principal log of 1/(1-e^{2πiζ⁰}) plus an integer.
  static Flattening from_zeta0(cplx zeta0, int shift1 = 0);

  cplx zeta0() const { return z0_; }
  cplx zeta1() const { return z1_; }
  double residual() const;

 private:
  cplx z0_;
  cplx z1_;
};

/// Lifted dilogarithm 𝓛(ζ⁰, ζ¹).
cplx lifted_dilog(const Flattening& f, double singular = 1e-9);

/// D(ζ) = exp(N⁻¹ Σ_{k=1}^{N-1} k log(1 - ω^{ζ+k})).
cplx d_const(const RootConfig& cfg, cplx zeta);

/// Λ(ζ⁰, ζ¹ | 0) from the exact-value formula.
cplx lambda0(const RootConfig& cfg, const Flattening& f);

/// Λ(ζ⁰, ζ¹ | n); the index is reduced mod N first.
cplx lambda_dilog(const RootConfig& cfg, const Flattening& f, int n);

/// All N values Λ(·|0..N-1) of one flattening; indexed with any integer.
class LambdaTable {
 public:
  LambdaTable() = default;
  LambdaTable(const RootConfig& cfg, const Flattening& f);

  cplx operator()(int n) const { return vals_[static_cast<std::size_t>(wrap(n))]; }
  int size() const { return n_; }

 private:
  int wrap(int n) const { return ((n % n_) + n_) % n_; }
  int n_ = 0;
  std::vector<cplx> vals_;
};

/// Normalizing constant S(ζ⁰, ζ¹).
cplx s_norm(const RootConfig& cfg, const Flattening& f);

/// f(α, β, γ) = Σ_k ⟨α|k⟩/⟨β|k⟩ ω^{kγ}, after checking the fusion constraint.
cplx fusion_f(const RootConfig& cfg, cplx alpha, cplx beta, cplx gamma);

/// Representative of k in [0, N) and the cutoff flag of k.
struct IndexMod {
  int modb;
  int cutoff;
};
IndexMod index_mod(const RootConfig& cfg, int k);
int modb(int n, int k);
int cutoff(int n, int k);

}  // namespace holr
