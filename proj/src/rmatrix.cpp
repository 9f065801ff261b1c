#include "holr/rmatrix.hpp"

#include <cmath>
#include <sstream>

#include "holr/weylrep.hpp"

namespace holr {

using Eigen::MatrixXcd;

namespace {

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

int as_integer(cplx v, double tol, const char* what) {
  double r = std::round(v.real());
  if (std::abs(v - r) > tol) throw ConstraintError(std::string(what) + " is not an integer");
  return int(r);
}

MatrixXcd flip(int N) {
  MatrixXcd p = MatrixXcd::Zero(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p(j * N + i, i * N + j) = 1.0;
  return p;
}

std::vector<cplx> omega_int_table(const RootConfig& cfg) {
  std::vector<cplx> t(cfg.N);
  for (int k = 0; k < cfg.N; ++k) t[k] = omega_pow(cfg, double(k));
  return t;
}

RTensor assemble(const RootConfig& cfg, const CrossingData& c, bool parallel) {
  const ZetaSet z = crossing_zetas(cfg, c);
  const int N = cfg.N;
  const LambdaTable LN(cfg, z.flat(RN)), LW(cfg, z.flat(RW)), LS(cfg, z.flat(RS)), LE(cfg, z.flat(RE));
  const std::vector<cplx> w = omega_int_table(cfg);
  RTensor r;
  r.N = N;
  r.entries.resize(N * N, N * N);
  const double nm1 = double(N - 1);
  if (c.sign == 1) {
    const cplx pre = omega_pow(cfg, -nm1 * (z.z0[RW] + z.z1[RW])) / double(N);
#pragma omp parallel for schedule(static) if (parallel)
    for (int row = 0; row < N * N; ++row) {
      const int n1 = row / N, n2 = row % N;
      const cplx rowfac = pre * w[modb(N, n2 - n1)] / LW(n2 - n1 - 1);
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p)
          r.entries(row, n1p * N + n2p) = rowfac * LN(n2p - n1) * LS(n2 - n1p) / LE(n2p - n1p);
    }
  } else {
    const cplx pre =
        omega_pow(cfg, nm1 * (z.z0[RE] + z.z1[RE] - z.z0[RS] - z.z1[RS] - z.z0[RN] - z.z1[RN])) / double(N);
#pragma omp parallel for schedule(static) if (parallel)
    for (int row = 0; row < N * N; ++row) {
      const int n1 = row / N, n2 = row % N;
      const cplx rowfac = pre * w[modb(N, n1 - n2)] * LW(n1 - n2);
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p)
          r.entries(row, n1p * N + n2p) = rowfac * LE(n1p - n2p - 1) / (LN(n1 - n2p - 1) * LS(n1p - n2 - 1));
    }
  }
  return r;
}

// Positive pinched crossing with a standard log-coloring.
RTensor pinched_standard(const RootConfig& cfg, const CrossingData& c) {
  const int N = cfg.N;
  const cplx al1 = c.lc1.alpha, al2 = c.lc2.alpha, al1p = c.lc1p.alpha, al2p = c.lc2p.alpha;
  const cplx mu1 = c.lc1.mu, mu2 = c.lc2.mu;
  const cplx a1 = exp2pi(al1), a2 = exp2pi(al2), a1p = exp2pi(al1p), a2p = exp2pi(al2p);
  const cplx m1 = exp2pi(mu1), m2 = exp2pi(mu2);
  std::vector<cplx> qp(2 * N);
  for (int k = 0; k < 2 * N; ++k) qp[k] = qpoch_omega(cfg, k);
  RTensor r;
  r.N = N;
  r.entries = MatrixXcd::Zero(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p) {
          const int theta = cutoff(N, modb(N, n1 - n2) + modb(N, n1p - n2p - 1)) *
                            cutoff(N, modb(N, n2p - n1) + modb(N, n2 - n1p));
          if (!theta) continue;
          const int c12 = cutoff(N, n1 - n2), c21p = cutoff(N, n2 - n1p), c1p2p = cutoff(N, n1p - n2p - 1);
          const cplx A = a1p / a1 * std::pow(a1 / m1, 2 - c12 - c21p) * std::pow(a2 * m2, -c21p) *
                         std::pow(a2p * m2, 1 - c1p2p);
          const cplx ph = omega_pow(cfg, double(n1) * (al1 - mu1 - 1.0) + double(n2) * (al2 + mu2 + 1.0) -
                                             double(n1p) * (al1p - mu1) - double(n2p) * (al2p + mu2));
          const cplx q = qp[modb(N, n2p - n1p)] * qp[modb(N, n2 - n1 - 1)] /
                         (qp[modb(N, n2p - n1)] * qp[modb(N, n2 - n1p)]);
          r.at(n1, n2, n1p, n2p) = A * ph * q / double(N);
        }
  return r;
}

}  // namespace

void CrossingData::validate(const RootConfig& cfg) const {
  const double tol = std::max(cfg.tol.constraint * 1e2, 1e-8);
  if (sign != 1 && sign != -1) throw ConstraintError("crossing sign must be ±1");
  if (!close(lc1p.mu, lc1.mu, tol) || !close(lc2p.mu, lc2.mu, tol)) throw ConstraintError("meridian logs must be preserved");
  const auto& g = gamma;
  if (!close(lc1.alpha, g[RW] - g[RN], tol) || !close(lc2.alpha, g[RS] - g[RW], tol) ||
      !close(lc2p.alpha, g[RE] - g[RN], tol) || !close(lc1p.alpha, g[RS] - g[RE], tol)) {
    throw ConstraintError("segment α logs disagree with region γ logs");
  }
  BraidOutcome o = braid(lc1.chi(), lc2.chi(), sign, cfg.tol.singular);
  if (!o.admissible && !o.pinched) throw ConstraintError("crossing characters are not admissible");
  const WeylChar c1p = lc1p.chi(), c2p = lc2p.chi();
  auto rel = [&](cplx a, cplx b) { return std::abs(a - b) <= 1e-7 * std::max(std::abs(a), std::abs(b)); };
  if (!rel(c1p.a, o.chi1p.a) || !rel(c1p.b, o.chi1p.b) || !rel(c2p.a, o.chi2p.a) || !rel(c2p.b, o.chi2p.b)) {
    throw ConstraintError("outgoing characters differ from the braiding of the incoming ones");
  }
  if (kappa && !pinched(cfg.tol.singular)) {
    cplx K = crossing_K(*this);
    if (std::abs(exp2pi(*kappa) - K) > 1e-7 * std::abs(K)) throw ConstraintError("e^{2πiκ} must equal K");
  }
}

CrossingData r2_partner(const CrossingData& q) {
  CrossingData p;
  p.sign = -q.sign;
  p.lc1 = q.lc2p;
  p.lc2 = q.lc1p;
  p.lc1p = q.lc2;
  p.lc2p = q.lc1;
  p.gamma = {q.gamma[RN], q.gamma[RE], q.gamma[RS], q.gamma[RW]};
  p.kappa = q.kappa;
  return p;
}

bool CrossingData::pinched(double singular) const { return is_pinched(lc1.chi(), lc2.chi(), singular); }

CrossingData make_crossing(const RootConfig& cfg, int sign, const LogWeylChar& lc1, const LogWeylChar& lc2,
                           cplx gammaN, BranchChoice br) {
  BraidOutcome o = braid(lc1.chi(), lc2.chi(), sign, cfg.tol.singular);
  if (!o.admissible) throw ConstraintError("inadmissible pair of characters");
  CrossingData c;
  c.sign = sign;
  c.lc1 = lc1;
  c.lc2 = lc2;
  const cplx al2p = log_param(o.chi2p.a) + double(br.alpha2p);
  c.gamma[RN] = gammaN;
  c.gamma[RW] = gammaN + lc1.alpha;
  c.gamma[RS] = c.gamma[RW] + lc2.alpha;
  c.gamma[RE] = gammaN + al2p;
  c.lc2p = {al2p, log_param(o.chi2p.b) + double(br.beta2p), lc2.mu};
  c.lc1p = {c.gamma[RS] - c.gamma[RE], log_param(o.chi1p.b) + double(br.beta1p), lc1.mu};
  return c;
}

cplx crossing_K(const CrossingData& c) {
  cplx ratio = exp2pi(c.lc2p.beta) / exp2pi(c.lc1.beta);
  if (c.sign == -1) ratio = 1.0 / ratio;
  return exp2pi(c.gamma[RN]) / (1.0 - ratio);
}

std::array<cplx, 4> zeta0_values(const CrossingData& c) {
  const double e = c.sign;
  const cplx b1 = c.lc1.beta, b2 = c.lc2.beta, b1p = c.lc1p.beta, b2p = c.lc2p.beta;
  const cplx mu1 = c.lc1.mu, mu2 = c.lc2.mu;
  return {e * (b2p - b1), e * (b2 - b1 - mu1), e * (b2 - b1p + mu2 - mu1), e * (b2p - b1p + mu2)};
}

ZetaSet crossing_zetas(const RootConfig& cfg, const CrossingData& c, bool allow_pinched) {
  ZetaSet z;
  z.z0 = zeta0_values(c);
  for (int j = 0; j < 4; ++j) {
    if (std::abs(z.z0[j] - std::round(z.z0[j].real())) < cfg.tol.singular) z.pinched = true;
  }
  if (z.pinched) {
    if (!allow_pinched) {
      static const char* names[4] = {"N", "W", "S", "E"};
      std::ostringstream os;
      os << "pinched crossing: ζ⁰ is an integer at";
      for (int j = 0; j < 4; ++j)
        if (std::abs(z.z0[j] - std::round(z.z0[j].real())) < cfg.tol.singular) os << " ζ_" << names[j] << "⁰";
      throw SingularError(os.str());
    }
    const double nan = std::nan("");
    z.kappa = cplx(nan, nan);
    z.z1.fill(cplx(nan, nan));
    return z;
  }
  z.kappa = c.kappa ? *c.kappa : log_param(crossing_K(c));
  const double e = c.sign;
  const cplx k = z.kappa, mu1 = c.lc1.mu, mu2 = c.lc2.mu;
  z.z1 = {k - c.gamma[RN], k - c.gamma[RW] + e * mu1, k - c.gamma[RS] + e * (mu1 - mu2), k - c.gamma[RE] - e * mu2};
  for (int j = 0; j < 4; ++j) {
    Flattening f(z.z0[j], z.z1[j], std::max(cfg.tol.constraint, 1e-9));
    (void)f;
  }
  return z;
}

RTensor rmat(const RootConfig& cfg, const CrossingData& c) { return assemble(cfg, c, true); }

RTensor rmat_serial(const RootConfig& cfg, const CrossingData& c) { return assemble(cfg, c, false); }

MatrixXcd braiding_from(const RTensor& r) {
  const int N = r.N;
  MatrixXcd b(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p) b(n2p * N + n1p, n1 * N + n2) = r.at(n1, n2, n1p, n2p);
  return b;
}

RTensor rmatrix_from_braiding(const MatrixXcd& b, int N) {
  RTensor r;
  r.N = N;
  r.entries.resize(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p) r.at(n1, n2, n1p, n2p) = b(n2p * N + n1p, n1 * N + n2);
  return r;
}

MatrixXcd braiding_op(const RootConfig& cfg, const CrossingData& c) {
  if (c.pinched(cfg.tol.singular)) return braiding_from(rmat_pinched(cfg, c));
  return braiding_from(rmat(cfg, c));
}

MatrixXcd intertwiner(const RTensor& r, int sign) {
  MatrixXcd m = r.entries.transpose();
  if (sign == 1) return m;
  MatrixXcd p = flip(r.N);
  return p * m * p;
}

FactorOps factorized_ops(const RootConfig& cfg, const CrossingData& c) {
  const ZetaSet z = crossing_zetas(cfg, c);
  const int N = cfg.N;
  const LambdaTable LN(cfg, z.flat(RN)), LW(cfg, z.flat(RW)), LS(cfg, z.flat(RS)), LE(cfg, z.flat(RE));
  auto s = [&](Region j) { return z.z0[j] + z.z1[j]; };
  const double nm1 = double(N - 1);
  FactorOps ops;
  ops.sign = c.sign;
  ops.ZE.resize(N * N);
  ops.ZW.resize(N * N);
  ops.ZN.resize(N, N);
  ops.ZS.resize(N, N);
  if (c.sign == 1) {
    const cplx preW = omega_pow(cfg, -nm1 * s(RW));
    for (int n1 = 0; n1 < N; ++n1)
      for (int n2 = 0; n2 < N; ++n2) {
        ops.ZE(n1 * N + n2) = 1.0 / LE(n1 - n2);
        ops.ZW(n1 * N + n2) = preW * omega_pow(cfg, double(n2 - n1)) / LW(n2 - n1 - 1);
      }
    for (int np = 0; np < N; ++np)
      for (int n = 0; n < N; ++n) {
        ops.ZN(np, n) = LN(np - n);
        ops.ZS(np, n) = LS(n - np);
      }
  } else {
    const cplx preE = omega_pow(cfg, nm1 * s(RE));
    const cplx preN = omega_pow(cfg, -nm1 * s(RN));
    const cplx preS = omega_pow(cfg, -nm1 * s(RS));
    for (int n1 = 0; n1 < N; ++n1)
      for (int n2 = 0; n2 < N; ++n2) {
        ops.ZE(n1 * N + n2) = preE * LE(n1 - n2 - 1);
        ops.ZW(n1 * N + n2) = omega_pow(cfg, double(n2 - n1)) * LW(n2 - n1);
      }
    for (int np = 0; np < N; ++np)
      for (int n = 0; n < N; ++n) {
        ops.ZN(np, n) = preN / LN(n - np - 1);
        ops.ZS(np, n) = preS / LS(np - n - 1);
      }
  }
  return ops;
}

MatrixXcd compose_factorized(const FactorOps& ops) {
  const int N = int(ops.ZN.rows());
  MatrixXcd mid = ops.sign == 1 ? kron(ops.ZN, ops.ZS) : kron(ops.ZS, ops.ZN);
  MatrixXcd m = ops.ZE.asDiagonal() * mid * ops.ZW.asDiagonal();
  m /= double(N);
  if (ops.sign == 1) return m;
  MatrixXcd p = flip(N);
  return p * m * p;
}

RTensor rmat_pinched(const RootConfig& cfg, const CrossingData& c) {
  if (!c.pinched(cfg.tol.singular)) throw ConstraintError("crossing is not pinched");
  if (c.sign == -1) {
    MatrixXcd bp = braiding_from(rmat_pinched(cfg, r2_partner(c)));
    return rmatrix_from_braiding(bp.inverse(), cfg.N);
  }
  const double tol = 1e-7;
  std::array<int, 4> l{0,
                       as_integer(c.lc2.beta - c.lc1.beta - c.lc1.mu, tol, "β₂ - β₁ - μ₁"),
                       as_integer(c.lc1p.beta - c.lc1.beta - c.lc2.mu, tol, "β₁′ - β₁ - μ₂"),
                       as_integer(c.lc2p.beta - c.lc1.beta, tol, "β₂′ - β₁")};
  RTensor std_r = pinched_standard(cfg, c);
  if (l == std::array<int, 4>{0, 0, 0, 0}) return std_r;
  const cplx phase = omega_pow(cfg, 0.5 * beta_rule_exponent(c, l));
  const int N = cfg.N;
  RTensor r;
  r.N = N;
  r.entries.resize(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p)
          r.at(n1, n2, n1p, n2p) =
              phase * std_r.at(modb(N, n1 + l[0]), modb(N, n2 + l[1]), modb(N, n1p + l[2]), modb(N, n2p + l[3]));
  return r;
}

RTensor kashaev_rmat(const RootConfig& cfg) {
  const int N = cfg.N;
  const cplx wb = std::conj(cfg.omega);
  RTensor r;
  r.N = N;
  r.entries = MatrixXcd::Zero(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p) {
          const int theta = cutoff(N, modb(N, n1 - n2) + modb(N, n1p - n2p - 1)) *
                            cutoff(N, modb(N, n2p - n1) + modb(N, n2 - n1p));
          if (!theta) continue;
          const cplx den = qpoch_omega(cfg, modb(N, n2p - n1)) * qpoch_omega(cfg, modb(N, n2 - n1p)) *
                           qpoch(wb, wb, modb(N, n1p - n2p - 1)) * qpoch(wb, wb, modb(N, n1 - n2));
          r.at(n1, n2, n1p, n2p) = double(N) * omega_pow(cfg, double(n2p - n1) + 0.5) / den;
        }
  return r;
}

CrossingData kashaev_crossing() {
  CrossingData c;
  c.sign = 1;
  c.lc1 = {-0.5, 0.0, -0.5};
  c.lc2 = {-0.5, -0.5, -0.5};
  c.lc1p = {-0.5, -0.5, -0.5};
  c.lc2p = {-0.5, 0.0, -0.5};
  c.gamma = {0.0, -0.5, -1.0, -0.5};
  return c;
}

RTensor to_weight_basis(const RootConfig& cfg, const RTensor& fourier) {
  const MatrixXcd F = fourier_matrix(cfg);
  const MatrixXcd FF = kron(F, F);
  RTensor r;
  r.N = fourier.N;
  r.entries = FF.conjugate() * fourier.entries * FF / double(cfg.N * cfg.N);
  return r;
}

namespace {

void require_pinched_standard(const RootConfig& cfg, const CrossingData& c) {
  if (c.sign != 1 || !c.pinched(cfg.tol.singular)) throw ConstraintError("a positive pinched crossing is required");
}

CrossingData standardized(const CrossingData& c) {
  CrossingData s = c;
  s.lc2.beta = c.lc1.beta + c.lc1.mu;
  s.lc1p.beta = c.lc1.beta + c.lc2.mu;
  s.lc2p.beta = c.lc1.beta;
  return s;
}

}  // namespace

RTensor pinched_dual_rmat(const RootConfig& cfg, const CrossingData& c) {
  require_pinched_standard(cfg, c);
  const int N = cfg.N;
  const cplx a1 = exp2pi(c.lc1.alpha), a2 = exp2pi(c.lc2.alpha), m1 = exp2pi(c.lc1.mu), m2 = exp2pi(c.lc2.mu);
  const cplx pre = a1 * (m2 * a2 - 1.0) / (m1 + a1 * (m2 * a2 - 1.0)) / double(N);
  const cplx al2p = c.lc2p.alpha, al2 = c.lc2.alpha, al1p = c.lc1p.alpha, mu1 = c.lc1.mu, mu2 = c.lc2.mu;
  RTensor r;
  r.N = N;
  r.entries = MatrixXcd::Zero(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p) {
          if (modb(N, n1 + n2 - n1p - n2p) != 0) continue;
          const cplx x = -al2p - mu2 + double(n2p);
          r.at(n1, n2, n1p, n2p) = pre / (1.0 - omega_pow(cfg, x)) *
                                   fusion_f(cfg, x, -al2 - mu2 + double(n2) - 1.0, al1p - mu1 - double(n1p));
        }
  return r;
}

RTensor nilpotent_dual_rmat(const RootConfig& cfg, const CrossingData& c) {
  require_pinched_standard(cfg, c);
  const double tol = 1e-8;
  if (!close(c.lc1.alpha, c.lc1.mu, tol) || !close(c.lc1p.alpha, c.lc1.mu, tol) ||
      !close(c.lc2p.alpha, c.lc2.alpha, tol)) {
    throw ConstraintError("nilpotent form needs α₁ = μ₁ = α₁′ and α₂′ = α₂");
  }
  const int N = cfg.N;
  const cplx nu = c.lc2.alpha + c.lc2.mu;
  RTensor r;
  r.N = N;
  r.entries = MatrixXcd::Zero(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p) {
          if (modb(N, n1 + n2 - n1p - n2p) != 0) continue;
          const int d = modb(N, n2p - n2), e = modb(N, n1p);
          const cplx x = -nu + double(n2);
          r.at(n1, n2, n1p, n2p) = (1.0 - omega_pow(cfg, x)) / (1.0 - omega_pow(cfg, -nu + double(n2p))) *
                                   omega_pow(cfg, double(e) * x) / cyc_dilog(cfg, x, d) * qpoch_omega(cfg, d + e) /
                                   (qpoch_omega(cfg, d) * qpoch_omega(cfg, e));
        }
  return r;
}

RTensor colored_jones_rmat(const RootConfig& cfg) {
  const int N = cfg.N;
  RTensor r;
  r.N = N;
  r.entries = MatrixXcd::Zero(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = n2; n2p < N; ++n2p) {
          if (n1 + n2 != n1p + n2p) continue;
          r.at(n1, n2, n1p, n2p) = omega_pow(cfg, double(n1p * (1 + n2))) * qpoch_omega(cfg, n2p) *
                                   qpoch_omega(cfg, n1) /
                                   (qpoch_omega(cfg, n2) * qpoch_omega(cfg, n2p - n2) * qpoch_omega(cfg, n1p));
        }
  return r;
}

WeightBasisResult weight_basis_rmat(const RootConfig& cfg, const CrossingData& c) {
  require_pinched_standard(cfg, c);
  CrossingData s = standardized(c);
  return {to_weight_basis(cfg, rmat_pinched(cfg, s)), pinched_dual_rmat(cfg, s)};
}

cplx det_braiding(const RootConfig& cfg, const CrossingData& c) {
  const ZetaSet z = crossing_zetas(cfg, c);
  const int N = cfg.N;
  const double e = c.sign;
  auto L = [&](Region j) { return lifted_dilog(z.flat(j), cfg.tol.singular); };
  const cplx I = L(RN) + L(RS) - L(RW) - L(RE);
  const cplx lam1 = e / 2.0 * (c.lc1p.beta - c.lc1.beta);
  const cplx lam2 = e / 2.0 * (c.lc2.beta - c.lc2p.beta);
  const cplx d0 = d_const(cfg, 0.0);
  const cplx expo = (c.gamma[RW] - c.gamma[RE]) / 2.0 - lam1 - lam2;
  return std::exp(-e * double(N) * I / kTwoPiI) * std::pow(double(N) / (d0 * d0), int(e) * N * N) *
         std::exp(kTwoPiI * expo * double(N * (N - 1)));
}

cplx det_lu(const MatrixXcd& m) { return m.partialPivLu().determinant(); }

cplx beta_rule_exponent(const CrossingData& c, const std::array<int, 4>& l) {
  const double e = c.sign;
  const auto& g = c.gamma;
  const cplx mu1 = c.lc1.mu, mu2 = c.lc2.mu;
  return double(l[3]) * (g[RE] - g[RN] + e * mu2) + double(l[2]) * (g[RS] - g[RE] - e * mu1) +
         double(l[1]) * (g[RW] - g[RS] - e * mu2) + double(l[0]) * (g[RN] - g[RW] + e * mu1);
}

TransformResult transform_rules(const RootConfig& cfg, const CrossingData& c, const Shifts& s) {
  TransformResult t;
  t.shifted = c;
  t.gamma_k = s.k;
  t.index_shift = s.l;
  const auto z0 = zeta0_values(c);
  const cplx Gamma = double(s.k[RN]) * z0[RN] + double(s.k[RS]) * z0[RS] - double(s.k[RW]) * z0[RW] -
                     double(s.k[RE]) * z0[RE];
  auto& g = t.shifted.gamma;
  for (int j = 0; j < 4; ++j) g[j] += double(s.k[j]);
  t.shifted.lc1.alpha = g[RW] - g[RN];
  t.shifted.lc2.alpha = g[RS] - g[RW];
  t.shifted.lc2p.alpha = g[RE] - g[RN];
  t.shifted.lc1p.alpha = g[RS] - g[RE];
  const cplx B = beta_rule_exponent(t.shifted, s.l);
  t.shifted.lc1.beta += double(s.l[0]);
  t.shifted.lc2.beta += double(s.l[1]);
  t.shifted.lc1p.beta += double(s.l[2]);
  t.shifted.lc2p.beta += double(s.l[3]);
  t.phase = omega_pow(cfg, 0.5 * double(c.sign) * Gamma + 0.5 * B);
  return t;
}

RTensor apply_transform(const RootConfig& cfg, const RTensor& r, const TransformResult& t) {
  const int N = r.N;
  const auto& k = t.gamma_k;
  const auto& l = t.index_shift;
  RTensor out;
  out.N = N;
  out.entries.resize(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int n1p = 0; n1p < N; ++n1p)
        for (int n2p = 0; n2p < N; ++n2p) {
          const int m1 = n1 + l[0], m2 = n2 + l[1], m1p = n1p + l[2], m2p = n2p + l[3];
          const int idx = k[RN] * (m2p - m1) + k[RS] * (m2 - m1p) - k[RW] * (m2 - m1) - k[RE] * (m2p - m1p);
          out.at(n1, n2, n1p, n2p) = t.phase * omega_pow(cfg, double(modb(N, idx))) *
                                     r.at(modb(N, m1), modb(N, m2), modb(N, m1p), modb(N, m2p));
        }
  return out;
}

}  // namespace holr
