#include "holr/weylrep.hpp"

#include <Eigen/SVD>

namespace holr {

using Eigen::MatrixXcd;

Eigen::MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

GenMatrices rep_matrices(const RootConfig& cfg, const LogWeylChar& lc, Basis basis) {
  const int N = cfg.N;
  GenMatrices g;
  g.x = MatrixXcd::Zero(N, N);
  g.y = MatrixXcd::Zero(N, N);
  if (basis == Basis::WEIGHT) {
    for (int n = 0; n < N; ++n) {
      g.x(n, n) = omega_pow(cfg, lc.alpha - double(n));
      g.y(modb(N, n - 1), n) = omega_pow(cfg, lc.beta);
    }
  } else {
    for (int n = 0; n < N; ++n) {
      g.x(modb(N, n - 1), n) = omega_pow(cfg, lc.alpha);
      g.y(n, n) = omega_pow(cfg, lc.beta + double(n));
    }
  }
  const MatrixXcd I = MatrixXcd::Identity(N, N);
  const cplx zs = omega_pow(cfg, lc.mu);
  g.z = zs * I;
  const MatrixXcd xinv = g.x.inverse();
  g.K = g.x;
  g.E = cfg.xi * g.y * (g.z - g.x);
  g.F = g.y.inverse() * (I - xinv / zs);
  g.Omega = g.E * g.F + g.K / cfg.xi + cfg.xi * xinv;
  return g;
}

Eigen::MatrixXcd fourier_matrix(const RootConfig& cfg) {
  MatrixXcd f(cfg.N, cfg.N);
  for (int k = 0; k < cfg.N; ++k)
    for (int n = 0; n < cfg.N; ++n) f(k, n) = omega_pow(cfg, double(modb(cfg.N, n * k)));
  return f;
}

Eigen::MatrixXcd fourier_inverse(const RootConfig& cfg) { return fourier_matrix(cfg).conjugate() / double(cfg.N); }

Eigen::MatrixXcd to_fourier(const RootConfig& cfg, const MatrixXcd& weight_op) {
  if (weight_op.rows() != cfg.N || weight_op.cols() != cfg.N) throw std::invalid_argument("dimension mismatch");
  return fourier_inverse(cfg) * weight_op * fourier_matrix(cfg);
}

CentralScalars central_scalars(const RootConfig&, const LogWeylChar& lc) {
  SL2StarElement z = to_z0_char(lc.chi());
  return {z.kn(), z.en(), z.fn()};
}

namespace {

struct TwoSite {
  MatrixXcd x1, y1, z1, x2, y2, z2, I;
};

TwoSite two_site(const RootConfig& cfg, const LogWeylChar& lc1, const LogWeylChar& lc2) {
  GenMatrices a = rep_matrices(cfg, lc1, Basis::FOURIER);
  GenMatrices b = rep_matrices(cfg, lc2, Basis::FOURIER);
  MatrixXcd I = MatrixXcd::Identity(cfg.N, cfg.N);
  return {kron(a.x, I), kron(a.y, I), kron(a.z, I), kron(I, b.x), kron(I, b.y), kron(I, b.z),
          MatrixXcd::Identity(cfg.N * cfg.N, cfg.N * cfg.N)};
}

MatrixXcd checked_inverse(const MatrixXcd& g) {
  Eigen::JacobiSVD<MatrixXcd> svd(g);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) <= 0.0 || s(0) / s(s.size() - 1) > 1e12) throw SingularError("g is not invertible");
  return g.inverse();
}

}  // namespace

std::map<std::string, MatrixXcd> plain_images(const RootConfig& cfg, const LogWeylChar& lc1,
                                              const LogWeylChar& lc2) {
  TwoSite t = two_site(cfg, lc1, lc2);
  return {{"x1", t.x1}, {"x2", t.x2}, {"y1inv", t.y1.inverse()}, {"y2", t.y2}, {"z1", t.z1}, {"z2", t.z2}};
}

std::map<std::string, MatrixXcd> rw_images(const RootConfig& cfg, const LogWeylChar& lc1, const LogWeylChar& lc2,
                                           bool inverse) {
  TwoSite t = two_site(cfg, lc1, lc2);
  const MatrixXcd x1i = t.x1.inverse(), x2i = t.x2.inverse();
  const MatrixXcd y1i = t.y1.inverse(), y2i = t.y2.inverse();
  const MatrixXcd z2i = t.z2.inverse();
  std::map<std::string, MatrixXcd> out{{"z1", t.z1}, {"z2", t.z2}};
  if (!inverse) {
    MatrixXcd g = t.I - x1i * t.y1 * (t.z1 - t.x1) * y2i * (t.x2 - z2i);
    MatrixXcd gi = checked_inverse(g);
    out["x1"] = t.x1 * g;
    out["x2"] = gi * t.x2;
    out["y1inv"] = y2i + (y1i - z2i * y2i) * x2i;
    out["y2"] = t.z1 * z2i * t.y1 + (t.y2 - z2i * t.y1) * t.x1;
  } else {
    MatrixXcd gt = t.I - t.y1 * (t.z1 - t.x1) * y2i * (t.I - z2i * x2i);
    MatrixXcd gti = checked_inverse(gt);
    out["x1"] = t.x1 * gti;
    out["x2"] = gt * t.x2;
    out["y1inv"] = t.z1 * z2i * y2i + (y1i - t.z1 * y2i) * t.x2;
    out["y2"] = t.y1 + (t.y2 - t.z1 * t.y1) * x1i;
  }
  return out;
}

int commutant_dim(const GenMatrices& mats) {
  const Eigen::Index n = mats.K.rows();
  const MatrixXcd I = MatrixXcd::Identity(n, n);
  MatrixXcd sys(3 * n * n, n * n);
  // vec(MA - AM) = (I ⊗ M - Mᵀ ⊗ I) vec(A) in column-major vec.
  const MatrixXcd* gens[3] = {&mats.K, &mats.E, &mats.F};
  for (int i = 0; i < 3; ++i) sys.block(i * n * n, 0, n * n, n * n) = kron(I, *gens[i]) - kron(gens[i]->transpose(), I);
  Eigen::BDCSVD<MatrixXcd> svd(sys);
  const auto& s = svd.singularValues();
  const double cut = 1e-8 * s(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return int(n * n) - rank;
}

CoproductImages coproduct(const GenMatrices& m1, const GenMatrices& m2) {
  const Eigen::Index n1 = m1.K.rows(), n2 = m2.K.rows();
  const MatrixXcd I1 = MatrixXcd::Identity(n1, n1), I2 = MatrixXcd::Identity(n2, n2);
  return {kron(m1.K, m2.K), kron(m1.E, m2.K) + kron(I1, m2.E), kron(m1.F, I2) + kron(m1.K.inverse(), m2.F)};
}

}  // namespace holr
