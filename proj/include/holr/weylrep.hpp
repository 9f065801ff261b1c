#pragma once

#include <map>
#include <string>

#include <Eigen/Dense>

#include "holr/characters.hpp"

namespace holr {

enum class Basis { WEIGHT, FOURIER };

/// Images of the Weyl generators and of K, E, F, Ω on V(α, β, μ).
struct GenMatrices {
  Eigen::MatrixXcd x, y, z, K, E, F, Omega;
};

GenMatrices rep_matrices(const RootConfig& cfg, const LogWeylChar& lc, Basis basis);

/// F_{kn} = ω^{nk}: column n holds v̂_n in the weight basis.
Eigen::MatrixXcd fourier_matrix(const RootConfig& cfg);
Eigen::MatrixXcd fourier_inverse(const RootConfig& cfg);

/// Rewrite a weight-basis operator in the Fourier basis.
Eigen::MatrixXcd to_fourier(const RootConfig& cfg, const Eigen::MatrixXcd& weight_op);

struct CentralScalars {
  cplx KN, EN, FN;
};
CentralScalars central_scalars(const RootConfig& cfg, const LogWeylChar& lc);

/// 𝓡^W (or its inverse) on {x1, x2, y1inv, y2, z1, z2}, as operators on V(lc1)⊗V(lc2).
std::map<std::string, Eigen::MatrixXcd> rw_images(const RootConfig& cfg, const LogWeylChar& lc1,
                                                  const LogWeylChar& lc2, bool inverse = false);

/// The same generators acting plainly on V(lc1)⊗V(lc2) in the Fourier basis.
std::map<std::string, Eigen::MatrixXcd> plain_images(const RootConfig& cfg, const LogWeylChar& lc1,
                                                     const LogWeylChar& lc2);

/// Dimension of the joint commutant of K, E, F.
int commutant_dim(const GenMatrices& mats);

/// Δ(K), Δ(E), Δ(F) on V₁⊗V₂ with Δ(E) = E⊗K + 1⊗E, Δ(F) = F⊗1 + K⁻¹⊗F.
struct CoproductImages {
  Eigen::MatrixXcd K, E, F;
};
CoproductImages coproduct(const GenMatrices& m1, const GenMatrices& m2);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace holr
