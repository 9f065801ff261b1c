#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "holr/braidgrpd.hpp"

namespace holr {

struct Check {
  std::string name;
  int N = 0;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return deviation <= tolerance; }
};

/// Flattening with dist(ζ⁰, ℤ) > margin and a random integer branch of ζ¹.
Flattening random_flattening(std::mt19937_64& rng, double margin = 0.05);

/// Random non-pinched crossing with random integer branch choices.
CrossingData random_crossing(const RootConfig& cfg, std::mt19937_64& rng, int sign);

/// Random positive pinched crossing near a standard coloring; `t` moves it off the pinched locus.
struct PinchedOptions {
  std::optional<LogWeylChar> lc1;
  std::optional<cplx> alpha2, mu2;
  int alpha2p_shift = 0;
  bool alpha2p_equal_alpha2 = false;
};
CrossingData random_pinched_crossing(const RootConfig& cfg, std::mt19937_64& rng, double t = 0.0,
                                     const PinchedOptions& opt = {});
/// The same crossing family with β₂ = β₁ + μ₁ + t; deterministic given the seed.
CrossingData pinched_family(const RootConfig& cfg, std::uint64_t seed, double t, const PinchedOptions& opt = {});

double max_rel_dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
double rel_dev(cplx a, cplx b);

std::vector<Check> suite_qdilog(const RootConfig& cfg, std::mt19937_64& rng, int samples);
std::vector<Check> suite_characters(const RootConfig& cfg, std::mt19937_64& rng, int samples);
std::vector<Check> suite_weylrep(const RootConfig& cfg, std::mt19937_64& rng, int samples);
std::vector<Check> suite_rmatrix(const RootConfig& cfg, std::mt19937_64& rng, int samples);
std::vector<Check> suite_braids(const RootConfig& cfg, std::mt19937_64& rng, int samples);

/// Richardson-extrapolated limit of the generic formula along the pinched family.
Eigen::MatrixXcd pinched_limit(const RootConfig& cfg, std::uint64_t seed, const PinchedOptions& opt = {});

/// R3 pair σ₁σ₂σ₁ / σ₂σ₁σ₂ with matched boundary and equal log-longitudes.
std::pair<ColoredBraid, ColoredBraid> random_r3_pair(const RootConfig& cfg, std::mt19937_64& rng);

/// σ₁σ₂σ₁σ₂⁻¹σ₁⁻¹σ₂⁻¹ with top boundary copied to the bottom and zero log-longitudes.
ColoredBraid random_r3_loop(const RootConfig& cfg, std::mt19937_64& rng);

std::vector<Check> run_selftest(const std::vector<int>& Ns, std::uint64_t seed, const Tolerance& tol,
                                int samples = 4);

}  // namespace holr
