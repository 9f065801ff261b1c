#include "holr/selftest.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "holr/weylrep.hpp"

namespace holr {

using Eigen::MatrixXcd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Running maximum of the deviation per check name, in insertion order.
class Acc {
 public:
  Acc(int N, double tol) : N_(N), tol_(tol) {}

  void add(const std::string& name, double dev, double tol = -1.0) {
    auto it = idx_.find(name);
    if (it == idx_.end()) {
      idx_[name] = checks_.size();
      checks_.push_back({name, N_, 0.0, tol > 0 ? tol : tol_});
      it = idx_.find(name);
    }
    Check& c = checks_[it->second];
    if (std::isnan(dev)) dev = kInf;
    c.deviation = std::max(c.deviation, dev);
  }

  /// Runs `body`; any exception marks the check as failed.
  void guard(const std::string& name, const std::function<void()>& body, double tol = -1.0) {
    try {
      body();
    } catch (const std::exception&) {
      add(name, kInf, tol);
    }
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  int N_;
  double tol_;
  std::vector<Check> checks_;
  std::map<std::string, std::size_t> idx_;
};

cplx draw(std::mt19937_64& rng, double span = 1.0, double im_span = 0.25) {
  std::uniform_real_distribution<double> re(-span, span), im(-im_span, im_span);
  return {re(rng), im(rng)};
}

int draw_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double dist_int(cplx z) { return std::abs(z - std::round(z.real())); }

cplx near_log(cplx value, cplx ref) {
  const cplx v = log_param(value);
  return v + std::round((ref - v).real());
}

cplx sum_over(int N, const std::function<cplx(int)>& f) {
  cplx s = 0.0;
  for (int k = 0; k < N; ++k) s += f(k);
  return s;
}

}  // namespace

double rel_dev(cplx a, cplx b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

double max_rel_dev(const MatrixXcd& a, const MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return kInf;
  const double scale = std::max({a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff(), 1e-300});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

Flattening random_flattening(std::mt19937_64& rng, double margin) {
  for (;;) {
    const cplx z0 = draw(rng, 1.5, 0.4);
    if (dist_int(z0) <= margin) continue;
    return Flattening::from_zeta0(z0, draw_int(rng, -2, 2));
  }
}

CrossingData random_crossing(const RootConfig& cfg, std::mt19937_64& rng, int sign) {
  for (int tries = 0; tries < 1000; ++tries) {
    const LogWeylChar lc1 = random_log_char(rng), lc2 = random_log_char(rng);
    BranchChoice br{draw_int(rng, -2, 2), draw_int(rng, -2, 2), draw_int(rng, -2, 2)};
    CrossingData c;
    try {
      c = make_crossing(cfg, sign, lc1, lc2, draw(rng), br);
    } catch (const ConstraintError&) {
      continue;
    }
    bool ok = true;
    for (cplx z : zeta0_values(c)) ok = ok && dist_int(z) > 0.05;
    if (!ok) continue;
    if (std::abs(crossing_K(c)) > 1e3 || std::abs(crossing_K(c)) < 1e-3) continue;
    return c;
  }
  throw std::runtime_error("could not draw a non-pinched crossing");
}

namespace {

CrossingData pinched_from(const RootConfig& cfg, const LogWeylChar& lc1, cplx alpha2, cplx mu2, double t,
                          const PinchedOptions& opt) {
  const LogWeylChar lc2{alpha2, lc1.beta + lc1.mu + t, mu2};
  BraidOutcome o = braid(lc1.chi(), lc2.chi(), 1, cfg.tol.singular);
  if (!o.admissible) throw ConstraintError("inadmissible pinched draw");
  CrossingData c;
  c.sign = 1;
  c.lc1 = lc1;
  c.lc2 = lc2;
  cplx al2p = log_param(o.chi2p.a) + double(opt.alpha2p_shift);
  if (opt.alpha2p_equal_alpha2) al2p = near_log(o.chi2p.a, alpha2);
  c.gamma[RN] = 0.0;
  c.gamma[RW] = lc1.alpha;
  c.gamma[RS] = lc1.alpha + alpha2;
  c.gamma[RE] = al2p;
  c.lc2p = {al2p, near_log(o.chi2p.b, lc1.beta), mu2};
  c.lc1p = {c.gamma[RS] - c.gamma[RE], near_log(o.chi1p.b, lc1.beta + mu2), lc1.mu};
  return c;
}

}  // namespace

CrossingData random_pinched_crossing(const RootConfig& cfg, std::mt19937_64& rng, double t,
                                     const PinchedOptions& opt) {
  for (int tries = 0; tries < 1000; ++tries) {
    const LogWeylChar lc1 = opt.lc1 ? *opt.lc1 : random_log_char(rng);
    const cplx al2 = opt.alpha2 ? *opt.alpha2 : draw(rng);
    const cplx mu2 = opt.mu2 ? *opt.mu2 : draw(rng);
    try {
      return pinched_from(cfg, lc1, al2, mu2, t, opt);
    } catch (const ConstraintError&) {
      if (opt.lc1 && opt.alpha2 && opt.mu2) throw;
    }
  }
  throw std::runtime_error("could not draw a pinched crossing");
}

CrossingData pinched_family(const RootConfig& cfg, std::uint64_t seed, double t, const PinchedOptions& opt) {
  std::mt19937_64 rng(seed);
  return random_pinched_crossing(cfg, rng, t, opt);
}

MatrixXcd pinched_limit(const RootConfig& cfg, std::uint64_t seed, const PinchedOptions& opt) {
  const int levels = 4;
  std::vector<MatrixXcd> T;
  for (int k = 0; k < levels; ++k) T.push_back(rmat(cfg, pinched_family(cfg, seed, 1e-3 / std::pow(2.0, k), opt)).entries);
  for (int k = 1; k < levels; ++k) {
    const double f = std::pow(2.0, k);
    for (std::size_t i = 0; i + 1 < T.size(); ++i) T[i] = (f * T[i + 1] - T[i]) / (f - 1.0);
    T.pop_back();
  }
  return T.front();
}

std::vector<Check> suite_qdilog(const RootConfig& cfg, std::mt19937_64& rng, int samples) {
  const int N = cfg.N;
  Acc acc(N, cfg.tol.rel);
  const cplx D0 = d_const(cfg, 0.0);
  for (int s = 0; s < samples; ++s) {
    const Flattening f = random_flattening(rng);
    const cplx z0 = f.zeta0(), z1 = f.zeta1();
    const Flattening dual(-z1, -z0, 1e-8);
    const LambdaTable L(cfg, f), Ld(cfg, dual);
    const cplx S = s_norm(cfg, f);

    acc.guard("qlf recurrence", [&] {
      for (int n = 0; n < N; ++n)
        acc.add("qlf recurrence", rel_dev(L(n), L(0) * omega_pow(cfg, -double(n) * z1) * cyc_dilog(cfg, z0, n)));
    });
    acc.guard("qlf periodicity", [&] {
      acc.add("qlf periodicity", rel_dev(L(0) * omega_pow(cfg, -double(N) * z1) * cyc_dilog(cfg, z0, N), L(0)));
    });
    acc.guard("qlf shift zeta0", [&] {
      const int k = draw_int(rng, -3, 3);
      const LambdaTable Lk(cfg, Flattening(z0 + double(k), z1, 1e-8));
      for (int n = 0; n < N; ++n)
        acc.add("qlf shift zeta0", rel_dev(Lk(n), omega_pow(cfg, double(k) * z1 / 2.0) * L(n + k)));
    });
    acc.guard("qlf shift zeta1", [&] {
      const int k = draw_int(rng, -3, 3);
      const LambdaTable Lk(cfg, Flattening(z0, z1 + double(k), 1e-8));
      for (int n = 0; n < N; ++n)
        acc.add("qlf shift zeta1", rel_dev(Lk(n), omega_pow(cfg, -double(k) * z0 / 2.0 - double(n * k)) * L(n)));
    });
    acc.guard("qlf product", [&] {
      cplx p = 1.0;
      for (int k = 0; k < N; ++k) p *= L(k);
      const cplx rhs = omega_pow(cfg, -double(N * (N - 1)) * z1 / 2.0) * std::exp(-lifted_dilog(f) / kTwoPiI);
      acc.add("qlf product", rel_dev(p, rhs));
    });
    acc.guard("qlf inverse sum", [&] {
      const cplx scale = double(N) * omega_pow(cfg, double(N - 1) * (z0 + z1));
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          const cplx lhs = sum_over(N, [&](int n) { return omega_pow(cfg, double(n)) * L(n + k) / L(n + l - 1); });
          const cplx rhs = (k == l) ? scale * omega_pow(cfg, -double(k)) : 0.0;
          acc.add("qlf inverse sum", std::abs(lhs - rhs) / std::abs(scale));
        }
    });
    acc.guard("qlf Fourier pair", [&] {
      for (int n = 0; n < N; ++n) {
        const cplx fw = sum_over(N, [&](int k) { return L(k) * omega_pow(cfg, double(n * k)); });
        acc.add("qlf Fourier pair", rel_dev(fw, omega_pow(cfg, double(N - 1) * z0) * double(N) / S / Ld(n - 1)));
        const cplx bw = sum_over(N, [&](int k) { return omega_pow(cfg, -double(n * k)) / L(k); });
        acc.add("qlf Fourier pair",
                rel_dev(bw, S * omega_pow(cfg, double(N - 1) * z1) * omega_pow(cfg, double(n)) * Ld(n)));
      }
    });
    acc.guard("S symmetry", [&] { acc.add("S symmetry", rel_dev(S, s_norm(cfg, dual))); });
    acc.guard("S shift invariance", [&] {
      const int n = draw_int(rng, -3, 3);
      acc.add("S shift invariance", rel_dev(s_norm(cfg, Flattening(z0 + double(n), z1, 1e-8)), S));
      acc.add("S shift invariance", rel_dev(s_norm(cfg, Flattening(z0, z1 + double(n), 1e-8)), S));
    });
    acc.guard("S Nth power", [&] {
      const cplx rhs = std::pow(D0, N) * std::exp((lifted_dilog(f) + lifted_dilog(dual)) / kTwoPiI);
      acc.add("S Nth power", rel_dev(std::pow(S, N), rhs));
    });
    acc.guard("product factorization", [&] {
      cplx p = 1.0;
      for (int k = 0; k < N; ++k) p *= 1.0 - omega_pow(cfg, z0 + double(k));
      acc.add("product factorization", rel_dev(p, 1.0 - exp2pi(z0)));
      acc.add("product factorization", rel_dev(p, exp2pi(-z1)));
    });
    acc.guard("q-series transform", [&] {
      for (int n = 0; n < N; ++n) {
        const cplx lhs =
            sum_over(N, [&](int k) { return omega_pow(cfg, double(k) * (z1 - double(n))) / cyc_dilog(cfg, z0, k); });
        const cplx rhs = omega_pow(cfg, double(n) + double(N - 1) * (z0 + z1)) *
                         sum_over(N, [&](int k) { return omega_pow(cfg, -double(k) * z0) / cyc_dilog(cfg, -z1 + double(n), k); });
        acc.add("q-series transform", rel_dev(lhs, rhs));
      }
    });

    // Fusion identities on independent parameters.
    acc.guard("fusion identity generic", [&] {
      cplx al = draw(rng), be = draw(rng);
      while (dist_int(al) < 0.05 || dist_int(be) < 0.05) al = draw(rng), be = draw(rng);
      const cplx ga = log_param((1.0 - exp2pi(al)) / (1.0 - exp2pi(be))) + double(draw_int(rng, -2, 2));
      const int k = draw_int(rng, -N, N), l = draw_int(rng, -N, N), m = draw_int(rng, -N, N);
      const cplx lhs = fusion_f(cfg, al + double(k), be + double(l), ga + double(m));
      const cplx num = cyc_dilog(cfg, al - be - 1.0, k - l) * cyc_dilog(cfg, be, l) * cyc_dilog(cfg, -ga, -m);
      const cplx den = omega_pow(cfg, double(l) * (ga + double(m))) * omega_pow(cfg, double(m) * (be + 1.0)) *
                       cyc_dilog(cfg, al, k) * cyc_dilog(cfg, al - be - ga - 1.0, k - l - m);
      acc.add("fusion identity generic", rel_dev(lhs, fusion_f(cfg, al, be, ga) * num / den));
    });
    acc.guard("fusion identity integral", [&] {
      cplx al = draw(rng);
      while (dist_int(al) < 0.05) al = draw(rng);
      const int k = draw_int(rng, -N, N), l = draw_int(rng, -N, N), m = draw_int(rng, -N, N);
      const int kl = modb(N, k - l), mm = modb(N, -m);
      const cplx lhs = fusion_f(cfg, al + double(k), al + double(l - 1), double(m));
      const cplx rhs = double(N) * (1.0 - omega_pow(cfg, al + double(l))) / (1.0 - exp2pi(al)) *
                       omega_pow(cfg, double(mm) * (al + double(l))) / cyc_dilog(cfg, al + double(l), kl) *
                       qpoch_omega(cfg, kl + mm) / (qpoch_omega(cfg, kl) * qpoch_omega(cfg, mm));
      const double scale = std::max(std::abs(lhs), std::abs(fusion_f(cfg, al, al - 1.0, 0.0)));
      acc.add("fusion identity integral", std::abs(lhs - rhs) / scale);
    });
    acc.guard("fusion Nth power", [&] {
      cplx be = draw(rng);
      while (dist_int(be) < 0.05) be = draw(rng);
      const cplx ga = -log_param(1.0 - exp2pi(be)) + double(draw_int(rng, -2, 2));
      const cplx lhs = std::pow(sum_over(N, [&](int k) { return omega_pow(cfg, double(k) * ga) / cyc_dilog(cfg, be, k); }), N);
      const cplx rhs =
          std::pow(omega_pow(cfg, double(N - 1) * be) * D0 / (d_const(cfg, 1.0 - ga) * d_const(cfg, be + 1.0)), N);
      acc.add("fusion Nth power", rel_dev(lhs, rhs));
    });
  }
  return acc.take();
}

std::vector<Check> suite_characters(const RootConfig& cfg, std::mt19937_64& rng, int samples) {
  Acc acc(cfg.N, cfg.tol.rel);
  const double tight = std::max(cfg.tol.rel * 0.1, 1e-300);
  auto char_dev = [](const WeylChar& x, const WeylChar& y) {
    return std::max({rel_dev(x.a, y.a), rel_dev(x.b, y.b), rel_dev(x.m, y.m)});
  };
  for (int s = 0; s < samples; ++s) {
    const WeylChar c1 = random_log_char(rng).chi(), c2 = random_log_char(rng).chi();
    for (int sign : {1, -1}) {
      BraidOutcome o = braid(c1, c2, sign);
      if (!o.admissible) continue;
      acc.guard("braid inverse pair", [&] {
        BraidOutcome back = braid(o.chi2p, o.chi1p, -sign);
        acc.add("braid inverse pair", std::max(char_dev(back.chi2p, c1), char_dev(back.chi1p, c2)));
      });
      acc.add("meridian preservation", (o.chi1p.m == c1.m && o.chi2p.m == c2.m) ? 0.0 : kInf, 0.0 + 1e-300);
      acc.guard("product preservation", [&] {
        const SL2StarElement before = char_product(to_z0_char(c1), to_z0_char(c2));
        const SL2StarElement after = char_product(to_z0_char(o.chi2p), to_z0_char(o.chi1p));
        acc.add("product preservation", max_rel_dev(before.lower, after.lower));
        acc.add("product preservation", max_rel_dev(before.upper, after.upper));
      });
    }
    acc.guard("braid relation", [&] {
      const DiagramGraph a = build_diagram({3, {1, 2, 1}}), b = build_diagram({3, {2, 1, 2}});
      const std::vector<WeylChar> top = random_top_colors(a, rng);
      const ChiColoring ca = propagate_chi(a, top), cb = propagate_chi(b, top);
      if (!cb.ok) return;
      for (int p = 0; p < 3; ++p)
        acc.add("braid relation", char_dev(ca.colors[a.bottom_segments[p]], cb.colors[b.bottom_segments[p]]), 1e-9);
    }, 1e-9);
    acc.guard("Casimir relation", [&] {
      const LogWeylChar lc = random_log_char(rng);
      acc.add("Casimir relation", casimir_relation(cfg, lc.chi(), lc.mu), 1e-10);
    }, 1e-10);
    acc.guard("psi determinant", [&] {
      acc.add("psi determinant", std::abs(psi(c1).determinant() - 1.0), tight);
    }, tight);
  }
  return acc.take();
}

std::vector<Check> suite_weylrep(const RootConfig& cfg, std::mt19937_64& rng, int samples) {
  const int N = cfg.N;
  Acc acc(N, std::max(cfg.tol.rel * 1e-2, 1e-300));
  const cplx xi = cfg.xi;
  for (int s = 0; s < samples; ++s) {
    const LogWeylChar lc = random_log_char(rng);
    for (Basis basis : {Basis::WEIGHT, Basis::FOURIER}) {
      const GenMatrices g = rep_matrices(cfg, lc, basis);
      const MatrixXcd I = MatrixXcd::Identity(N, N), Ki = g.K.inverse();
      acc.add("U_xi relations", max_rel_dev(g.K * g.E, xi * xi * g.E * g.K));
      acc.add("U_xi relations", max_rel_dev(g.K * g.F, g.F * g.K / (xi * xi)));
      acc.add("U_xi relations", max_rel_dev(g.E * g.F - g.F * g.E, (xi - 1.0 / xi) * (g.K - Ki)));
      const CentralScalars cs = central_scalars(cfg, lc);
      auto mpow = [&](const MatrixXcd& m) {
        MatrixXcd r = I;
        for (int k = 0; k < N; ++k) r = r * m;
        return r;
      };
      acc.add("central scalars", max_rel_dev(mpow(g.K), cs.KN * I));
      acc.add("central scalars", max_rel_dev(mpow(g.E), cs.EN * I));
      acc.add("central scalars", max_rel_dev(mpow(g.F), cs.FN * I));
      const cplx t = omega_pow(cfg, lc.mu + 0.5);
      acc.add("Casimir scalar", max_rel_dev(g.Omega, (t + 1.0 / t) * I));
      if (basis == Basis::WEIGHT) {
        acc.guard("commutant dimension", [&] {
          acc.add("commutant dimension", commutant_dim(g) == 1 ? 0.0 : kInf);
        });
      }
    }
    acc.guard("tensor grading", [&] {
      const LogWeylChar lc2 = random_log_char(rng);
      const GenMatrices g1 = rep_matrices(cfg, lc, Basis::WEIGHT), g2 = rep_matrices(cfg, lc2, Basis::WEIGHT);
      const CoproductImages d = coproduct(g1, g2);
      const MatrixXcd Ki = d.K.inverse();
      acc.add("tensor grading", max_rel_dev(d.K * d.E, xi * xi * d.E * d.K));
      acc.add("tensor grading", max_rel_dev(d.K * d.F, d.F * d.K / (xi * xi)));
      acc.add("tensor grading", max_rel_dev(d.E * d.F - d.F * d.E, (xi - 1.0 / xi) * (d.K - Ki)));
      // ΔK is diagonal in the product weight basis
      MatrixXcd off = d.K;
      off.diagonal().setZero();
      acc.add("tensor grading", off.cwiseAbs().maxCoeff() / d.K.cwiseAbs().maxCoeff());
    });
  }
  return acc.take();
}

namespace {

double intertwining_dev(const RootConfig& cfg, const CrossingData& c) {
  const RTensor r = rmat(cfg, c);
  const MatrixXcd M = intertwiner(r, c.sign);
  auto P = c.sign == 1 ? plain_images(cfg, c.lc1, c.lc2) : plain_images(cfg, c.lc2, c.lc1);
  auto Q = c.sign == 1 ? rw_images(cfg, c.lc1p, c.lc2p, false) : rw_images(cfg, c.lc2p, c.lc1p, true);
  double dev = 0.0;
  for (const auto& [name, p] : P) dev = std::max(dev, max_rel_dev(M * p, Q.at(name) * M));
  return dev;
}

double recurrence_dev(const RootConfig& cfg, const CrossingData& c) {
  const int N = cfg.N;
  const RTensor r = rmat(cfg, c);
  const ZetaSet z = crossing_zetas(cfg, c);
  auto R = [&](int a, int b, int ap, int bp) { return r.at(modb(N, a), modb(N, b), modb(N, ap), modb(N, bp)); };
  auto w = [&](cplx x) { return omega_pow(cfg, x); };
  const cplx al1 = c.lc1.alpha, al2 = c.lc2.alpha, al1p = c.lc1p.alpha, al2p = c.lc2p.alpha;
  const cplx mu1 = c.lc1.mu, mu2 = c.lc2.mu;
  const double scale = r.entries.cwiseAbs().maxCoeff();
  double dev = 0.0;
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          const cplx here = R(n1, n2, a, b);
          const cplx e1 = here * (1.0 - w(z.z0[RN] + double(b - n1))) -
                          w(-al2p - mu2) * (1.0 - w(z.z0[RE] + double(b - a))) * R(n1, n2, a, b - 1);
          const cplx e2 = here * (1.0 - w(z.z0[RE] + double(b - a + 1))) -
                          w(-al1p + mu1) * (1.0 - w(z.z0[RS] + double(n2 - a + 1))) * R(n1, n2, a - 1, b);
          const cplx e3 = here * (1.0 - w(z.z0[RS] + double(n2 - a))) -
                          w(al2 + mu2 + 1.0) * (1.0 - w(z.z0[RW] - 1.0 + double(n2 - n1))) * R(n1, n2 - 1, a, b);
          const cplx e4 = here * (1.0 - w(z.z0[RW] + double(n2 - n1))) -
                          w(al1 - mu1 - 1.0) * (1.0 - w(z.z0[RN] + double(b - n1 + 1))) * R(n1 - 1, n2, a, b);
          dev = std::max({dev, std::abs(e1), std::abs(e2), std::abs(e3), std::abs(e4)});
        }
  return dev / scale;
}

MatrixXcd ybe_side(const MatrixXcd& B, int N, bool left) {
  const MatrixXcd I = MatrixXcd::Identity(N, N);
  const MatrixXcd B12 = kron(B, I), B23 = kron(I, B);
  return left ? MatrixXcd(B12 * B23 * B12) : MatrixXcd(B23 * B12 * B23);
}

}  // namespace

std::vector<Check> suite_rmatrix(const RootConfig& cfg, std::mt19937_64& rng, int samples) {
  const int N = cfg.N;
  Acc acc(N, cfg.tol.rel);
  const double tol = cfg.tol.rel;
  for (int s = 0; s < samples; ++s) {
    for (int sign : {1, -1}) {
      const CrossingData c = random_crossing(cfg, rng, sign);
      acc.guard("intertwining", [&] { acc.add("intertwining", intertwining_dev(cfg, c)); });
      if (sign == 1) acc.guard("recurrences", [&] { acc.add("recurrences", recurrence_dev(cfg, c)); });
      acc.guard("factorization", [&] {
        acc.add("factorization", max_rel_dev(compose_factorized(factorized_ops(cfg, c)), braiding_from(rmat(cfg, c))),
                std::min(tol, 1e-9));
      }, std::min(tol, 1e-9));
      acc.guard("determinant", [&] {
        acc.add("determinant", rel_dev(det_braiding(cfg, c), det_lu(braiding_from(rmat(cfg, c)))), std::max(tol, 1e-7));
      }, std::max(tol, 1e-7));
      acc.guard("parallel assembly", [&] {
        acc.add("parallel assembly", max_rel_dev(rmat(cfg, c).entries, rmat_serial(cfg, c).entries));
      });
      acc.guard("kappa independence", [&] {
        CrossingData k = c;
        k.kappa = log_param(crossing_K(c)) + double(draw_int(rng, -3, 3));
        acc.add("kappa independence", max_rel_dev(rmat(cfg, k).entries, rmat(cfg, c).entries));
      });
      acc.guard("gamma and beta rules", [&] {
        Shifts sh;
        for (int j = 0; j < 4; ++j) sh.k[j] = draw_int(rng, -2, 2), sh.l[j] = draw_int(rng, -2, 2);
        const TransformResult t = transform_rules(cfg, c, sh);
        acc.add("gamma and beta rules", max_rel_dev(rmat(cfg, t.shifted).entries, apply_transform(cfg, rmat(cfg, c), t).entries));
      });
      acc.guard("R2 contraction", [&] {
        const CrossingData p = r2_partner(c);
        const MatrixXcd b = braiding_from(rmat(cfg, c)), bp = braiding_from(rmat(cfg, p));
        const MatrixXcd I = MatrixXcd::Identity(N * N, N * N);
        acc.add("R2 contraction", max_rel_dev(bp * b, I));
        acc.add("R2 contraction", max_rel_dev(b * bp, I));
      });
    }
    const std::uint64_t seed = rng();
    acc.guard("pinched limit", [&] {
      const RTensor closed = rmat_pinched(cfg, pinched_family(cfg, seed, 0.0));
      const MatrixXcd lim = pinched_limit(cfg, seed);
      acc.add("pinched limit", (closed.entries - lim).cwiseAbs().maxCoeff(), 1e-5);
    }, 1e-5);
    acc.guard("pinched negative inverse", [&] {
      const CrossingData pos = pinched_family(cfg, seed, 0.0);
      const MatrixXcd b = braiding_op(cfg, pos), bn = braiding_op(cfg, r2_partner(pos));
      acc.add("pinched negative inverse", max_rel_dev(bn * b, MatrixXcd::Identity(N * N, N * N)));
    });
    acc.guard("weight basis dual form", [&] {
      const WeightBasisResult w = weight_basis_rmat(cfg, pinched_family(cfg, seed, 0.0));
      acc.add("weight basis dual form", max_rel_dev(w.conjugated.entries, w.closed_form.entries));
    });
    acc.guard("weight basis nilpotent form", [&] {
      PinchedOptions opt;
      const cplx m = draw(rng);
      opt.lc1 = LogWeylChar{m, draw(rng), m};
      opt.alpha2p_equal_alpha2 = true;
      const CrossingData c = pinched_family(cfg, rng(), 0.0, opt);
      const RTensor w = to_weight_basis(cfg, rmat_pinched(cfg, c));
      acc.add("weight basis nilpotent form", max_rel_dev(w.entries, nilpotent_dual_rmat(cfg, c).entries));
    });
  }
  acc.guard("colored Jones form", [&] {
    const RTensor w = to_weight_basis(cfg, rmat_pinched(cfg, kashaev_crossing()));
    acc.add("colored Jones form", max_rel_dev(w.entries, colored_jones_rmat(cfg).entries));
  });
  acc.guard("Kashaev normalization", [&] {
    const MatrixXcd k = kashaev_rmat(cfg).entries * omega_pow(cfg, -0.5);
    acc.add("Kashaev normalization", max_rel_dev(rmat_pinched(cfg, kashaev_crossing()).entries, k), 1e-12);
  }, 1e-12);
  acc.guard("Kashaev YBE", [&] {
    const MatrixXcd B = braiding_from(kashaev_rmat(cfg));
    acc.add("Kashaev YBE", max_rel_dev(ybe_side(B, N, true), ybe_side(B, N, false)), 1e-10);
  }, 1e-10);
  return acc.take();
}

std::pair<ColoredBraid, ColoredBraid> random_r3_pair(const RootConfig& cfg, std::mt19937_64& rng) {
  const BraidWord wa{3, {1, 2, 1}}, wb{3, {2, 1, 2}};
  for (int tries = 0; tries < 200; ++tries) {
    const std::vector<WeylChar> top = random_top_colors(build_diagram(wa), rng);
    const ChiColoring cb = propagate_chi(build_diagram(wb), top, 1e-6);
    if (!cb.ok) continue;
    bool pinched = false;
    for (bool p : cb.pinched) pinched = pinched || p;
    if (pinched) continue;
    ColoredBraid a = make_colored_braid(cfg, wa, top);
    ColoredBraid b = make_colored_braid(cfg, wb, top, matching_seeds(a));
    adjust_longitudes(b.diagram, b.log, log_longitudes(a.diagram, a.log));
    return {a, b};
  }
  throw std::runtime_error("could not draw an R3 coloring");
}

ColoredBraid random_r3_loop(const RootConfig& cfg, std::mt19937_64& rng) {
  const BraidWord w{3, {1, 2, 1, -2, -1, -2}};
  const DiagramGraph d = build_diagram(w);
  for (int tries = 0; tries < 200; ++tries) {
    const std::vector<WeylChar> top = random_top_colors(d, rng);
    ColoredBraid cb = make_colored_braid(cfg, w, top);
    LogSeeds seeds = matching_seeds(cb);
    // bottom boundary equal to the top one
    for (int p = 0; p < 3; ++p) seeds.bottom_beta[p] = seeds.top_beta[p];
    for (int c = 1; c < 3; ++c) seeds.bottom_gamma[c] = cb.log.gamma[d.top_regions[c]];
    try {
      ColoredBraid loop = make_colored_braid(cfg, w, top, seeds);
      adjust_longitudes(loop.diagram, loop.log, std::vector<cplx>(3, 0.0));
      return loop;
    } catch (const ConstraintError&) {
      continue;
    }
  }
  throw std::runtime_error("could not draw an R3 loop coloring");
}

std::vector<Check> suite_braids(const RootConfig& cfg, std::mt19937_64& rng, int samples) {
  const int N = cfg.N;
  Acc acc(N, cfg.tol.rel);
  for (int s = 0; s < samples; ++s) {
    acc.guard("R2 move", [&] {
      for (int sign : {1, -1}) {
        const BraidWord w{2, {sign, -sign}};
        const std::vector<WeylChar> top = random_top_colors(build_diagram(w), rng);
        const ColoredBraid id = make_colored_braid(cfg, {2, {}}, top);
        const ColoredBraid b = make_colored_braid(cfg, w, top, matching_seeds(id));
        const MoveReport rep = check_move(cfg, id, b, MoveKind::R2);
        acc.add("R2 move", rep.eligible ? rep.deviation : kInf, std::max(cfg.tol.rel, 1e-8));
      }
    }, std::max(cfg.tol.rel, 1e-8));
    acc.guard("R3 move", [&] {
      auto [a, b] = random_r3_pair(cfg, rng);
      const MoveReport rep = check_move(cfg, a, b, MoveKind::R3);
      acc.add("R3 move", rep.eligible ? rep.deviation : kInf, std::max(cfg.tol.rel, 1e-7));
    }, std::max(cfg.tol.rel, 1e-7));
    acc.guard("R3 loop", [&] {
      const ColoredBraid loop = random_r3_loop(cfg, rng);
      const MatrixXcd J = jfunc_eval(cfg, loop.diagram, loop.log);
      acc.add("R3 loop", max_rel_dev(J, MatrixXcd::Identity(J.rows(), J.cols())), std::max(cfg.tol.rel, 1e-7));
      cplx prod = 1.0;
      for (std::size_t c = 0; c < loop.diagram.crossings.size(); ++c)
        prod *= det_lu(braiding_op(cfg, crossing_data(loop.diagram, loop.log, int(c))));
      acc.add("R3 determinant product", std::min(std::abs(prod - 1.0), std::abs(prod + 1.0)), 1e-6);
    }, std::max(cfg.tol.rel, 1e-7));
    acc.guard("log dependence", [&] {
      const BraidWord w{3, {1, -2, 1, 2}};
      const std::vector<WeylChar> top = random_top_colors(build_diagram(w), rng);
      const ColoredBraid cb = make_colored_braid(cfg, w, top);
      const DiagramGraph& d = cb.diagram;
      LogColoring shifted = cb.log;
      for (std::size_t r = 0; r < d.regions.size(); ++r)
        if (d.regions[r].top_crossing >= 0 && d.regions[r].bottom_crossing >= 0) shifted.gamma[r] += double(draw_int(rng, -2, 2));
      for (std::size_t sg = 0; sg < d.segments.size(); ++sg)
        if (d.segments[sg].top_crossing >= 0 && d.segments[sg].bottom_crossing >= 0)
          shifted.beta[sg] += double(draw_int(rng, -2, 2));
      const auto l0 = log_longitudes(d, cb.log), l1 = log_longitudes(d, shifted);
      cplx expo = 0.0;
      for (int k = 0; k < d.components; ++k) expo += (l1[k] - l0[k]) * cb.log.mu[k];
      const MatrixXcd J0 = jfunc_eval(cfg, d, cb.log), J1 = jfunc_eval(cfg, d, shifted);
      acc.add("log dependence", max_rel_dev(J1, std::exp(-kTwoPiI * expo / double(N)) * J0));
    });
    acc.guard("edge gluing", [&] {
      const BraidWord w{3, {1, 2, -1, 2, 1}};
      const std::vector<WeylChar> top = random_top_colors(build_diagram(w), rng);
      const ColoredBraid cb = make_colored_braid(cfg, w, top);
      for (const auto& [r, v] : edge_gluing_residuals(cb.diagram, cb.log)) acc.add("edge gluing", std::abs(v), 1e-10);
    }, 1e-10);
    acc.guard("functoriality", [&] {
      const BraidWord w{3, {1, 2, -1, -2}}, w1{3, {1, 2}}, w2{3, {-1, -2}};
      const std::vector<WeylChar> top = random_top_colors(build_diagram(w), rng);
      const ColoredBraid full = make_colored_braid(cfg, w, top);
      const ColoredBraid first = make_colored_braid(cfg, w1, top);
      std::vector<WeylChar> mid;
      for (int p = 0; p < 3; ++p) mid.push_back(first.chi.colors[first.diagram.bottom_segments[p]]);
      LogSeeds seeds;
      seeds.gamma0 = first.log.gamma[first.diagram.bottom_regions[0]];
      for (int p = 0; p < 3; ++p) {
        seeds.top_alpha.push_back(segment_alpha(first.diagram, first.log, first.diagram.bottom_segments[p]));
        seeds.top_beta[p] = first.log.beta[first.diagram.bottom_segments[p]];
      }
      // the strands of the second piece are relabelled by the permutation of the first
      std::vector<cplx> mu2(3);
      for (int p = 0; p < 3; ++p) mu2[p] = first.log.mu[first.diagram.segments[first.diagram.bottom_segments[p]].component];
      seeds.mu = mu2;
      const ColoredBraid second = make_colored_braid(cfg, w2, mid, seeds);
      const MatrixXcd J = jfunc_eval(cfg, full.diagram, full.log);
      const MatrixXcd J12 = jfunc_eval(cfg, second.diagram, second.log) * jfunc_eval(cfg, first.diagram, first.log);
      acc.add("functoriality", max_rel_dev(J, J12), std::max(cfg.tol.rel, 1e-10));
    }, std::max(cfg.tol.rel, 1e-10));
    acc.guard("parallel jfunc", [&] {
      const BraidWord w{3, {2, 1, -2}};
      const std::vector<WeylChar> top = random_top_colors(build_diagram(w), rng);
      const ColoredBraid cb = make_colored_braid(cfg, w, top);
      acc.add("parallel jfunc",
              max_rel_dev(jfunc_eval(cfg, cb.diagram, cb.log), jfunc_eval_serial(cfg, cb.diagram, cb.log)));
    });
  }
  return acc.take();
}

std::vector<Check> run_selftest(const std::vector<int>& Ns, std::uint64_t seed, const Tolerance& tol, int samples) {
  std::vector<Check> all;
  for (int N : Ns) {
    const RootConfig cfg(N, tol);
    std::mt19937_64 rng(seed * 1000003ULL + std::uint64_t(N));
    for (auto suite : {suite_qdilog, suite_characters, suite_weylrep, suite_rmatrix, suite_braids}) {
      std::vector<Check> part = suite(cfg, rng, samples);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  return all;
}

}  // namespace holr
