// Acceptance driver: one PASS/FAIL line per criterion, identities checked as stated.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "holr/cli.hpp"
#include "holr/selftest.hpp"
#include "holr/weylrep.hpp"

using namespace holr;
using Eigen::MatrixXcd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const std::vector<int> kNs = {2, 3, 5, 7};

/// Running maxima per named check. Counted checks decide the verdict; notes are printed only.
class Report {
 public:
  void add(const std::string& name, double dev, double tol) { update(counted_, order_, name, dev, tol); }
  void note(const std::string& name, double dev, double tol) { update(notes_, note_order_, name, dev, tol); }

  /// Runs body; an exception marks the named check as failed.
  void guard(const std::string& name, double tol, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, kInf, tol);
      errors_[name] = e.what();
    }
  }

  void take(const std::vector<Check>& checks, const std::set<std::string>& as_notes = {}) {
    for (const Check& c : checks) {
      if (as_notes.count(c.name)) note(c.name, c.deviation, c.tolerance);
      else add(c.name, c.deviation, c.tolerance);
    }
  }

  bool print(int k) const {
    bool ok = true;
    std::vector<std::string> failed;
    for (const std::string& n : order_) {
      const auto& [dev, tol] = counted_.at(n);
      const bool pass = dev <= tol;
      ok = ok && pass;
      if (!pass) failed.push_back(n);
      std::printf("  %-4s %-48s max dev %.3e  tol %.1e", pass ? "ok" : "FAIL", n.c_str(), dev, tol);
      if (errors_.count(n)) std::printf("  (%s)", errors_.at(n).c_str());
      std::printf("\n");
    }
    for (const std::string& n : note_order_) {
      const auto& [dev, tol] = notes_.at(n);
      std::printf("  note %-48s max dev %.3e  tol %.1e  %s\n", n.c_str(), dev, tol, dev <= tol ? "holds" : "fails");
    }
    if (ok) {
      std::printf("criterion %d: PASS\n", k);
    } else {
      std::printf("criterion %d: FAIL (", k);
      for (std::size_t i = 0; i < failed.size(); ++i) std::printf("%s%s", i ? ", " : "", failed[i].c_str());
      std::printf(")\n");
    }
    return ok;
  }

 private:
  using Table = std::map<std::string, std::pair<double, double>>;
  static void update(Table& t, std::vector<std::string>& order, const std::string& name, double dev, double tol) {
    auto it = t.find(name);
    if (it == t.end()) {
      t[name] = {dev, tol};
      order.push_back(name);
    } else {
      it->second.first = std::max(it->second.first, dev);
    }
  }
  Table counted_, notes_;
  std::vector<std::string> order_, note_order_;
  std::map<std::string, std::string> errors_;
};

std::mt19937_64 make_rng(int criterion, int N) {
  return std::mt19937_64(cli::kDefaultSeed * 1000003ULL + std::uint64_t(criterion) * 101ULL + std::uint64_t(N));
}

cplx draw(std::mt19937_64& rng, double span = 1.0, double im_span = 0.25) {
  std::uniform_real_distribution<double> re(-span, span), im(-im_span, im_span);
  return {re(rng), im(rng)};
}

int draw_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double dist_int(cplx z) { return std::abs(z - std::round(z.real())); }

// ---------------------------------------------------------------------------------------------
// 1. Quantum dilogarithm identities

void criterion_1(Report& rep) {
  constexpr int kSamples = 100;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(1, N);
    rep.take(suite_qdilog(cfg, rng, kSamples), {"S shift invariance", "fusion Nth power"});
    const cplx D0 = d_const(cfg, 0.0);
    for (int s = 0; s < kSamples; ++s) {
      const Flattening f = random_flattening(rng);
      const cplx z0 = f.zeta0(), z1 = f.zeta1(), S = s_norm(cfg, f);
      int n = 0;
      while (n == 0) n = draw_int(rng, -3, 3);
      rep.guard("S shift rules", 1e-8, [&] {
        rep.add("S shift rules", rel_dev(s_norm(cfg, Flattening(z0 + double(n), z1, 1e-8)), omega_pow(cfg, double(n) * z1) * S), 1e-8);
        rep.add("S shift rules", rel_dev(s_norm(cfg, Flattening(z0, z1 + double(n), 1e-8)), omega_pow(cfg, double(n) * z0) * S), 1e-8);
      });
      rep.guard("f Nth power", 1e-8, [&] {
        cplx be = draw(rng);
        while (dist_int(be) < 0.05) be = draw(rng);
        const cplx ga = -log_param(1.0 - exp2pi(be)) + double(draw_int(rng, -2, 2));
        cplx sum = 0.0;
        for (int k = 0; k < N; ++k) sum += omega_pow(cfg, double(k) * ga) / cyc_dilog(cfg, be, k);
        const cplx lhs = std::pow(sum, N);
        const cplx stated = std::pow(
            omega_pow(cfg, double(N * (N - 1)) * be) * D0 / (d_const(cfg, ga - 1.0) * d_const(cfg, be + 1.0)), N);
        const cplx corrected =
            std::pow(omega_pow(cfg, double(N - 1) * be) * D0 / (d_const(cfg, 1.0 - ga) * d_const(cfg, be + 1.0)), N);
        rep.add("f Nth power", rel_dev(lhs, stated), 1e-8);
        rep.note("f Nth power, corrected form", rel_dev(lhs, corrected), 1e-8);
      });
    }
  }
}

// ---------------------------------------------------------------------------------------------
// 2. Intertwining

void criterion_2(Report& rep) {
  constexpr int kSamples = 50;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(2, N);
    for (int s = 0; s < kSamples; ++s)
      for (int sign : {1, -1}) {
        const std::string name = sign == 1 ? "intertwining, positive" : "intertwining, negative";
        rep.guard(name, 1e-8, [&] {
          const CrossingData c = random_crossing(cfg, rng, sign);
          const MatrixXcd M = intertwiner(rmat(cfg, c), sign);
          const auto P = sign == 1 ? plain_images(cfg, c.lc1, c.lc2) : plain_images(cfg, c.lc2, c.lc1);
          const auto Q = sign == 1 ? rw_images(cfg, c.lc1p, c.lc2p, false) : rw_images(cfg, c.lc2p, c.lc1p, true);
          if (P.size() != 6) throw std::runtime_error("expected six generators");
          for (const auto& [gen, p] : P) rep.add(name, max_rel_dev(M * p, Q.at(gen) * M), 1e-8);
        });
      }
  }
}

// ---------------------------------------------------------------------------------------------
// 3. Recurrences at positive crossings

void criterion_3(Report& rep) {
  constexpr int kSamples = 50;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(3, N);
    for (int s = 0; s < kSamples; ++s) {
      const CrossingData c = random_crossing(cfg, rng, 1);
      const RTensor r = rmat(cfg, c);
      const ZetaSet z = crossing_zetas(cfg, c);
      auto R = [&](int a, int b, int ap, int bp) { return r.at(modb(N, a), modb(N, b), modb(N, ap), modb(N, bp)); };
      auto w = [&](cplx x) { return omega_pow(cfg, x); };
      const cplx al1 = c.lc1.alpha, al2 = c.lc2.alpha, al1p = c.lc1p.alpha, al2p = c.lc2p.alpha;
      const cplx mu1 = c.lc1.mu, mu2 = c.lc2.mu;
      const cplx zN = z.z0[RN], zW = z.z0[RW], zS = z.z0[RS], zE = z.z0[RE];
      auto dev = [&](cplx lhs, cplx rhs) { return rel_dev(lhs, rhs); };
      for (int n1 = 0; n1 < N; ++n1)
        for (int n2 = 0; n2 < N; ++n2)
          for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
              const cplx here = R(n1, n2, a, b);
              rep.add("recurrence (i)",
                      dev(here, R(n1, n2, a, b - 1) * w(-al2p - mu2) * (1.0 - w(zE + double(b - a))) /
                                    (1.0 - w(zN + double(b - n1)))),
                      1e-8);
              rep.add("recurrence (ii)",
                      dev(here, R(n1, n2, a - 1, b) * w(-al1p + mu1) * (1.0 - w(zS - double(n2) - double(a) + 1.0)) /
                                    (1.0 - w(zE + double(b - a + 1)))),
                      1e-8);
              rep.note("recurrence (ii), corrected form",
                       dev(here, R(n1, n2, a - 1, b) * w(-al1p + mu1) * (1.0 - w(zS + double(n2) - double(a) + 1.0)) /
                                     (1.0 - w(zE + double(b - a + 1)))),
                       1e-8);
              rep.add("recurrence (iii)",
                      dev(here, R(n1, n2 - 1, a, b) * w(al2 + mu2 + 1.0) * (1.0 - w(zW - 1.0 + double(n2 - n1))) /
                                    (1.0 - w(zS + double(n2 - a)))),
                      1e-8);
              rep.add("recurrence (iv)",
                      dev(here, R(n1 - 1, n2, a, b) * w(al1 - mu1 - 1.0) * (1.0 - w(zN + double(b - n1 + 1))) /
                                    (1.0 - w(zW - 1.0 + double(n2 - n1 + 1)))),
                      1e-8);
            }
    }
  }
}

// ---------------------------------------------------------------------------------------------
// 4. R2 contraction

void criterion_4(Report& rep) {
  constexpr int kSamples = 50;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(4, N);
    const MatrixXcd I = MatrixXcd::Identity(N * N, N * N);
    for (int s = 0; s < kSamples; ++s)
      for (int sign : {1, -1})
        rep.guard("R2 contraction", 1e-8, [&] {
          const CrossingData c = random_crossing(cfg, rng, sign);
          const MatrixXcd b = braiding_from(rmat(cfg, c)), bp = braiding_from(rmat(cfg, r2_partner(c)));
          rep.add("R2 contraction", max_rel_dev(bp * b, I), 1e-8);
          rep.add("R2 contraction", max_rel_dev(b * bp, I), 1e-8);
        });
  }
}

// ---------------------------------------------------------------------------------------------
// 5. R3

MatrixXcd ybe_side(const MatrixXcd& B, int N, bool left) {
  const MatrixXcd I = MatrixXcd::Identity(N, N);
  const MatrixXcd B12 = kron(B, I), B23 = kron(I, B);
  return left ? MatrixXcd(B12 * B23 * B12) : MatrixXcd(B23 * B12 * B23);
}

void criterion_5(Report& rep) {
  constexpr int kSamples = 20;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(5, N);
    for (int s = 0; s < kSamples; ++s) {
      rep.guard("R3 random colorings", 1e-7, [&] {
        auto [a, b] = random_r3_pair(cfg, rng);
        const MoveReport m = check_move(cfg, a, b, MoveKind::R3);
        rep.add("R3 random colorings", m.eligible ? m.deviation : kInf, 1e-7);
      });
      try {
        const ColoredBraid loop = random_r3_loop(cfg, rng);
        const MatrixXcd J = jfunc_eval(cfg, loop.diagram, loop.log);
        rep.note("R3 loop identity, zero log-longitudes", max_rel_dev(J, MatrixXcd::Identity(J.rows(), J.cols())),
                 1e-7);
      } catch (const std::exception&) {
        rep.note("R3 loop identity, zero log-longitudes", kInf, 1e-7);
      }
    }
    rep.guard("Kashaev YBE", 1e-10, [&] {
      const MatrixXcd B = braiding_from(kashaev_rmat(cfg));
      rep.add("Kashaev YBE", max_rel_dev(ybe_side(B, N, true), ybe_side(B, N, false)), 1e-10);
    });
  }
}

// ---------------------------------------------------------------------------------------------
// 6. Factorization

MatrixXcd stated_factorization(const RootConfig& cfg, const CrossingData& c) {
  const int N = cfg.N;
  const ZetaSet z = crossing_zetas(cfg, c);
  const LambdaTable LN(cfg, z.flat(RN)), LW(cfg, z.flat(RW)), LS(cfg, z.flat(RS)), LE(cfg, z.flat(RE));
  auto s = [&](Region j) { return z.z0[j] + z.z1[j]; };
  const double nm1 = double(N - 1);
  Eigen::VectorXcd ZE(N * N), ZW(N * N);
  MatrixXcd ZN(N, N), ZS(N, N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2) {
      if (c.sign == 1) {
        ZE(n1 * N + n2) = 1.0 / LE(n1 - n2);
        ZW(n1 * N + n2) = omega_pow(cfg, -nm1 * s(RW)) * omega_pow(cfg, double(n2 - n1)) / LW(n2 - n1 - 1);
      } else {
        ZE(n1 * N + n2) = omega_pow(cfg, -nm1 * s(RE)) * LE(n1 - n2 - 1);
        ZW(n1 * N + n2) = omega_pow(cfg, double(n2 - n1)) * LW(n2 - n1);
      }
    }
  for (int np = 0; np < N; ++np)
    for (int n = 0; n < N; ++n) {
      if (c.sign == 1) {
        ZN(np, n) = LN(np - n);
        ZS(np, n) = LS(n - np);
      } else {
        ZN(np, n) = omega_pow(cfg, nm1 * s(RN)) / LN(n - np - 1);
        ZS(np, n) = omega_pow(cfg, nm1 * s(RS)) / LS(np - n - 1);
      }
    }
  const MatrixXcd mid = c.sign == 1 ? kron(ZN, ZS) : kron(ZS, ZN);
  return MatrixXcd(ZE.asDiagonal() * mid * ZW.asDiagonal()) / double(N);
}

void criterion_6(Report& rep) {
  constexpr int kSamples = 50;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(6, N);
    for (int s = 0; s < kSamples; ++s)
      for (int sign : {1, -1}) {
        const std::string name = sign == 1 ? "factorization, positive" : "factorization, negative";
        rep.guard(name, 1e-9, [&] {
          const CrossingData c = random_crossing(cfg, rng, sign);
          const MatrixXcd B = braiding_from(rmat(cfg, c));
          rep.add(name, max_rel_dev(stated_factorization(cfg, c), B), 1e-9);
          if (sign == -1)
            rep.note("factorization, negative, corrected form", max_rel_dev(compose_factorized(factorized_ops(cfg, c)), B), 1e-9);
        });
      }
  }
}

// ---------------------------------------------------------------------------------------------
// 7. Pinched limit and the Kashaev specialization

void criterion_7(Report& rep) {
  constexpr int kSamples = 20;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(7, N);
    for (int s = 0; s < kSamples; ++s) {
      const std::uint64_t seed = rng();
      rep.guard("pinched closed form vs limit", 1e-5, [&] {
        const MatrixXcd closed = rmat_pinched(cfg, pinched_family(cfg, seed, 0.0)).entries;
        rep.add("pinched closed form vs limit", (closed - pinched_limit(cfg, seed)).cwiseAbs().maxCoeff(), 1e-5);
      });
    }
    rep.guard("Kashaev specialization", 1e-12, [&] {
      const MatrixXcd pinched = rmat_pinched(cfg, kashaev_crossing()).entries;
      const MatrixXcd stated = kashaev_rmat(cfg).entries;
      rep.add("Kashaev specialization", max_rel_dev(pinched, stated), 1e-12);
      rep.note("Kashaev specialization times omega^(-1/2)", max_rel_dev(pinched, stated * omega_pow(cfg, -0.5)), 1e-12);
    });
  }
}

// ---------------------------------------------------------------------------------------------
// 8. Determinant

cplx stated_det(const RootConfig& cfg, const CrossingData& c) {
  const int N = cfg.N;
  const double e = c.sign;
  const ZetaSet z = crossing_zetas(cfg, c);
  const cplx I = lifted_dilog(z.flat(RN)) + lifted_dilog(z.flat(RS)) - lifted_dilog(z.flat(RW)) - lifted_dilog(z.flat(RE));
  const cplx D0 = d_const(cfg, 0.0);
  const cplx lam1 = e / 2.0 * (c.lc1p.beta - c.lc1.beta), lam2 = e / 2.0 * (c.lc2.beta - c.lc2p.beta);
  const cplx x = (c.gamma[RW] - c.gamma[RE]) / 2.0 - e * (c.lc1.mu + c.lc2.mu) + lam1 + lam2;
  return std::exp(-double(N) / kTwoPiI * I) * std::pow(double(N) / (D0 * D0), e * double(N * N)) *
         std::exp(kTwoPiI * x * double(N * (N - 1)));
}

void criterion_8(Report& rep) {
  constexpr int kSamples = 50, kLoops = 20;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(8, N);
    for (int s = 0; s < kSamples; ++s)
      for (int sign : {1, -1})
        rep.guard("determinant closed form", 1e-7, [&] {
          const CrossingData c = random_crossing(cfg, rng, sign);
          const cplx lu = det_lu(braiding_from(rmat(cfg, c)));
          rep.add("determinant closed form", rel_dev(stated_det(cfg, c), lu), 1e-7);
          rep.note("determinant closed form, corrected", rel_dev(det_braiding(cfg, c), lu), 1e-7);
        });
    for (int s = 0; s < kLoops; ++s)
      rep.guard("R3 loop determinant product", 1e-6, [&] {
        const ColoredBraid loop = random_r3_loop(cfg, rng);
        cplx prod = 1.0;
        for (std::size_t k = 0; k < loop.diagram.crossings.size(); ++k)
          prod *= det_lu(braiding_op(cfg, crossing_data(loop.diagram, loop.log, int(k))));
        rep.add("R3 loop determinant product", std::min(std::abs(prod - 1.0), std::abs(prod + 1.0)), 1e-6);
      });
  }
}

// ---------------------------------------------------------------------------------------------
// 9. Weight basis

/// 1/(q;q)_k is taken as zero for k < 0.
cplx inv_qpoch(cplx a, cplx q, int k) { return k < 0 ? cplx(0.0) : 1.0 / qpoch(a, q, k); }

RTensor stated_nilpotent(const RootConfig& cfg, const CrossingData& c) {
  const int N = cfg.N;
  const cplx nu = -c.lc2.alpha - c.lc2.mu, w = cfg.omega, wnu = omega_pow(cfg, nu);
  RTensor r;
  r.N = N;
  r.entries = MatrixXcd::Zero(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          if (n1 + n2 != a + b) continue;
          r.at(n1, n2, a, b) = omega_pow(cfg, double(a) * (nu + double(n2))) * qpoch(wnu, w, n2) * qpoch(w, w, n1) *
                               inv_qpoch(wnu, w, b) * inv_qpoch(w, w, b - n2) * inv_qpoch(w, w, a);
        }
  return r;
}

RTensor stated_colored_jones(const RootConfig& cfg) {
  const int N = cfg.N;
  const cplx w = cfg.omega;
  RTensor r;
  r.N = N;
  r.entries = MatrixXcd::Zero(N * N, N * N);
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          if (n1 + n2 != a + b) continue;
          r.at(n1, n2, a, b) = omega_pow(cfg, double(a * (1 + n2))) * qpoch(w, w, n2) * qpoch(w, w, n1) *
                               inv_qpoch(w, w, b) * inv_qpoch(w, w, b - n2) * inv_qpoch(w, w, a);
        }
  return r;
}

void criterion_9(Report& rep) {
  constexpr int kSamples = 20;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(9, N);
    for (int s = 0; s < kSamples; ++s) {
      rep.guard("dual pinched form", 1e-8, [&] {
        const WeightBasisResult w = weight_basis_rmat(cfg, pinched_family(cfg, rng(), 0.0));
        rep.add("dual pinched form", max_rel_dev(w.conjugated.entries, w.closed_form.entries), 1e-8);
      });
      rep.guard("nilpotent specialization", 1e-8, [&] {
        PinchedOptions opt;
        const cplx m = draw(rng);
        opt.lc1 = LogWeylChar{m, draw(rng), m};
        opt.alpha2p_equal_alpha2 = true;
        const CrossingData c = pinched_family(cfg, rng(), 0.0, opt);
        if (std::abs(c.lc1p.alpha - c.lc1.alpha) > 1e-9 || std::abs(c.lc2p.alpha - c.lc2.alpha) > 1e-9)
          throw std::runtime_error("sample outside the nilpotent case");
        const MatrixXcd w = to_weight_basis(cfg, rmat_pinched(cfg, c)).entries;
        rep.add("nilpotent specialization", max_rel_dev(w, stated_nilpotent(cfg, c).entries), 1e-8);
        rep.note("nilpotent specialization, corrected form", max_rel_dev(w, nilpotent_dual_rmat(cfg, c).entries), 1e-8);
      });
    }
    rep.guard("colored Jones specialization", 1e-8, [&] {
      const MatrixXcd w = to_weight_basis(cfg, rmat_pinched(cfg, kashaev_crossing())).entries;
      rep.add("colored Jones specialization", max_rel_dev(w, stated_colored_jones(cfg).entries), 1e-8);
      rep.note("colored Jones specialization, corrected form", max_rel_dev(w, colored_jones_rmat(cfg).entries), 1e-8);
    });
  }
}

// ---------------------------------------------------------------------------------------------
// 10. Dependence on the log-coloring

/// α of each segment from the region logs.
void rederive_alpha(CrossingData& c) {
  c.lc1.alpha = c.gamma[RW] - c.gamma[RN];
  c.lc2.alpha = c.gamma[RS] - c.gamma[RW];
  c.lc1p.alpha = c.gamma[RS] - c.gamma[RE];
  c.lc2p.alpha = c.gamma[RE] - c.gamma[RN];
}

void criterion_10(Report& rep) {
  constexpr int kSamples = 50, kBraids = 20;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(10, N);
    for (int s = 0; s < kSamples; ++s)
      for (int sign : {1, -1}) {
        const CrossingData c = random_crossing(cfg, rng, sign);
        const RTensor r = rmat(cfg, c);
        const ZetaSet z = crossing_zetas(cfg, c);
        rep.guard("kappa independence", 1e-8, [&] {
          CrossingData k = c;
          k.kappa = log_param(crossing_K(c)) + double(draw_int(rng, -3, 3));
          rep.add("kappa independence", max_rel_dev(rmat(cfg, k).entries, r.entries), 1e-8);
        });
        const std::string gname = sign == 1 ? "gamma rule, positive" : "gamma rule, negative";
        rep.guard(gname, 1e-8, [&] {
          std::array<int, 4> k{};
          for (int& v : k) v = draw_int(rng, -2, 2);
          CrossingData t = c;
          for (int j = 0; j < 4; ++j) t.gamma[j] += double(k[j]);
          rederive_alpha(t);
          const cplx G = double(k[RN]) * z.z0[RN] + double(k[RS]) * z.z0[RS] - double(k[RW]) * z.z0[RW] -
                         double(k[RE]) * z.z0[RE];
          RTensor pred = r;
          for (int n1 = 0; n1 < N; ++n1)
            for (int n2 = 0; n2 < N; ++n2)
              for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                  pred.at(n1, n2, a, b) *= omega_pow(cfg, 0.5 * G) *
                                           omega_pow(cfg, double(k[RN] * (b - n1) + k[RS] * (n2 - a) - k[RW] * (n2 - n1) -
                                                                 k[RE] * (b - a)));
          const MatrixXcd shifted = rmat(cfg, t).entries;
          rep.add(gname, max_rel_dev(shifted, pred.entries), 1e-8);
        });
        rep.guard("beta rule", 1e-8, [&] {
          std::array<int, 4> l{};  // segments 1, 2, 1', 2'
          for (int& v : l) v = draw_int(rng, -2, 2);
          CrossingData t = c;
          t.lc1.beta += double(l[0]);
          t.lc2.beta += double(l[1]);
          t.lc1p.beta += double(l[2]);
          t.lc2p.beta += double(l[3]);
          const double e = sign;
          // half-segment signs: incoming 1 and outgoing 2' count -ε, the others +ε
          const double e1 = -e, e2 = e, e1p = e, e2p = -e;
          const cplx gN = c.gamma[RN], gW = c.gamma[RW], gS = c.gamma[RS], gE = c.gamma[RE], mu2 = c.lc2.mu;
          (void)gN;
          const cplx B = double(l[3]) * (gE - gW - e2p * mu2) + double(l[2]) * (gS - gE - e1p * mu2) +
                         double(l[1]) * (gE - gW - e2 * mu2) + double(l[0]) * (gS - gE - e1 * mu2);
          RTensor pred = r;
          for (int n1 = 0; n1 < N; ++n1)
            for (int n2 = 0; n2 < N; ++n2)
              for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                  pred.at(n1, n2, a, b) = omega_pow(cfg, 0.5 * B) * r.at(modb(N, n1 + l[0]), modb(N, n2 + l[1]),
                                                                         modb(N, a + l[2]), modb(N, b + l[3]));
          rep.add("beta rule", max_rel_dev(rmat(cfg, t).entries, pred.entries), 1e-8);
        });
        rep.guard("shift rules, corrected form", 1e-8, [&] {
          Shifts sh;
          for (int j = 0; j < 4; ++j) sh.k[j] = draw_int(rng, -2, 2), sh.l[j] = draw_int(rng, -2, 2);
          const TransformResult t = transform_rules(cfg, c, sh);
          rep.note("shift rules, corrected form", max_rel_dev(rmat(cfg, t.shifted).entries, apply_transform(cfg, r, t).entries),
                   1e-8);
        });
      }
    for (int s = 0; s < kBraids; ++s)
      rep.guard("log-longitude dependence", 1e-8, [&] {
        const BraidWord w{3, {1, -2, 1, 2}};
        const ColoredBraid cb = make_colored_braid(cfg, w, random_top_colors(build_diagram(w), rng));
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
        rep.add("log-longitude dependence", max_rel_dev(J1, std::exp(-kTwoPiI * expo / double(N)) * J0), 1e-8);
      });
  }
}

// ---------------------------------------------------------------------------------------------
// 11. Characters

void criterion_11(Report& rep) {
  constexpr int kSamples = 50;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(11, N);
    rep.take(suite_characters(cfg, rng, kSamples));
  }
}

// ---------------------------------------------------------------------------------------------
// 12. Representations

std::vector<std::pair<std::string, LogWeylChar>> module_cases(int N, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::pair<std::string, LogWeylChar>> out;
  for (int i = 0; (int)out.size() < 20; ++i) {
    switch (i % 4) {
      case 0: {  // parabolic, m = 1 and a ≠ 1
        cplx al = cplx(u(rng), 0.2 * u(rng));
        while (dist_int(al) < 0.05) al = cplx(u(rng), 0.2 * u(rng));
        out.push_back({"parabolic", {al, cplx(u(rng), 0.2 * u(rng)), double(draw_int(rng, -1, 1))}});
        break;
      }
      case 1: {  // parabolic, m = -1 and a ≠ -1
        cplx al = cplx(u(rng), 0.2 * u(rng));
        while (dist_int(al - 0.5) < 0.05) al = cplx(u(rng), 0.2 * u(rng));
        out.push_back({"parabolic", {al, cplx(u(rng), 0.2 * u(rng)), -0.5 + double(draw_int(rng, -1, 1))}});
        break;
      }
      case 2: {  // scalar, 2μ ≡ -1 mod N
        const double mu = (i / 4) % 2 ? 0.5 * double(N - 1) : -0.5;
        out.push_back({"scalar projective", {mu, cplx(u(rng), 0.2 * u(rng)), mu}});
        break;
      }
      default: {  // scalar, 2μ ≡ k mod N with 1 ≤ k ≤ N-2
        if (N < 3) {
          out.push_back({"scalar projective", {-0.5, cplx(u(rng), 0.2 * u(rng)), -0.5}});
          break;
        }
        const int k = 1 + (i / 4) % (N - 2);
        out.push_back({"scalar reducible", {0.5 * k, cplx(u(rng), 0.2 * u(rng)), 0.5 * k}});
      }
    }
  }
  return out;
}

void criterion_12(Report& rep) {
  constexpr int kSamples = 20;
  for (int N : kNs) {
    const RootConfig cfg(N);
    std::mt19937_64 rng = make_rng(12, N);
    rep.take(suite_weylrep(cfg, rng, kSamples));
    for (const auto& [kind, lc] : module_cases(N, rng)) {
      const std::string name = "commutant dimension, " + kind;
      rep.guard(name, 0.0, [&] {
        const WeylChar chi = lc.chi();
        const Eigen::Matrix2cd p = psi(chi);
        const double tr_dev = std::abs(p.trace() - 2.0 * chi.m);
        if (tr_dev > 1e-9) throw std::runtime_error("trace of psi is not 2m");
        const bool diagonal = std::abs(p(0, 1)) < 1e-12 && std::abs(p(1, 0)) < 1e-12;
        if (diagonal != (kind != "parabolic")) throw std::runtime_error("sample outside its case");
        rep.add(name, commutant_dim(rep_matrices(cfg, lc, Basis::WEIGHT)) == 1 ? 0.0 : kInf, 0.0);
      });
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("acceptance criteria");
  int criterion = 0;
  app.add_option("--criterion", criterion, "criterion number, 1-12; 0 runs all")->check(CLI::Range(0, 12));
  CLI11_PARSE(app, argc, argv);
  const std::vector<std::function<void(Report&)>> table = {criterion_1, criterion_2, criterion_3,  criterion_4,
                                                           criterion_5, criterion_6, criterion_7,  criterion_8,
                                                           criterion_9, criterion_10, criterion_11, criterion_12};
  bool ok = true;
  for (int k = 1; k <= 12; ++k) {
    if (criterion != 0 && k != criterion) continue;
    Report rep;
    try {
      table[k - 1](rep);
    } catch (const std::exception& e) {
      rep.add(std::string("unexpected error: ") + e.what(), kInf, 0.0);
    }
    ok = rep.print(k) && ok;
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
