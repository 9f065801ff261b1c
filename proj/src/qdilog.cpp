#include "holr/qdilog.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_dilog.h>

#include <cmath>
#include <sstream>

namespace holr {

namespace {

void require_nonsingular(cplx factor, double singular, const char* what) {
  if (std::abs(factor) < singular) {
    throw SingularError(std::string("singular argument: ") + what);
  }
}

double dist_to_integer(cplx z) {
  return std::abs(z - std::round(z.real()));
}

}  // namespace

void Tolerance::validate() const {
  for (double t : {rel, constraint, singular}) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("tolerances must lie in (0, 1)");
  }
}

RootConfig::RootConfig(int n, Tolerance t) : N(n), tol(t) {
  if (n < 2) throw std::invalid_argument("N must be ≥ 2");
  tol.validate();
  omega = std::polar(1.0, 2.0 * kPi / n);
  xi = std::polar(1.0, kPi / n);
}

cplx principal_log(cplx z) {
  // std::log honours the sign of a zero imaginary part; normalize it away.
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
  return std::log(z);
}

cplx log_param(cplx z) { return principal_log(z) / kTwoPiI; }

cplx exp2pi(cplx x) { return std::exp(kTwoPiI * x); }

cplx omega_pow(const RootConfig& cfg, cplx x) { return std::exp(kTwoPiI * x / double(cfg.N)); }

cplx qpoch(cplx a, cplx q, int k, double singular) {
  cplx r = 1.0;
  if (k > 0) {
    cplx t = a;
    for (int j = 0; j < k; ++j, t *= q) r *= (1.0 - t);
  } else if (k < 0) {
    cplx qinv = 1.0 / q;
    cplx t = a * qinv;
    for (int j = 1; j <= -k; ++j, t *= qinv) {
      require_nonsingular(1.0 - t, singular, "vanishing factor in (a;q)_k, k<0");
      r /= (1.0 - t);
    }
  }
  return r;
}

cplx qpoch_omega(const RootConfig& cfg, int k) { return qpoch(cfg.omega, cfg.omega, k, cfg.tol.singular); }

cplx cyc_dilog(const RootConfig& cfg, cplx zeta, int k) {
  cplx r = 1.0;
  if (k > 0) {
    for (int j = 1; j <= k; ++j) {
      cplx f = 1.0 - omega_pow(cfg, zeta + double(j));
      require_nonsingular(f, cfg.tol.singular, "1 - ω^{ζ+j} vanishes in ⟨ζ|k⟩");
      r /= f;
    }
  } else {
    for (int j = 0; j < -k; ++j) r *= 1.0 - omega_pow(cfg, zeta - double(j));
  }
  return r;
}

cplx li2(cplx z) {
  gsl_sf_result re, im;
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  int status = gsl_sf_complex_dilog_xy_e(z.real(), z.imag(), &re, &im);
  gsl_set_error_handler(old);
  if (status != GSL_SUCCESS) {
    std::ostringstream os;
    os << "Li2 evaluation failed at " << z << ": " << gsl_strerror(status);
    throw SingularError(os.str());
  }
  return {re.val, im.val};
}

Flattening::Flattening(cplx zeta0, cplx zeta1, double constraint_tol) : z0_(zeta0), z1_(zeta1) {
  double r = residual();
  if (!(r <= constraint_tol)) {
    std::ostringstream os;
    os << "flattening constraint violated: |e^{2πiζ¹}(1-e^{2πiζ⁰}) - 1| = " << r;
    throw ConstraintError(os.str());
  }
}

Flattening Flattening::from_zeta0(cplx zeta0, int shift1) {
  cplx e = exp2pi(zeta0);
  if (std::abs(1.0 - e) < 1e-12) throw SingularError("e^{2πiζ⁰} = 1 has no flattening");
  cplx z1 = -log_param(1.0 - e) + double(shift1);
  return Flattening(zeta0, z1, 1e-9);
}

double Flattening::residual() const {
  return std::abs(exp2pi(z1_) * (1.0 - exp2pi(z0_)) - 1.0);
}

cplx lifted_dilog(const Flattening& f, double singular) {
  cplx z0 = f.zeta0();
  cplx e = exp2pi(z0);
  require_nonsingular(e, singular, "e^{2πiζ⁰} = 0 in 𝓛");
  require_nonsingular(1.0 - e, singular, "e^{2πiζ⁰} = 1 in 𝓛");
  return li2(e) + kTwoPiI * kTwoPiI / 2.0 * z0 * f.zeta1() + kTwoPiI * z0 * principal_log(1.0 - e);
}

cplx d_const(const RootConfig& cfg, cplx zeta) {
  cplx s = 0.0;
  for (int k = 1; k < cfg.N; ++k) {
    cplx f = 1.0 - omega_pow(cfg, zeta + double(k));
    require_nonsingular(f, cfg.tol.singular, "1 - ω^{ζ+k} vanishes in D(ζ)");
    s += double(k) * principal_log(f);
  }
  return std::exp(s / double(cfg.N));
}

cplx lambda0(const RootConfig& cfg, const Flattening& f) {
  cplx z0 = f.zeta0();
  if (dist_to_integer(z0) < cfg.tol.singular) throw SingularError("ζ⁰ is an integer: Λ is singular");
  cplx L = lifted_dilog(f, cfg.tol.singular);
  return std::exp(-L / (kTwoPiI * double(cfg.N))) * (1.0 - exp2pi(z0)) / (1.0 - omega_pow(cfg, z0)) /
         d_const(cfg, z0);
}

cplx lambda_dilog(const RootConfig& cfg, const Flattening& f, int n) {
  int r = modb(cfg.N, n);
  return lambda0(cfg, f) * omega_pow(cfg, -double(r) * f.zeta1()) * cyc_dilog(cfg, f.zeta0(), r);
}

LambdaTable::LambdaTable(const RootConfig& cfg, const Flattening& f) : n_(cfg.N), vals_(cfg.N) {
  vals_[0] = lambda0(cfg, f);
  cplx step = omega_pow(cfg, -f.zeta1());
  for (int n = 1; n < n_; ++n) {
    cplx d = 1.0 - omega_pow(cfg, f.zeta0() + double(n));
    require_nonsingular(d, cfg.tol.singular, "1 - ω^{ζ⁰+n} vanishes in Λ");
    vals_[n] = vals_[n - 1] * step / d;
  }
}

cplx s_norm(const RootConfig& cfg, const Flattening& f) {
  Flattening dual(-f.zeta1(), -f.zeta0(), 1e-8);
  LambdaTable t(cfg, dual);
  cplx s = 0.0;
  for (int k = 0; k < cfg.N; ++k) s += 1.0 / t(k);
  return omega_pow(cfg, double(cfg.N - 1) * f.zeta0()) / lambda0(cfg, f) * s;
}

cplx fusion_f(const RootConfig& cfg, cplx alpha, cplx beta, cplx gamma) {
  cplx lhs = 1.0 - exp2pi(alpha);
  cplx rhs = exp2pi(gamma) * (1.0 - exp2pi(beta));
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  if (std::abs(lhs - rhs) > cfg.tol.constraint * scale * 10.0) {
    throw ConstraintError("fusion constraint (1-ω^{Nα}) = ω^{Nγ}(1-ω^{Nβ}) violated");
  }
  cplx s = 0.0;
  for (int k = 0; k < cfg.N; ++k) {
    s += cyc_dilog(cfg, alpha, k) / cyc_dilog(cfg, beta, k) * omega_pow(cfg, double(k) * gamma);
  }
  return s;
}

int modb(int n, int k) { return ((k % n) + n) % n; }

int cutoff(int n, int k) { return (k >= 0 && k <= n - 1) ? 1 : 0; }

IndexMod index_mod(const RootConfig& cfg, int k) { return {modb(cfg.N, k), cutoff(cfg.N, k)}; }

}  // namespace holr
