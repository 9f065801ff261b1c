#pragma once

// Reference evaluations written independently of the library code paths.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline const double pi = std::acos(-1.0);

/// Bernoulli numbers B_0..B_n from the standard recurrence.
inline std::vector<double> bernoulli(int n) {
  std::vector<double> b(n + 1, 0.0);
  b[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double s = 0.0, binom = 1.0;
    for (int k = 0; k < m; ++k) {
      s += binom * b[k];
      binom = binom * double(m + 1 - k) / double(k + 1);
    }
    b[m] = -s / double(m + 1);
  }
  return b;
}

/// Li₂(z) = Σ B_n uⁿ⁺¹/(n+1)!, u = -log(1-z); valid for |u| < 2π.
inline cplx li2_bernoulli(cplx z) {
  static const std::vector<double> B = bernoulli(60);
  const cplx u = -std::log(1.0 - z);
  cplx term = u, sum = 0.0;
  double fact = 1.0;
  for (int n = 0; n <= 60; ++n) {
    fact *= double(n + 1);
    sum += B[n] * term / fact;
    term *= u;
  }
  return sum;
}

/// Li₂ with the inversion relation applied outside the unit disk, so the series argument stays small.
inline cplx li2(cplx z) {
  if (std::abs(z) <= 1.0) return li2_bernoulli(z);
  const cplx l = std::log(-z);
  return -pi * pi / 6.0 - 0.5 * l * l - li2_bernoulli(1.0 / z);
}

/// Power series Σ zᵏ/k², for |z| < 1.
inline cplx li2_series(cplx z) {
  cplx s = 0.0, p = z;
  for (int k = 1; k < 4000; ++k, p *= z) s += p / double(k * k);
  return s;
}

inline cplx w(int N, cplx x) { return std::exp(cplx(0.0, 2.0 * pi) * x / double(N)); }

/// ⟨ζ|k⟩ for k ≥ 0, as a plain product.
inline cplx cyc(int N, cplx zeta, int k) {
  cplx p = 1.0;
  for (int j = 1; j <= k; ++j) p *= 1.0 - w(N, zeta + double(j));
  return 1.0 / p;
}

/// D(ζ) from the defining product with principal powers.
inline cplx dconst(int N, cplx zeta) {
  cplx p = 1.0;
  for (int k = 1; k < N; ++k) p *= std::pow(1.0 - w(N, zeta + double(k)), double(k) / double(N));
  return p;
}

/// Λ(ζ⁰, ζ¹ | n) for 0 ≤ n < N, straight from the exact-value formula.
inline cplx lambda(int N, cplx z0, cplx z1, int n) {
  const cplx tpi(0.0, 2.0 * pi);
  const cplx e = std::exp(tpi * z0);
  const cplx L = li2(e) + tpi * tpi / 2.0 * z0 * z1 + tpi * z0 * std::log(1.0 - e);
  const cplx l0 = std::exp(-L / (tpi * double(N))) * (1.0 - e) / (1.0 - w(N, z0)) / dconst(N, z0);
  return l0 * w(N, -double(n) * z1) * cyc(N, z0, n);
}

inline double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (cplx x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace oracle
