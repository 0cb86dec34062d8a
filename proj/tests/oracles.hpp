#pragma once

// Independent oracles for the kernel and model tests. These are written
// from the definitions (quadrature, O(N^2) DFT, double-precision triple
// loop) and never call the implementation paths they check.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mcsm/workloads.hpp"

namespace oracles {

// O(N^2) DFT in double precision.
inline std::vector<std::complex<double>> direct_dft(
    const std::vector<std::complex<float>>& x) {
  const long n = static_cast<long>(x.size());
  std::vector<std::complex<double>> out(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (long j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * j * k / n;
      acc += std::complex<double>(x[static_cast<size_t>(j)].real(),
                                  x[static_cast<size_t>(j)].imag()) *
             std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[static_cast<size_t>(k)] = acc;
  }
  return out;
}

inline double rel_l2_error(const std::vector<std::complex<float>>& got,
                           const std::vector<std::complex<double>>& want) {
  double num = 0.0;
  double den = 0.0;
  for (size_t i = 0; i < want.size(); ++i) {
    const std::complex<double> g(got[i].real(), got[i].imag());
    num += std::norm(g - want[i]);
    den += std::norm(want[i]);
  }
  return std::sqrt(num / den);
}

inline double rel_l2_error_ff(const std::vector<std::complex<float>>& got,
                              const std::vector<std::complex<float>>& want) {
  double num = 0.0;
  double den = 0.0;
  for (size_t i = 0; i < want.size(); ++i) {
    const std::complex<double> g(got[i].real(), got[i].imag());
    const std::complex<double> w(want[i].real(), want[i].imag());
    num += std::norm(g - w);
    den += std::norm(w);
  }
  return std::sqrt(num / den);
}

// Risk-neutral call value by Simpson quadrature over the lognormal payoff:
// e^{-rT} * E[max(S e^{(r-q-v^2/2)T + v sqrt(T) Z} - K, 0)], Z ~ N(0,1).
inline double call_price_by_quadrature(double s, double k, double t, double r,
                                       double v, double q) {
  const double drift = (r - q - 0.5 * v * v) * t;
  const double vol = v * std::sqrt(t);
  const double z_lo = (std::log(k / s) - drift) / vol;
  const double z_hi = z_lo + 14.0;  // the integrand is negligible beyond
  const int steps = 20000;          // even
  const double h = (z_hi - z_lo) / steps;
  auto integrand = [&](double z) {
    const double payoff = s * std::exp(drift + vol * z) - k;
    const double pdf =
        std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
    return payoff * pdf;
  };
  double acc = integrand(z_lo) + integrand(z_hi);
  for (int i = 1; i < steps; ++i) {
    acc += integrand(z_lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return std::exp(-r * t) * acc * h / 3.0;
}

// Double-precision product with ikj loop order (the library uses ijk).
inline std::vector<double> matmul_double(const mcsm::workloads::MatrixF& a,
                                         const mcsm::workloads::MatrixF& b) {
  const long n = a.dim;
  std::vector<double> c(static_cast<size_t>(n) * n, 0.0);
  for (long i = 0; i < n; ++i) {
    for (long k = 0; k < n; ++k) {
      const double aik = a.at(i, k);
      for (long j = 0; j < n; ++j) {
        c[static_cast<size_t>(i) * n + j] +=
            aik * static_cast<double>(b.at(k, j));
      }
    }
  }
  return c;
}

}  // namespace oracles
