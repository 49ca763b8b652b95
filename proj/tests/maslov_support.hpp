#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "sutured/maslov.hpp"
#include "support.hpp"

namespace testing {

using sutured::maslov::ComplexMatrix;
using sutured::maslov::RealMatrix;
using cd = std::complex<double>;

inline const double kPi = std::acos(-1.0);

inline ComplexMatrix random_hermitian(Rng& rng, int n) {
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = cd(rng.real(-1, 1), rng.real(-1, 1));
  return (h + h.adjoint()) / 2.0;
}

// exp(i s H) for Hermitian H.
inline ComplexMatrix expi(const ComplexMatrix& h, double s) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexMatrix d = ComplexMatrix::Zero(h.rows(), h.cols());
  for (int k = 0; k < h.rows(); ++k) d(k, k) = std::exp(cd(0, s * es.eigenvalues()(k)));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

inline ComplexMatrix diag_phase(const std::vector<long>& m, double t, double unit) {
  const int n = static_cast<int>(m.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) d(k, k) = std::exp(cd(0, unit * static_cast<double>(m[k]) * t));
  return d;
}

struct KnownLoop {
  std::function<ComplexMatrix(double)> f;
  long degree = 0;
};

// A loop in U(n) whose determinant has degree sum(k), wobbled by a closed
// conjugation and a degree-zero scalar phase.
inline KnownLoop random_unitary_loop(Rng& rng, int n) {
  std::vector<long> k(static_cast<std::size_t>(n));
  long deg = 0;
  for (auto& x : k) deg += x = rng.uniform(-2, 2);
  ComplexMatrix h = random_hermitian(rng, n);
  const double wobble = rng.real(-0.5, 0.5);
  return {[=](double t) {
            const double s = std::sin(2 * kPi * t);
            ComplexMatrix v = expi(h, s);
            return ComplexMatrix(std::exp(cd(0, wobble * s)) * v * diag_phase(k, t, 2 * kPi) * v.adjoint());
          },
          deg};
}

// A loop of Lagrangians A(t) R^n with Maslov index sum(m); A(1) = A(0) diag(+-1).
inline KnownLoop random_lagrangian_loop(Rng& rng, int n) {
  std::vector<long> m(static_cast<std::size_t>(n));
  long deg = 0;
  for (auto& x : m) deg += x = rng.uniform(-3, 3);
  ComplexMatrix h = random_hermitian(rng, n);
  ComplexMatrix base = expi(random_hermitian(rng, n), 1.0);
  return {[=](double t) {
            return ComplexMatrix(base * expi(h, std::sin(2 * kPi * t)) * diag_phase(m, t, kPi));
          },
          deg};
}

inline RealMatrix random_symmetric(Rng& rng, int n, double scale = 1.0) {
  RealMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.real(-scale, scale);
  return (a + a.transpose()) / 2.0;
}

}  // namespace testing
