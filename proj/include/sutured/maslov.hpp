#pragma once

// Maslov index of sampled Lagrangian loops, the index of unitary loops and
// spectral flow of sampled paths of real symmetric matrices.

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace sutured::maslov {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kUnitaryTolerance = 1e-9;
inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kSingularTolerance = 1e-9;
inline constexpr double kCrossingShift = 1e-8;

// Samples A(t_k), t_k = k/N, k = 0..N, of unitary matrices; the loop of
// Lagrangians is t -> A(t) R^n.
struct UnitaryLoop {
  std::vector<ComplexMatrix> samples;
};

struct SymmetricPath {
  std::vector<RealMatrix> samples;
};

// Winding number of det(A)^2. Throws SamplingTooCoarse, NotUnitary,
// LoopNotClosed.
long maslov_loop_index(const UnitaryLoop& loop);

// Winding number of det(A); the loop must close in U(n). Throws as above plus
// LoopNotClosedInGroup.
long symplectic_loop_index(const UnitaryLoop& loop);

struct SpectralFlowResult {
  long endpoint_count = 0;  // n_-(start) - n_-(end)
  long crossing_count = 0;  // signed crossings of the piecewise-linear path
};

// Throws EndpointSingular, NotSymmetric, CrossingCountMismatch.
SpectralFlowResult spectral_flow_detail(const SymmetricPath& path);
long spectral_flow(const SymmetricPath& path);

long negative_eigenvalue_count(const RealMatrix& a);

// Unitary part X + iY of the polar decomposition of a 2n x 2n symplectic
// matrix. Throws NotSymplectic.
ComplexMatrix unitary_part(const RealMatrix& symplectic);

UnitaryLoop sample_loop(const std::function<ComplexMatrix(double)>& f, int samples);
SymmetricPath sample_path(const std::function<RealMatrix(double)>& f, double from, double to,
                          int samples);

// Pointwise product of two loops sampled at the same times.
UnitaryLoop pointwise_product(const UnitaryLoop& a, const UnitaryLoop& b);
// a followed by b, requires a's last sample to equal b's first.
UnitaryLoop concatenate(const UnitaryLoop& a, const UnitaryLoop& b);

}  // namespace sutured::maslov
