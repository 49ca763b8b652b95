#include "sutured/maslov.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "sutured/error.hpp"

namespace sutured::maslov {

namespace {

using Complex = std::complex<double>;

void check_loop(const UnitaryLoop& loop) {
  if (loop.samples.size() < 2)
    throw Error("SamplingTooCoarse", "a loop needs at least two samples");
  const auto n = loop.samples.front().rows();
  for (std::size_t k = 0; k < loop.samples.size(); ++k) {
    const ComplexMatrix& a = loop.samples[k];
    if (a.rows() != n || a.cols() != n)
      throw Error("BadDimension", "sample " + std::to_string(k) + " is not " +
                                      std::to_string(n) + "x" + std::to_string(n));
    const double err =
        (a.adjoint() * a - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (n > 0 && err > kUnitaryTolerance)
      throw Error("NotUnitary", "sample " + std::to_string(k) + " deviates from unitary by " +
                                    std::to_string(err));
  }
}

// Total phase change of z_k, each increment required below pi/2.
long winding(const std::vector<Complex>& z, const char* what) {
  double total = 0;
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    const double step = std::arg(z[k + 1] / z[k]);
    if (std::abs(step) >= std::numbers::pi / 2)
      throw Error("SamplingTooCoarse", std::string(what) + " phase jumps by " +
                                           std::to_string(step) + " between samples " +
                                           std::to_string(k) + " and " + std::to_string(k + 1));
    total += step;
  }
  return std::lround(total / (2 * std::numbers::pi));
}

void check_symmetric(const RealMatrix& a, std::size_t k) {
  if (a.rows() != a.cols())
    throw Error("BadDimension", "sample " + std::to_string(k) + " is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale)
    throw Error("NotSymmetric", "sample " + std::to_string(k) + " is not symmetric");
}

// Signed crossings of det(b + t*d) = 0 for t in [0, 1).
long segment_crossings(const RealMatrix& b, const RealMatrix& d) {
  if (d.cwiseAbs().maxCoeff() == 0) return 0;
  Eigen::GeneralizedEigenSolver<RealMatrix> ges(b, -d, true);
  if (ges.info() != Eigen::Success)
    throw Error("CrossingCountMismatch", "generalized eigenproblem failed");
  long count = 0;
  const auto alphas = ges.alphas();
  const auto betas = ges.betas();
  const auto vecs = ges.eigenvectors();
  for (Eigen::Index i = 0; i < alphas.size(); ++i) {
    if (betas(i) == 0) continue;
    const Complex t = alphas(i) / betas(i);
    if (std::abs(t.imag()) > 1e-9 * std::max(1.0, std::abs(t.real()))) continue;
    if (t.real() < 0 || t.real() >= 1) continue;
    Eigen::VectorXd v = vecs.col(i).real();
    if (v.norm() == 0) v = vecs.col(i).imag();
    v.normalize();
    const double form = v.dot(d * v);
    if (std::abs(form) < 1e-14 * std::max(1.0, d.norm()))
      throw Error("CrossingCountMismatch", "degenerate crossing, refine the sampling");
    count += form > 0 ? 1 : -1;
  }
  return count;
}

}  // namespace

long maslov_loop_index(const UnitaryLoop& loop) {
  check_loop(loop);
  const ComplexMatrix& first = loop.samples.front();
  const ComplexMatrix& last = loop.samples.back();
  const double imag = (last.adjoint() * first).imag().cwiseAbs().maxCoeff();
  if (first.rows() > 0 && imag > kUnitaryTolerance)
    throw Error("LoopNotClosed", "end points span different Lagrangians (defect " +
                                     std::to_string(imag) + ")");
  std::vector<Complex> z;
  for (const auto& a : loop.samples) {
    const Complex det = a.rows() == 0 ? Complex(1) : a.determinant();
    z.push_back(det * det);
  }
  return winding(z, "det^2");
}

long symplectic_loop_index(const UnitaryLoop& loop) {
  check_loop(loop);
  const ComplexMatrix& first = loop.samples.front();
  const ComplexMatrix& last = loop.samples.back();
  if (first.rows() > 0 && (last - first).cwiseAbs().maxCoeff() > kUnitaryTolerance)
    throw Error("LoopNotClosedInGroup", "first and last samples differ");
  std::vector<Complex> z;
  for (const auto& a : loop.samples) z.push_back(a.rows() == 0 ? Complex(1) : a.determinant());
  return winding(z, "det");
}

long negative_eigenvalue_count(const RealMatrix& a) {
  if (a.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(a, Eigen::EigenvaluesOnly);
  return static_cast<long>((es.eigenvalues().array() < 0).count());
}

SpectralFlowResult spectral_flow_detail(const SymmetricPath& path) {
  if (path.samples.empty()) throw Error("SamplingTooCoarse", "empty path");
  const auto n = path.samples.front().rows();
  for (std::size_t k = 0; k < path.samples.size(); ++k) {
    if (path.samples[k].rows() != n)
      throw Error("BadDimension", "sample " + std::to_string(k) + " has a different size");
    check_symmetric(path.samples[k], k);
  }
  for (const RealMatrix* end : {&path.samples.front(), &path.samples.back()}) {
    if (n == 0) break;
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(*end, Eigen::EigenvaluesOnly);
    const double smallest = es.eigenvalues().cwiseAbs().minCoeff();
    if (smallest <= kSingularTolerance)
      throw Error("EndpointSingular", "end point has eigenvalue of size " + std::to_string(smallest));
  }

  SpectralFlowResult r;
  r.endpoint_count =
      negative_eigenvalue_count(path.samples.front()) - negative_eigenvalue_count(path.samples.back());
  const RealMatrix shift = kCrossingShift * RealMatrix::Identity(n, n);
  for (std::size_t k = 0; k + 1 < path.samples.size(); ++k)
    r.crossing_count +=
        segment_crossings(path.samples[k] + shift, path.samples[k + 1] - path.samples[k]);
  if (r.crossing_count != r.endpoint_count)
    throw Error("CrossingCountMismatch",
                "endpoint count " + std::to_string(r.endpoint_count) + " but crossing count " +
                    std::to_string(r.crossing_count) + "; refine the sampling");
  return r;
}

long spectral_flow(const SymmetricPath& path) { return spectral_flow_detail(path).endpoint_count; }

ComplexMatrix unitary_part(const RealMatrix& s) {
  const auto m = s.rows();
  if (m != s.cols() || m % 2 != 0) throw Error("NotSymplectic", "matrix must be 2n x 2n");
  const auto n = m / 2;
  RealMatrix j = RealMatrix::Zero(m, m);
  j.topRightCorner(n, n) = RealMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = -RealMatrix::Identity(n, n);
  const double defect = (s.transpose() * j * s - j).cwiseAbs().maxCoeff();
  if (defect > kUnitaryTolerance * std::max(1.0, s.cwiseAbs().maxCoeff() * s.cwiseAbs().maxCoeff()))
    throw Error("NotSymplectic", "S^T J S differs from J by " + std::to_string(defect));
  Eigen::JacobiSVD<RealMatrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealMatrix q = svd.matrixU() * svd.matrixV().transpose();
  ComplexMatrix u(n, n);
  u.real() = q.topLeftCorner(n, n);
  u.imag() = q.bottomLeftCorner(n, n);
  return u;
}

UnitaryLoop sample_loop(const std::function<ComplexMatrix(double)>& f, int samples) {
  if (samples < 1) throw Error("SamplingTooCoarse", "need at least one step");
  UnitaryLoop loop;
  for (int k = 0; k <= samples; ++k) loop.samples.push_back(f(static_cast<double>(k) / samples));
  return loop;
}

SymmetricPath sample_path(const std::function<RealMatrix(double)>& f, double from, double to,
                          int samples) {
  if (samples < 1) throw Error("SamplingTooCoarse", "need at least one step");
  SymmetricPath path;
  for (int k = 0; k <= samples; ++k)
    path.samples.push_back(f(from + (to - from) * static_cast<double>(k) / samples));
  return path;
}

UnitaryLoop pointwise_product(const UnitaryLoop& a, const UnitaryLoop& b) {
  if (a.samples.size() != b.samples.size())
    throw Error("BadDimension", "loops have different sample counts");
  UnitaryLoop out;
  for (std::size_t k = 0; k < a.samples.size(); ++k) out.samples.push_back(a.samples[k] * b.samples[k]);
  return out;
}

UnitaryLoop concatenate(const UnitaryLoop& a, const UnitaryLoop& b) {
  if (a.samples.empty() || b.samples.empty()) return a.samples.empty() ? b : a;
  if ((a.samples.back() - b.samples.front()).cwiseAbs().maxCoeff() > kUnitaryTolerance)
    throw Error("LoopNotClosed", "loops are not composable");
  UnitaryLoop out = a;
  out.samples.insert(out.samples.end(), b.samples.begin() + 1, b.samples.end());
  return out;
}

}  // namespace sutured::maslov
