#include <doctest.h>

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "sutured/error.hpp"
#include "sutured/maslov.hpp"
#include "maslov_support.hpp"
#include "support.hpp"

using namespace sutured;
using namespace sutured::maslov;
using testing::Rng;
using cd = std::complex<double>;
using testing::KnownLoop;
using testing::random_lagrangian_loop;
using testing::random_symmetric;
using testing::random_unitary_loop;

namespace {

const double kPi = std::acos(-1.0);

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("maslov index examples") {
  CHECK(maslov_loop_index(sample_loop([](double) { return ComplexMatrix::Identity(2, 2); }, 16)) == 0);
  auto half = [](double t) {
    ComplexMatrix a(1, 1);
    a(0, 0) = std::exp(cd(0, kPi * t));
    return a;
  };
  CHECK(maslov_loop_index(sample_loop(half, 64)) == 1);
  auto opposite = [](double t) {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = std::exp(cd(0, kPi * t));
    a(1, 1) = std::exp(cd(0, -kPi * t));
    return a;
  };
  CHECK(maslov_loop_index(sample_loop(opposite, 64)) == 0);
  auto back = [](double t) {
    ComplexMatrix a(1, 1);
    a(0, 0) = std::exp(cd(0, -3 * kPi * t));
    return a;
  };
  CHECK(maslov_loop_index(sample_loop(back, 64)) == -3);
}

TEST_CASE("symplectic loop index examples") {
  CHECK(symplectic_loop_index(sample_loop([](double) { return ComplexMatrix::Identity(3, 3); }, 8)) == 0);
  auto full = [](double t) {
    ComplexMatrix a(1, 1);
    a(0, 0) = std::exp(cd(0, 2 * kPi * t));
    return a;
  };
  CHECK(symplectic_loop_index(sample_loop(full, 64)) == 1);
  CHECK(maslov_loop_index(sample_loop(full, 64)) == 2);
}

TEST_CASE("loop index errors") {
  auto half = [](double t) {
    ComplexMatrix a(1, 1);
    a(0, 0) = std::exp(cd(0, kPi * t));
    return a;
  };
  CHECK(error_code([&] { symplectic_loop_index(sample_loop(half, 64)); }) == "LoopNotClosedInGroup");
  auto quarter = [](double t) {
    ComplexMatrix a(1, 1);
    a(0, 0) = std::exp(cd(0, kPi * t / 2));
    return a;
  };
  CHECK(error_code([&] { maslov_loop_index(sample_loop(quarter, 64)); }) == "LoopNotClosed");
  auto fast = [](double t) {
    ComplexMatrix a(1, 1);
    a(0, 0) = std::exp(cd(0, 10 * kPi * t));
    return a;
  };
  CHECK(error_code([&] { maslov_loop_index(sample_loop(fast, 8)); }) == "SamplingTooCoarse");
  CHECK(maslov_loop_index(sample_loop(fast, 64)) == 10);
  auto scaled = [](double) { return ComplexMatrix(ComplexMatrix::Identity(2, 2) * 1.001); };
  CHECK(error_code([&] { maslov_loop_index(sample_loop(scaled, 8)); }) == "NotUnitary");
  UnitaryLoop single{{ComplexMatrix::Identity(1, 1)}};
  CHECK(error_code([&] { maslov_loop_index(single); }) == "SamplingTooCoarse");
}

TEST_CASE("composition law for unitary and lagrangian loops") {
  Rng rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    KnownLoop tau = random_unitary_loop(rng, n);
    KnownLoop lambda = random_lagrangian_loop(rng, n);
    UnitaryLoop t = sample_loop(tau.f, 512);
    UnitaryLoop l = sample_loop(lambda.f, 512);
    const long mu_s = symplectic_loop_index(t);
    const long mu_l = maslov_loop_index(l);
    CHECK(mu_s == tau.degree);
    CHECK(mu_l == lambda.degree);
    CHECK(maslov_loop_index(pointwise_product(t, l)) == mu_l + 2 * mu_s);
    CHECK(symplectic_loop_index(pointwise_product(t, t)) == 2 * mu_s);
  }
}

TEST_CASE("orthogonal loops do not change the maslov index") {
  Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    KnownLoop lambda = random_lagrangian_loop(rng, 2);
    const long turns = rng.uniform(-3, 3);
    auto rotation = [turns](double t) {
      const double a = 2 * kPi * static_cast<double>(turns) * t;
      ComplexMatrix r(2, 2);
      r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
      return r;
    };
    UnitaryLoop l = sample_loop(lambda.f, 512);
    CHECK(maslov_loop_index(pointwise_product(l, sample_loop(rotation, 512))) == maslov_loop_index(l));
    CHECK(symplectic_loop_index(sample_loop(rotation, 512)) == 0);
  }
}

TEST_CASE("concatenated loops add") {
  Rng rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    KnownLoop first = random_lagrangian_loop(rng, n);
    KnownLoop second = random_lagrangian_loop(rng, n);
    UnitaryLoop a = sample_loop(first.f, 256);
    const ComplexMatrix end = a.samples.back();
    const ComplexMatrix start_inv = second.f(0).adjoint();
    UnitaryLoop b = sample_loop([&](double t) { return ComplexMatrix(end * start_inv * second.f(t)); }, 256);
    CHECK(maslov_loop_index(concatenate(a, b)) == maslov_loop_index(a) + maslov_loop_index(b));
    CHECK(maslov_loop_index(b) == second.degree);
  }
  UnitaryLoop one = sample_loop([](double) { return ComplexMatrix::Identity(1, 1); }, 4);
  UnitaryLoop minus = sample_loop([](double) { return ComplexMatrix(-ComplexMatrix::Identity(1, 1)); }, 4);
  CHECK(error_code([&] { concatenate(one, minus); }) == "LoopNotClosed");
}

TEST_CASE("spectral flow examples") {
  SymmetricPath identity = sample_path([](double) { return RealMatrix::Identity(3, 3); }, 0, 1, 4);
  CHECK(spectral_flow(identity) == 0);

  auto line = [](double s) {
    RealMatrix a(1, 1);
    a(0, 0) = s;
    return a;
  };
  SpectralFlowResult r = spectral_flow_detail(sample_path(line, -1, 1, 10));
  CHECK(r.endpoint_count == 1);
  CHECK(r.crossing_count == 1);
  CHECK(spectral_flow(sample_path(line, 1, -1, 10)) == -1);

  // Hessians at critical points of index 2 and 1
  RealMatrix hx = RealMatrix::Identity(3, 3), hy = RealMatrix::Identity(3, 3);
  hx(0, 0) = hx(1, 1) = -1;
  hy(0, 0) = -1;
  CHECK(negative_eigenvalue_count(hx) == 2);
  CHECK(spectral_flow(sample_path([&](double s) { return RealMatrix((1 - s) * hx + s * hy); }, 0, 1, 7)) == 1);
}

TEST_CASE("spectral flow errors") {
  auto line = [](double s) {
    RealMatrix a(1, 1);
    a(0, 0) = s;
    return a;
  };
  CHECK(error_code([&] { spectral_flow(sample_path(line, 0, 1, 4)); }) == "EndpointSingular");
  RealMatrix skew(2, 2);
  skew << 1, 0.5, 0, 1;
  CHECK(error_code([&] { spectral_flow(SymmetricPath{{skew, skew}}); }) == "NotSymmetric");
  CHECK(error_code([&] { spectral_flow(SymmetricPath{}); }) == "SamplingTooCoarse");
}

TEST_CASE("spectral flow on random paths: crossings, subdivision, reversal") {
  Rng rng(101);
  int nonzero = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    RealMatrix a0 = random_symmetric(rng, n), a1 = random_symmetric(rng, n), a2 = random_symmetric(rng, n);
    const bool curved = trial % 2 == 1;
    auto f = [&](double s) {
      RealMatrix m = (1 - s) * a0 + s * a1;
      if (curved) m += s * (1 - s) * a2 * 3.0;
      return m;
    };
    const int steps = static_cast<int>(rng.uniform(1, 40));
    long flow = 0;
    try {
      SpectralFlowResult r = spectral_flow_detail(sample_path(f, 0, 1, steps));
      CHECK(r.endpoint_count == r.crossing_count);
      CHECK(r.endpoint_count == negative_eigenvalue_count(f(0)) - negative_eigenvalue_count(f(1)));
      flow = r.endpoint_count;
    } catch (const Error& e) {
      // only a nearly singular random end point may be refused
      CHECK(e.code() == "EndpointSingular");
      continue;
    }
    if (flow != 0) ++nonzero;
    CHECK(spectral_flow(sample_path(f, 1, 0, steps)) == -flow);
    const double mid = rng.real(0.1, 0.9);
    try {
      CHECK(spectral_flow(sample_path(f, 0, mid, steps)) + spectral_flow(sample_path(f, mid, 1, steps)) == flow);
    } catch (const Error& e) {
      CHECK(e.code() == "EndpointSingular");
    }
  }
  CHECK(nonzero > 20);
}

TEST_CASE("unitary part of symplectic matrices") {
  RealMatrix stretch = RealMatrix::Zero(2, 2);
  stretch(0, 0) = 3;
  stretch(1, 1) = 1.0 / 3;
  ComplexMatrix u = unitary_part(stretch);
  CHECK(std::abs(u(0, 0) - cd(1, 0)) < 1e-12);

  const double theta = 0.7;
  RealMatrix rot(2, 2);
  rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  u = unitary_part(rot);
  CHECK(std::abs(std::abs(u(0, 0)) - 1) < 1e-12);
  CHECK(std::abs(std::arg(u(0, 0))) == doctest::Approx(theta).epsilon(1e-12));

  // a symplectic shear composed with a rotation keeps a unitary part
  RealMatrix shear = RealMatrix::Identity(4, 4);
  shear(0, 2) = 2;
  shear(1, 3) = -1;
  shear(0, 3) = shear(1, 2) = 0.5;
  u = unitary_part(shear);
  CHECK((u.adjoint() * u - ComplexMatrix::Identity(2, 2)).norm() < 1e-9);

  CHECK(error_code([] { unitary_part(RealMatrix::Identity(2, 2) * 2); }) == "NotSymplectic");
  CHECK(error_code([] { unitary_part(RealMatrix::Identity(3, 3)); }) == "NotSymplectic");
}
