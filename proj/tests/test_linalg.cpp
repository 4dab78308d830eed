#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qrac/linalg.hpp"

using namespace qrac;

TEST_CASE("computational basis") {
  const Basis b2 = computational_basis(2);
  CHECK(b2.kets[0][0] == Complex{1.0});
  CHECK(b2.kets[0][1] == Complex{0.0});
  CHECK(b2.kets[1][1] == Complex{1.0});

  const Basis b4 = computational_basis(4);
  for (int l = 0; l < 4; ++l) {
    for (int k = 0; k < 4; ++k) {
      CHECK(b4.kets[l][k] == (k == l ? Complex{1.0} : Complex{0.0}));
    }
  }

  const Basis b3 = computational_basis(3);
  CHECK(std::abs(b3.kets[0].dot(b3.kets[1])) == 0.0);

  CHECK_THROWS_AS(computational_basis(1), std::invalid_argument);
}

TEST_CASE("fourier basis") {
  const Basis b = fourier_basis(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(b.kets[0][0].real() == doctest::Approx(s));
  CHECK(b.kets[0][1].real() == doctest::Approx(s));
  CHECK(b.kets[1][0].real() == doctest::Approx(s));
  CHECK(b.kets[1][1].real() == doctest::Approx(-s));

  const Basis b4 = fourier_basis(4);
  const Basis c4 = computational_basis(4);
  for (int l = 0; l < 4; ++l) {
    for (int k = 0; k < 4; ++k) {
      CHECK(std::norm(c4.kets[k].dot(b4.kets[l])) == doctest::Approx(0.25).epsilon(1e-12));
    }
  }
}

TEST_CASE("third basis values") {
  const Basis b2 = third_mub(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(b2.kets[0][0] - Complex{s, 0.0}) < 1e-12);
  CHECK(std::abs(b2.kets[0][1] - Complex{0.0, s}) < 1e-12);

  // d = 3 (odd prime): phase exponent is k*l + k^2, evaluated mod 3.
  const Basis b3 = third_mub(3);
  const Complex w = omega(3);
  const double t = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(b3.kets[0][0] - Complex{t, 0.0}) < 1e-12);
  CHECK(std::abs(b3.kets[0][1] - t * w) < 1e-12);
  CHECK(std::abs(b3.kets[0][2] - t * w) < 1e-12);

  for (int d : {2, 3, 4, 5, 6, 8, 13}) {
    const Basis b = third_mub(d);
    for (const Ket& ket : b.kets) {
      for (int k = 0; k < d; ++k) {
        CHECK(std::abs(ket[k]) == doctest::Approx(1.0 / std::sqrt(double(d))).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("all constructed bases are orthonormal for d in [2, 64]") {
  for (int d = 2; d <= 64; ++d) {
    CHECK(orthonormality_deviation(computational_basis(d)) < kOrthoTol);
    CHECK(orthonormality_deviation(fourier_basis(d)) < kOrthoTol);
    CHECK(orthonormality_deviation(third_mub(d)) < kOrthoTol);
  }
}

TEST_CASE("unbiasedness against the computational basis for d in [2, 64]") {
  for (int d = 2; d <= 64; ++d) {
    const Basis comp = computational_basis(d);
    CHECK(mub_overlap_deviation(comp, fourier_basis(d)) < kOrthoTol);
    CHECK(mub_overlap_deviation(comp, third_mub(d)) < kOrthoTol);
  }
}

TEST_CASE("fourier vs third basis overlap") {
  CHECK(mub_overlap_deviation(computational_basis(5), fourier_basis(5)) < 1e-12);
  CHECK(mub_overlap_deviation(fourier_basis(3), third_mub(3)) < 1e-12);
  CHECK(mub_overlap_deviation(fourier_basis(4), third_mub(4)) < 1e-12);
}

TEST_CASE("weyl operators") {
  const Operator x2 = weyl_x(2);
  CHECK(x2(0, 1) == Complex{1.0});
  CHECK(x2(1, 0) == Complex{1.0});
  const Operator z2 = weyl_z(2);
  CHECK(z2(0, 0) == Complex{1.0});
  CHECK(std::abs(z2(1, 1) - Complex{-1.0}) < 1e-15);

  for (int d = 2; d <= 16; ++d) {
    const Operator x = weyl_x(d);
    const Operator z = weyl_z(d);
    CHECK((x.adjoint() * x - Operator::Identity(d, d)).cwiseAbs().maxCoeff() < kUnitaryTol);
    CHECK((z.adjoint() * z - Operator::Identity(d, d)).cwiseAbs().maxCoeff() < kUnitaryTol);

    Operator xp = Operator::Identity(d, d);
    Operator zp = Operator::Identity(d, d);
    for (int i = 0; i < d; ++i) {
      xp = x * xp;
      zp = z * zp;
    }
    CHECK((xp - Operator::Identity(d, d)).cwiseAbs().maxCoeff() < kUnitaryTol);
    CHECK((zp - Operator::Identity(d, d)).cwiseAbs().maxCoeff() < kUnitaryTol);

    // ZX = omega XZ
    CHECK((z * x - omega(d) * x * z).cwiseAbs().maxCoeff() < kUnitaryTol);
  }
}

TEST_CASE("outcome probabilities") {
  const Basis comp = computational_basis(2);
  CHECK(outcome_prob(comp.kets[0], comp, 0) == doctest::Approx(1.0));
  CHECK(outcome_prob(comp.kets[0], fourier_basis(2), 0) == doctest::Approx(0.5));

  const Basis f4 = fourier_basis(4);
  CHECK(outcome_prob(f4.kets[0], f4, 0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(outcome_prob(comp.kets[0], fourier_basis(3), 0), std::invalid_argument);
}

TEST_CASE("probabilities over a full basis sum to one") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  for (int d : {2, 3, 5, 8, 16}) {
    for (const Basis& basis : {computational_basis(d), fourier_basis(d), third_mub(d)}) {
      for (int trial = 0; trial < 20; ++trial) {
        Ket psi(d);
        for (int k = 0; k < d; ++k) psi[k] = Complex(gauss(rng), gauss(rng));
        psi.normalize();
        double total = 0.0;
        for (int l = 0; l < d; ++l) total += outcome_prob(psi, basis, l);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}
