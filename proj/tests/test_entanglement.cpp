#include <doctest.h>

#include <cmath>
#include <numbers>

#include "brachisto/entanglement.hpp"
#include "brachisto/quadrature.hpp"
#include "oracles.hpp"

using namespace brachisto;

namespace {
const double kPi = std::numbers::pi;
const double kR2 = 1.0 / std::sqrt(2.0);

PureState make(std::initializer_list<Complex> amps, Shape shape) {
  Vector v(static_cast<int>(amps.size()));
  int k = 0;
  for (Complex a : amps) v(k++) = a;
  return PureState(std::move(v), std::move(shape));
}

// case (i) path state for given xi and alpha
PureState case_i_state(double xi, double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  return make({std::cos(xi), std::sin(xi) * c * kR2, std::sin(xi) * c * kR2,
               std::sin(xi) * s},
              {2, 2});
}
}  // namespace

TEST_CASE("linear entropy") {
  CHECK(linear_entropy(make({1, 0, 0, 0}, {2, 2})) == doctest::Approx(0.0));
  CHECK(linear_entropy(make({kR2, 0, 0, kR2}, {2, 2})) ==
        doctest::Approx(1.0).epsilon(1e-12));

  SUBCASE("maximally entangled qutrits") {
    Vector v = Vector::Zero(9);
    v(0) = v(4) = v(8) = 1.0;
    CHECK(linear_entropy(PureState(std::move(v), {3, 3})) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("always reduces the smaller subsystem") {
    // (|0>|0> + |1>|1>)/sqrt2 inside 2x3: E = 2(1 - 1/2) = 1 with N_A = 2
    Vector v = Vector::Zero(6);
    v(0) = v(4) = kR2;
    CHECK(linear_entropy(PureState(std::move(v), {2, 3})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    Vector w = Vector::Zero(6);
    w(0) = w(3) = kR2;  // mirrored shape 3x2
    CHECK(linear_entropy(PureState(std::move(w), {3, 2})) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("pointwise law of the case (i) family") {
    for (double alpha : {0.0, 0.4, 1.1, kPi / 2}) {
      for (int k = 0; k <= 20; ++k) {
        const double xi = (kPi / 2) * k / 20.0;
        const double expected = std::pow(std::cos(alpha) * std::cos(alpha) *
                                                 std::sin(xi) * std::sin(xi) -
                                             std::sin(alpha) * std::sin(2 * xi),
                                         2);
        REQUIRE(linear_entropy(case_i_state(xi, alpha)) ==
                doctest::Approx(expected).epsilon(1e-10));
      }
    }
  }
  SUBCASE("wrong subsystem count") {
    CHECK_THROWS_AS(linear_entropy(make({1, 0, 0, 0, 0, 0, 0, 0}, {2, 2, 2})),
                    DimensionError);
    CHECK_THROWS_AS(linear_entropy(PureState(Vector::Ones(4), Shape{4})),
                    DimensionError);
  }
}

TEST_CASE("three-qubit averaged measure") {
  CHECK(multipartite_entanglement(make({1, 0, 0, 0, 0, 0, 0, 0}, {2, 2, 2})) ==
        doctest::Approx(0.0));

  SUBCASE("GHZ state") {
    CHECK(multipartite_entanglement(
              make({kR2, 0, 0, 0, 0, 0, 0, kR2}, {2, 2, 2})) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("W state, checked against the reduced-matrix oracle") {
    const double r3 = 1.0 / std::sqrt(3.0);
    const PureState w = make({0, r3, r3, 0, r3, 0, 0, 0}, {2, 2, 2});
    double oracle_value = 0.0;
    for (int k = 0; k < 3; ++k) {
      oracle_value +=
          2.0 * (1.0 - oracle::brute_force_reduced(w, k).squaredNorm());
    }
    oracle_value /= 3.0;
    CHECK(oracle_value == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(multipartite_entanglement(w) ==
          doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  }
  SUBCASE("wrong shape") {
    CHECK_THROWS_AS(multipartite_entanglement(make({1, 0, 0, 0}, {2, 2})),
                    DimensionError);
  }
}

TEST_CASE("time-averaged entanglement of the analytic cases") {
  const EntanglementMeasureSpec measure{MeasureKind::bipartite_linear_entropy};

  SUBCASE("case (ii): Bell to Bell averages 1/2") {
    const PureState psi_i = make({0, kR2, kR2, 0}, {2, 2});
    const PureState psi_f = make({kR2, 0, 0, kR2}, {2, 2});
    CHECK(time_averaged_entanglement(decompose(psi_i, psi_f), measure) ==
          doctest::Approx(0.5).epsilon(1e-10));
  }
  SUBCASE("case (i) with alpha = 0 averages 3/8") {
    const PureState psi_i = make({1, 0, 0, 0}, {2, 2});
    const PureState psi_f = make({0, kR2, kR2, 0}, {2, 2});
    CHECK(time_averaged_entanglement(decompose(psi_i, psi_f), measure) ==
          doctest::Approx(3.0 / 8.0).epsilon(1e-10));
  }
  SUBCASE("factorizable pair carries no entanglement") {
    RandomSource rng(99, 0);
    for (int trial = 0; trial < 20; ++trial) {
      const PureState shared = oracle::random_state({2}, rng);
      const PureState first = oracle::random_state({2}, rng);
      Vector ortho = oracle::random_state({2}, rng).amplitudes();
      ortho -= first.amplitudes().dot(ortho) * first.amplitudes();
      const PureState second(std::move(ortho), Shape{2});
      const PureState psi_i = oracle::tensor(first, shared);
      const PureState psi_f = oracle::tensor(second, shared);
      REQUIRE(time_averaged_entanglement(decompose(psi_i, psi_f), measure) <
              1e-12);
    }
  }
  SUBCASE("case (iii) stays maximally entangled") {
    const Complex i(0.0, 1.0);
    const PureState psi_i = make({kR2, 0, 0, -i * kR2}, {2, 2});
    const PureState psi_f = make({i * kR2, 0, 0, -kR2}, {2, 2});
    const GeodesicPath path = decompose(psi_i, psi_f);
    CHECK(time_averaged_entanglement(path, measure) ==
          doctest::Approx(1.0).epsilon(1e-10));
    for (int k = 0; k <= 20; ++k) {
      REQUIRE(linear_entropy(evolve(path, (kPi / 2) * k / 20.0)) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("case (ii) pointwise entanglement is cos^2(2 xi)") {
  // the midpoint state (psi_I + psi_F)/sqrt2 = |+>|+> is separable, so the
  // pointwise law must vanish at xi = pi/4; the time average is still 1/2
  const PureState psi_i = make({0, kR2, kR2, 0}, {2, 2});
  const PureState psi_f = make({kR2, 0, 0, kR2}, {2, 2});
  const GeodesicPath path = decompose(psi_i, psi_f);
  for (int k = 0; k < 50; ++k) {
    const double xi = (kPi / 2) * k / 49.0;
    const double expected = std::pow(std::cos(2 * xi), 2);
    REQUIRE(linear_entropy(evolve(path, xi)) ==
            doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("closed form of the case (i) family") {
  CHECK(case_i_closed_form(0.0) == doctest::Approx(3.0 / 8.0));
  CHECK(case_i_closed_form(kPi / 2) == doctest::Approx(0.5));
  CHECK(case_i_closed_form(std::asin(1.0 / std::sqrt(3.0))) ==
        doctest::Approx(0.088298).epsilon(1e-5));
}

TEST_CASE("quadrature agrees with the closed form across the family") {
  const EntanglementMeasureSpec measure{MeasureKind::bipartite_linear_entropy};
  const PureState psi_i = make({1, 0, 0, 0}, {2, 2});
  for (int k = 0; k < 100; ++k) {
    const double alpha = (kPi / 2) * k / 99.0;
    const PureState psi_f = make({0, std::cos(alpha) * kR2,
                                  std::cos(alpha) * kR2, std::sin(alpha)},
                                 {2, 2});
    const double quad =
        time_averaged_entanglement(decompose(psi_i, psi_f), measure);
    REQUIRE(std::abs(quad - case_i_closed_form(alpha)) < 1e-10);
  }
}

TEST_CASE("time average is independent of omega") {
  // t-parameterized route (1/tau) int_0^tau E(omega t) dt against
  // the xi route, for two omegas
  const EntanglementMeasureSpec measure{MeasureKind::bipartite_linear_entropy};
  RandomSource rng(17, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const PureState a = oracle::random_state({2, 2}, rng);
    const PureState b = oracle::random_state({2, 2}, rng);
    const GeodesicPath path = decompose(a, b);
    const double xi_route = time_averaged_entanglement(path, measure);
    for (double omega : {1.0, 2.7}) {
      const double tau = duration(path.theta(), omega);
      const double t_route =
          integrate(
              [&](double t) {
                return linear_entropy(evolve(path, omega * t));
              },
              0.0, tau, 64) /
          tau;
      REQUIRE(std::abs(t_route - xi_route) < 1e-10);
    }
  }
}

TEST_CASE("zero time-averaged entanglement characterizes shared-factor pairs") {
  const EntanglementMeasureSpec measure{MeasureKind::bipartite_linear_entropy};
  RandomSource rng(21, 0);
  for (int trial = 0; trial < 200; ++trial) {
    // |0> (x) |phi_r>  ->  |1> (x) |phi_s> with generic overlap
    const PureState zero = make({1, 0}, {2});
    const PureState one = make({0, 1}, {2});
    const PureState phi_r = oracle::random_state({2}, rng);
    const PureState phi_s = oracle::random_state({2}, rng);
    const double overlap2 = std::norm(inner_product(phi_r, phi_s));

    const PureState psi_i = oracle::tensor(zero, phi_r);
    const PureState psi_f = oracle::tensor(one, phi_s);
    const GeodesicPath path = decompose(psi_i, psi_f);

    // midpoint entanglement law E = 1 - |<phi_r|phi_s>|^2
    REQUIRE(linear_entropy(evolve(path, kPi / 4)) ==
            doctest::Approx(1.0 - overlap2).epsilon(1e-10));
    const double avg = time_averaged_entanglement(path, measure);
    if (overlap2 < 1.0 - 1e-6) {
      REQUIRE(avg > 0.0);
    }
  }
}
