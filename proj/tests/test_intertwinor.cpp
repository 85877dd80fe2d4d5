#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gjms/intertwinor.hpp"
#include "gjms/operators.hpp"

using namespace gjms;

namespace {

ModeVector random_vector(std::mt19937& rng) {
  std::uniform_int_distribution<int> freq(-6, 6);
  std::uniform_int_distribution<int> size(0, 5);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  ModeVector v;
  const int n = size(rng);
  for (int i = 0; i < n; ++i) {
    v.add(Mode{freq(rng), freq(rng)}, Rational(num(rng), den(rng)));
  }
  return v;
}

Rational spectral_value(int m, int j, int f) {
  return product_form_operator(m).evaluate(
      {{Var::C, Rational(j)}, {Var::B, Rational(f)}});
}

}  // namespace

TEST_CASE("mode vector basics") {
  ModeVector v;
  CHECK(v.is_zero());
  v.add(Mode{1, 0}, Rational(1, 2));
  v.add(Mode{1, 0}, Rational(-1, 2));
  CHECK(v.is_zero());  // exact cancellation drops the entry
  v.add(Mode{0, 1}, Rational(2));
  CHECK(v.coefficient(Mode{0, 1}) == Rational(2));
  CHECK(v.coefficient(Mode{5, 5}) == Rational(0));
  CHECK(v.str() == "2 * phi(0,1)");
  CHECK((Rational(0) * v).is_zero());
}

TEST_CASE("conformal action on single modes") {
  // r = 0 on phi_{0,0}: all four coefficients vanish
  CHECK(conformal_action(0, ModeVector::unit(Mode{0, 0})).is_zero());

  // r = 0 on phi_{1,0}
  ModeVector expected0;
  expected0.add(Mode{2, 1}, Rational(1, 4));
  expected0.add(Mode{0, 1}, Rational(-1, 4));
  expected0.add(Mode{2, -1}, Rational(1, 4));
  expected0.add(Mode{0, -1}, Rational(-1, 4));
  CHECK(conformal_action(0, ModeVector::unit(Mode{1, 0})) == expected0);

  // r = 2 on phi_{1,0}
  ModeVector expected2;
  expected2.add(Mode{2, 1}, Rational(3, 4));
  expected2.add(Mode{0, 1}, Rational(1, 4));
  expected2.add(Mode{2, -1}, Rational(3, 4));
  expected2.add(Mode{0, -1}, Rational(1, 4));
  CHECK(conformal_action(2, ModeVector::unit(Mode{1, 0})) == expected2);
}

TEST_CASE("conformal action is linear") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 100; ++i) {
    const ModeVector v = random_vector(rng);
    const ModeVector w = random_vector(rng);
    const Rational a(3, 2);
    const Rational b(-5, 3);
    const int r = static_cast<int>(i % 7) - 3;
    CHECK(conformal_action(r, a * v + b * w) ==
          a * conformal_action(r, v) + b * conformal_action(r, w));
  }
}

TEST_CASE("conformal action moves a mode to its four diagonal neighbors") {
  for (int j = -4; j <= 4; ++j) {
    for (int f = -4; f <= 4; ++f) {
      const ModeVector out = conformal_action(1, ModeVector::unit(Mode{j, f}));
      for (const auto& [mode, coef] : out.terms()) {
        CHECK(std::abs(mode.j - j) == 1);
        CHECK(std::abs(mode.f - f) == 1);
      }
    }
  }
}

TEST_CASE("diagonal action of the factored operator") {
  CHECK(factored_action(1, ModeVector::unit(Mode{1, 0})) ==
        ModeVector::unit(Mode{1, 0}));
  CHECK(factored_action(1, ModeVector::unit(Mode{1, 1})).is_zero());
  // (2+0+1)(2+0-1)(2-0+1)(2-0-1) = 3*1*3*1 = 9
  CHECK(factored_action(2, ModeVector::unit(Mode{2, 0})) ==
        Rational(9) * ModeVector::unit(Mode{2, 0}));
}

TEST_CASE("diagonal scalar has the sign symmetries") {
  for (int m = 1; m <= 3; ++m) {
    for (int j = -6; j <= 6; ++j) {
      for (int f = -6; f <= 6; ++f) {
        CHECK(spectral_value(m, j, f) == spectral_value(m, -j, f));
        CHECK(spectral_value(m, j, f) == spectral_value(m, j, -f));
      }
    }
  }
}

TEST_CASE("shift and frequency operators satisfy the commutation rules") {
  std::mt19937 rng(777);
  for (const int dj : {-1, 1}) {
    for (const int df : {-1, 1}) {
      for (int i = 0; i < 25; ++i) {
        const ModeVector v = random_vector(rng);
        // J P = P (J + dj) and F P = P (F + df)
        CHECK(scale_by_j(mode_shift(dj, df, v)) ==
              mode_shift(dj, df, scale_by_j(v) + Rational(dj) * v));
        CHECK(scale_by_f(mode_shift(dj, df, v)) ==
              mode_shift(dj, df, scale_by_f(v) + Rational(df) * v));
      }
    }
  }
  CHECK_THROWS_AS(mode_shift(0, 1, ModeVector{}), std::invalid_argument);
  CHECK_THROWS_AS(mode_shift(1, 2, ModeVector{}), std::invalid_argument);
}

TEST_CASE("conformal action equals its shift/frequency composition") {
  // 4 U_{-r} = P(1,1)(J+F+r) + P(-1,1)(-J+F+r) + P(1,-1)(J-F+r) + P(-1,-1)(-J-F+r)
  std::mt19937 rng(31415);
  for (int i = 0; i < 50; ++i) {
    const ModeVector v = random_vector(rng);
    const int r = static_cast<int>(i % 9) - 4;
    const Rational rr(r);
    const ModeVector composed =
        mode_shift(1, 1, scale_by_j(v) + scale_by_f(v) + rr * v) +
        mode_shift(-1, 1, Rational(-1) * scale_by_j(v) + scale_by_f(v) + rr * v) +
        mode_shift(1, -1, scale_by_j(v) + Rational(-1) * scale_by_f(v) + rr * v) +
        mode_shift(-1, -1,
                   Rational(-1) * scale_by_j(v) + Rational(-1) * scale_by_f(v) + rr * v);
    CHECK(Rational(4) * conformal_action(r, v) == composed);
  }
}

TEST_CASE("intertwining worked instance: m=1 on phi(1,0)") {
  // Both sides must equal 1/4 { 3 phi(2,1) + phi(0,1) + 3 phi(2,-1) + phi(0,-1) }.
  ModeVector expected;
  expected.add(Mode{2, 1}, Rational(3, 4));
  expected.add(Mode{0, 1}, Rational(1, 4));
  expected.add(Mode{2, -1}, Rational(3, 4));
  expected.add(Mode{0, -1}, Rational(1, 4));

  const ModeVector phi = ModeVector::unit(Mode{1, 0});
  const ModeVector lhs = factored_action(1, conformal_action(0, phi));
  const ModeVector rhs = conformal_action(2, factored_action(1, phi));
  CHECK(lhs == expected);
  CHECK(rhs == expected);
}

TEST_CASE("intertwining worked instance: m=1 on phi(0,0)") {
  const ModeVector phi = ModeVector::unit(Mode{0, 0});
  CHECK(factored_action(1, conformal_action(0, phi)).is_zero());
  CHECK(conformal_action(2, factored_action(1, phi)).is_zero());
}

TEST_CASE("intertwining verification") {
  for (int m = 1; m <= 3; ++m) {
    const auto report = verify_intertwining(m, 8);
    CHECK(report.passed);
    CHECK(report.valid());
  }
  CHECK_THROWS_AS(verify_intertwining(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_intertwining(0, 8), std::invalid_argument);
}

TEST_CASE("each flipped sign in the conformal action is detected") {
  // 4 terms x 3 signed symbols (j, f, r) = 12 possible single-sign flips
  for (int site = 0; site < 12; ++site) {
    const auto report = verify_intertwining_with(
        1, 4, [site](int r, const ModeVector& v) {
          return conformal_action_sign_flipped(r, v, site);
        });
    CHECK_FALSE(report.passed);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->find("mode phi(") != std::string::npos);
  }
  CHECK_THROWS_AS(conformal_action_sign_flipped(0, ModeVector{}, 12),
                  std::invalid_argument);
  CHECK_THROWS_AS(conformal_action_sign_flipped(0, ModeVector{}, -1),
                  std::invalid_argument);
}

TEST_CASE("eigenvalue reconstruction matches the factored operator") {
  for (int m = 1; m <= 3; ++m) {
    const int radius = 8;
    const auto rec = reconstruct_eigenvalues(m, radius);

    CHECK(rec.base_modes[static_cast<size_t>(m % 2)] == Mode{m, 0});
    CHECK(rec.base_modes[static_cast<size_t>((m + 1) % 2)] == Mode{m + 1, 0});

    // Propagated values agree with the spectral values everywhere reached
    // (normalizing at the spectral value makes the class constants 1).
    for (const auto& [mode, value] : rec.values) {
      CHECK(value == spectral_value(m, mode.j, mode.f));
    }

    // Unreached modes are exactly those beyond the kernel lines
    // j+f = 1-m and j-f = 1-m in the parity class of (m+1, 0).
    const int blocked_parity = (m + 1) % 2;
    for (int j = -radius; j <= radius; ++j) {
      for (int f = -radius; f <= radius; ++f) {
        const int parity = (((j + f) % 2) + 2) % 2;
        const bool expect_unreached =
            parity == blocked_parity && (j + f < 1 - m || j - f < 1 - m);
        CHECK(rec.values.contains(Mode{j, f}) == !expect_unreached);
      }
    }

    const auto report = verify_reconstruction(m, radius);
    CHECK(report.passed);
  }
  CHECK_THROWS_AS(reconstruct_eigenvalues(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_eigenvalues(0, 8), std::invalid_argument);
}

TEST_CASE("mode vector JSON form") {
  ModeVector v;
  v.add(Mode{2, 1}, Rational(3, 4));
  v.add(Mode{0, 1}, Rational(1, 4));
  v.add(Mode{2, -1}, Rational(3, 4));
  v.add(Mode{0, -1}, Rational(1, 4));
  CHECK(v.to_json() ==
        R"([{"j":0,"f":-1,"coef":"1/4"},{"j":0,"f":1,"coef":"1/4"},)"
        R"({"j":2,"f":-1,"coef":"3/4"},{"j":2,"f":1,"coef":"3/4"}])");
  CHECK(ModeVector{}.to_json() == "[]");
}
