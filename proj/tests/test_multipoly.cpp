#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "gjms/multipoly.hpp"

using namespace gjms;

namespace {

MultiPoly C() { return MultiPoly::variable(Var::C); }
MultiPoly B() { return MultiPoly::variable(Var::B); }
MultiPoly Q() { return MultiPoly::variable(Var::Q); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return Rational(num(rng), den(rng));
}

MultiPoly random_poly(std::mt19937& rng) {
  static constexpr Var kAll[] = {Var::C, Var::B, Var::Q, Var::Delta, Var::Lambda, Var::Mu};
  std::uniform_int_distribution<int> var_count(1, 3);
  std::uniform_int_distribution<int> var_pick(0, 5);
  std::uniform_int_distribution<int> term_count(0, 5);
  std::uniform_int_distribution<int> expo(0, 3);

  std::vector<Var> vars;
  const int nv = var_count(rng);
  for (int i = 0; i < nv; ++i) vars.push_back(kAll[var_pick(rng)]);

  MultiPoly p;
  const int nt = term_count(rng);
  for (int t = 0; t < nt; ++t) {
    MultiPoly term{random_rational(rng)};
    for (const Var v : vars) term *= pow(MultiPoly::variable(v), expo(rng));
    p += term;
  }
  return p;
}

std::map<Var, Rational> random_assignment(std::mt19937& rng) {
  std::map<Var, Rational> a;
  for (int i = 0; i < kVarCount; ++i) a[static_cast<Var>(i)] = random_rational(rng);
  return a;
}

}  // namespace

TEST_CASE("addition") {
  CHECK((C() * C() - B() * B()) + B() * B() == C() * C());
  const MultiPoly p = C() * C() + Rational(2) * B() - Rational(3);
  CHECK(p + MultiPoly{} == p);  // additive identity
  CHECK((C() + Q()) + (C() - Q()) == Rational(2) * C());
}

TEST_CASE("multiplication") {
  CHECK((C() + B()) * (C() - B()) == C() * C() - B() * B());
  const MultiPoly p = C() * B() + Rational(1, 2) * Q();
  CHECK(p * MultiPoly(Rational(1)) == p);  // multiplicative identity
  CHECK((C() + Q()) * (C() - Q()) == C() * C() - Q() * Q());
}

TEST_CASE("factor chains") {
  // (C+B+1)(C+B-1) expands to C^2 + 2CB + B^2 - 1
  const MultiPoly chain = factor_chain(C() + B(), Rational(1), -2, 2);
  const MultiPoly expected =
      C() * C() + Rational(2) * C() * B() + B() * B() - Rational(1);
  CHECK(chain == expected);

  CHECK(factor_chain(C(), Rational(5), 2, 0) == MultiPoly(Rational(1)));
  CHECK(factor_chain(C(), Rational(0), -2, 1) == C());

  CHECK_THROWS_AS(factor_chain(C(), Rational(0), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(factor_chain(C(), Rational(0), -2, -1), std::invalid_argument);

  const FactorChain descriptor{C() + B(), Rational(1), -2, 2};
  CHECK(descriptor.expand() == expected);
}

TEST_CASE("variable shift") {
  const MultiPoly c2 = C() * C();
  CHECK(c2.shifted(Var::C, Rational(-1)) == c2 - Rational(2) * C() + Rational(1));
  CHECK(c2.shifted(Var::C, Rational(-1)).shifted(Var::C, Rational(1)) == c2);
  CHECK((C() + Q()).shifted(Var::Q, Rational(-1)) == C() + Q() - Rational(1));
  CHECK_THROWS_AS(c2.shifted(Var::Q, Rational(1)), std::invalid_argument);

  // shifting keeps the declared variable list even when the shifted
  // variable cancels out of every term
  const MultiPoly has_q = C() + Q() - Q();  // declares {C, Q}, uses only C
  const MultiPoly moved = has_q.shifted(Var::Q, Rational(3));
  CHECK(moved == C());
  CHECK(moved.variables() == std::vector<Var>{Var::C, Var::Q});
}

TEST_CASE("substitution") {
  CHECK((C() * C() + B()).substituted(Var::B, MultiPoly(Rational(1, 2))) ==
        C() * C() + Rational(1, 2));
  CHECK((C() * C()).substituted(Var::C, B() + Rational(1)) ==
        B() * B() + Rational(2) * B() + Rational(1));
  CHECK_THROWS_AS(C().substituted(Var::B, B()), std::invalid_argument);
}

TEST_CASE("square rewriting") {
  const MultiPoly p = pow(C(), 4) - Rational(2) * C() * C() + Rational(1);
  const MultiPoly d = MultiPoly::variable(Var::Delta);
  CHECK(p.squares_rewritten(Var::C, d) == d * d - Rational(2) * d + Rational(1));
  CHECK_THROWS_AS(pow(C(), 3).squares_rewritten(Var::C, d), std::invalid_argument);
  CHECK_THROWS_AS(p.squares_rewritten(Var::B, d), std::invalid_argument);
}

TEST_CASE("evaluation") {
  const MultiPoly p = C() * C() - B() * B();
  CHECK(p.evaluate({{Var::C, Rational(2)}, {Var::B, Rational(1)}}) == Rational(3));

  const MultiPoly q = C() * B() + Rational(5) * C() - Rational(7, 2);
  CHECK(q.evaluate({{Var::C, Rational(0)}, {Var::B, Rational(0)}}) == Rational(-7, 2));

  // hand evaluation of (C+B+1)(C+B-1)(C-B+1)(C-B-1) at (2, 1): 4*2*2*0 = 0
  const MultiPoly g4 = (C() + B() + Rational(1)) * (C() + B() - Rational(1)) *
                       (C() - B() + Rational(1)) * (C() - B() - Rational(1));
  CHECK(g4.evaluate({{Var::C, Rational(2)}, {Var::B, Rational(1)}}) == Rational(0));

  CHECK_THROWS_AS(p.evaluate({{Var::C, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("degrees and parity") {
  const MultiPoly p = pow(C(), 3) * B() + C() * C() - Rational(4);
  CHECK(p.total_degree() == 4);
  CHECK(MultiPoly{}.total_degree() == -1);
  CHECK(p.homogeneous_part(4) == pow(C(), 3) * B());
  CHECK(p.homogeneous_part(2) == C() * C());
  CHECK(p.homogeneous_part(3).is_zero());

  const MultiPoly even = pow(C(), 2) * pow(B(), 4) + pow(C(), 4);
  CHECK(even.has_only_even_powers(Var::C));
  CHECK(even.has_only_even_powers(Var::B));
  CHECK_FALSE(p.has_only_even_powers(Var::C));
  CHECK(p.has_only_even_powers(Var::Q));  // vacuous
}

TEST_CASE("serialization is graded-lex and round-trips") {
  CHECK((C() * C() - B() * B()).str() == "1 * C^2 + -1 * B^2");
  CHECK(MultiPoly{}.str() == "0");
  CHECK(MultiPoly(Rational(-7, 2)).str() == "-7/2");
  const MultiPoly p = (C() + B()) * (C() + B());
  CHECK(p.str() == "1 * C^2 + 2 * C^1 B^1 + 1 * B^2");
  CHECK(p.leading_term_str() == "1 * C^2");
  CHECK(MultiPoly{}.leading_term_str() == std::nullopt);

  CHECK(MultiPoly::parse("1 * C^2 + -1 * B^2") == C() * C() - B() * B());
  CHECK(MultiPoly::parse("0").is_zero());
  CHECK(MultiPoly::parse("3/2") == MultiPoly(Rational(3, 2)));
  CHECK(MultiPoly::parse("C^2 B") == C() * C() * B());
  CHECK(MultiPoly::parse("2 * lambda + -1 * mu") ==
        Rational(2) * MultiPoly::variable(Var::Lambda) - MultiPoly::variable(Var::Mu));
  CHECK_THROWS_AS(MultiPoly::parse("1 * X^2"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse(""), std::invalid_argument);
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly a = random_poly(rng);
    const MultiPoly b = random_poly(rng);
    const MultiPoly c = random_poly(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(987654);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly a = random_poly(rng);
    const MultiPoly b = random_poly(rng);
    const auto point = random_assignment(rng);
    REQUIRE((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
    REQUIRE((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
  }
}

TEST_CASE("evaluation at zero picks out the constant term") {
  std::mt19937 rng(112233);
  std::map<Var, Rational> zero;
  for (int i = 0; i < kVarCount; ++i) zero[static_cast<Var>(i)] = Rational(0);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = random_poly(rng);
    REQUIRE(MultiPoly(p.evaluate(zero)) == p.homogeneous_part(0));
  }
}

TEST_CASE("shift is inverted by the opposite shift") {
  std::mt19937 rng(13579);
  int exercised = 0;
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = random_poly(rng);
    if (p.variables().empty()) continue;
    const Var v = p.variables()[static_cast<size_t>(i) % p.variables().size()];
    const Rational t = random_rational(rng);
    REQUIRE(p.shifted(v, t).shifted(v, -t) == p);
    ++exercised;
  }
  CHECK(exercised > 100);
}

TEST_CASE("serialize/parse round trip on randomized polynomials") {
  std::mt19937 rng(24680);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = random_poly(rng);
    REQUIRE(MultiPoly::parse(p.str()) == p);
  }
}
