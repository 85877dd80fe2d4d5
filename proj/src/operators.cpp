#include "gjms/operators.hpp"

#include <chrono>
#include <stdexcept>

#include "gjms/binomial.hpp"

namespace gjms {

namespace {

using clock_type = std::chrono::steady_clock;

MultiPoly var_C() { return MultiPoly::variable(Var::C); }
MultiPoly var_B() { return MultiPoly::variable(Var::B); }
MultiPoly var_Q() { return MultiPoly::variable(Var::Q); }
MultiPoly var_Delta() { return MultiPoly::variable(Var::Delta); }
MultiPoly var_lambda() { return MultiPoly::variable(Var::Lambda); }
MultiPoly var_mu() { return MultiPoly::variable(Var::Mu); }

void require_order(int m) {
  if (m < 1) throw std::invalid_argument("operator order parameter m must be >= 1");
}

MultiPoly sum_form_impl(int m, int perturbed_ell, const Rational& delta) {
  require_order(m);
  const MultiPoly c = var_C();
  const MultiPoly b = var_B();
  const MultiPoly q = var_Q();
  // The weight condition P + Q = m - 1 makes P dependent; eliminate it here
  // so inconsistent (P, Q) pairs cannot arise.
  const MultiPoly p_sym = MultiPoly(Rational(m - 1)) - q;

  MultiPoly total;
  for (int ell = 0; ell <= m; ++ell) {
    const int k = m - ell;
    Rational coef{binomial(m, ell)};
    if (ell == perturbed_ell) coef += delta;
    if (k % 2 != 0) coef = -coef;

    MultiPoly term{coef};
    term *= factor_chain(c + q, Rational(0), -2, ell);
    term *= factor_chain(c - q, Rational(0), +2, ell);
    term *= factor_chain(b + p_sym, Rational(0), -2, k);
    term *= factor_chain(b - p_sym, Rational(0), +2, k);
    total += term;
  }
  return total;
}

}  // namespace

CurvatureContext::CurvatureContext(int p_, int q_) : p(p_), q(q_) {
  if (p < 0) throw std::invalid_argument("CurvatureContext: p must be >= 0");
  if (q < 1) throw std::invalid_argument("CurvatureContext: q must be >= 1");
  // Two routes to the scalar curvature must agree: q(q-1) - p(p-1) and
  // (n-1)(q-p).
  const Rational direct(static_cast<long>(q) * (q - 1) - static_cast<long>(p) * (p - 1));
  if (direct != scalar_curvature())
    throw std::logic_error("CurvatureContext: scalar curvature identity violated");
}

Rational CurvatureContext::scalar_curvature() const {
  return Rational(static_cast<long>(n() - 1) * (q - p));
}

Rational CurvatureContext::curvature_coupling() const {
  if (n() < 2)
    throw std::invalid_argument("curvature coupling (n-2)/(4(n-1)) undefined for n < 2");
  return Rational(n() - 2, 4L * (n() - 1));
}

MultiPoly sum_form_operator(int m) { return sum_form_impl(m, -1, Rational(0)); }

MultiPoly sum_form_operator_perturbed(int m, int ell, const Rational& delta) {
  require_order(m);
  if (ell < 0 || ell > m)
    throw std::invalid_argument("sum_form_operator_perturbed: ell out of range");
  return sum_form_impl(m, ell, delta);
}

MultiPoly product_form_operator(int m) {
  require_order(m);
  const Rational start(m - 1);
  return factor_chain(var_C() + var_B(), start, -2, m) *
         factor_chain(var_C() - var_B(), start, -2, m);
}

MultiPoly paired_form_operator(int m) {
  require_order(m);
  const MultiPoly c2 = pow(var_C(), 2);
  const MultiPoly b2 = pow(var_B(), 2);
  MultiPoly result{Rational(1)};
  if (m % 2 == 1) {
    result = c2 - b2;
    for (int l = 1; l <= (m - 1) / 2; ++l) {
      const long even = 2L * l;
      const Rational s(even * even);
      result *= pow(c2, 2) - Rational(2) * (b2 + s) * c2 + pow(b2 - s, 2);
    }
  } else {
    for (int l = 1; l <= m / 2; ++l) {
      const long odd = 2L * l - 1;
      const Rational s(odd * odd);
      result *= pow(c2, 2) - Rational(2) * (b2 + s) * c2 + pow(b2 - s, 2);
    }
  }
  return result;
}

MultiPoly sphere_operator(int m, int n) {
  require_order(m);
  if (n < 2) throw std::invalid_argument("sphere_operator: n must be >= 2");
  const MultiPoly at_half = product_form_operator(m).substituted(Var::B, MultiPoly(Rational(1, 2)));
  // Only even powers of C survive, so C^2 = Delta + ((n-1)/2)^2 rewrites
  // the whole polynomial in the Laplacian.
  const MultiPoly c_squared = var_Delta() + Rational(static_cast<long>(n - 1) * (n - 1), 4);
  return at_half.squares_rewritten(Var::C, c_squared);
}

MultiPoly gover_product(int m, int n) {
  require_order(m);
  if (n < 2) throw std::invalid_argument("gover_product: n must be >= 2");
  const Rational sc(static_cast<long>(n) * (n - 1));  // scalar curvature of S^n
  MultiPoly result{Rational(1)};
  for (int l = 1; l <= m; ++l) {
    const Rational c_l(static_cast<long>(n + 2 * l - 2) * (n - 2 * l),
                       4L * n * (n - 1));
    result *= var_Delta() + c_l * sc;
  }
  return result;
}

MultiPoly yamabe_operator(const CurvatureContext& ctx) {
  return var_lambda() - var_mu() + ctx.curvature_coupling() * ctx.scalar_curvature();
}

MultiPoly paneitz_operator_expanded(const CurvatureContext& ctx) {
  const Rational ks = ctx.curvature_coupling() * ctx.scalar_curvature();
  const MultiPoly l = var_lambda();
  const MultiPoly u = var_mu();
  const int n = ctx.n();
  const Rational constant = ks * ks + Rational(n) - Rational(static_cast<long>(n) * n, 2) +
                            Rational(static_cast<long>(ctx.p) * ctx.q);
  return pow(l, 2) + pow(u, 2) - Rational(2) * l * u -
         Rational(2) * (Rational(1) - ks) * l +
         Rational(2) * (Rational(-1) - ks) * u + MultiPoly(constant);
}

MultiPoly paneitz_operator_curvature(const CurvatureContext& ctx) {
  const Rational ks = ctx.curvature_coupling() * ctx.scalar_curvature();
  const MultiPoly box = var_lambda() - var_mu();  // product d'Alembertian
  const MultiPoly transgression =
      Rational(2) * ks * box - Rational(2) * (var_lambda() + var_mu());
  const int n = ctx.n();
  const Rational q_curvature_term = ks * ks + Rational(n) -
                                    Rational(static_cast<long>(n) * n, 2) +
                                    Rational(static_cast<long>(ctx.p) * ctx.q);
  return pow(box, 2) + transgression + MultiPoly(q_curvature_term);
}

VerificationReport verify_polys_equal(std::string claim,
                                      std::vector<std::pair<std::string, std::string>> params,
                                      const MultiPoly& lhs, const MultiPoly& rhs) {
  const auto t0 = clock_type::now();
  const MultiPoly diff = lhs - rhs;
  VerificationReport r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.passed = diff.is_zero();
  if (!r.passed) r.witness = diff.leading_term_str();
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(clock_type::now() - t0);
  return r;
}

VerificationReport verify_factorization(int m) {
  return verify_polys_equal("factorization", {{"m", std::to_string(m)}},
                            sum_form_operator(m), product_form_operator(m));
}

VerificationReport verify_paired_form(int m) {
  return verify_polys_equal("paired-form", {{"m", std::to_string(m)}},
                            paired_form_operator(m), product_form_operator(m));
}

VerificationReport verify_recursion(int m) {
  require_order(m);
  const auto t0 = clock_type::now();
  const MultiPoly next = sum_form_operator(m + 1);
  const MultiPoly shifted =
      sum_form_operator(m).shifted(Var::C, Rational(-1)).shifted(Var::Q, Rational(-1));
  const MultiPoly multiplier =
      (var_C() + Rational(m) - var_B()) * (var_C() + Rational(m) + var_B());
  auto r = verify_polys_equal("recursion", {{"m", std::to_string(m)}},
                              next, shifted * multiplier);
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(clock_type::now() - t0);
  return r;
}

VerificationReport verify_sign_symmetries(int m) {
  require_order(m);
  const auto t0 = clock_type::now();
  const MultiPoly g = product_form_operator(m);
  const MultiPoly c_flipped = g.substituted(Var::C, -var_C());
  const MultiPoly b_flipped = g.substituted(Var::B, -var_B());
  VerificationReport r;
  r.claim = "sign-symmetry";
  r.params = {{"m", std::to_string(m)}};
  const MultiPoly dc = g - c_flipped;
  const MultiPoly db = g - b_flipped;
  r.passed = dc.is_zero() && db.is_zero();
  if (!r.passed) {
    r.witness = !dc.is_zero() ? ("C-flip: " + *dc.leading_term_str())
                              : ("B-flip: " + *db.leading_term_str());
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(clock_type::now() - t0);
  return r;
}

VerificationReport verify_gover_form(int m, int n) {
  return verify_polys_equal(
      "sphere-gover-form", {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
      sphere_operator(m, n), gover_product(m, n));
}

VerificationReport verify_paneitz_equivalence(const CurvatureContext& ctx) {
  return verify_polys_equal(
      "paneitz-equivalence",
      {{"p", std::to_string(ctx.p)}, {"q", std::to_string(ctx.q)}},
      paneitz_operator_expanded(ctx), paneitz_operator_curvature(ctx));
}

}  // namespace gjms
