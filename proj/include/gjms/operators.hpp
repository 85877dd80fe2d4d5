// Construction of the conformally invariant operator family with leading
// term a power of the Laplacian on S^p x S^q, in its several equivalent
// polynomial forms, plus the exact identity checks relating them.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gjms/multipoly.hpp"
#include "gjms/rational.hpp"
#include "gjms/report.hpp"

namespace gjms {

/// Geometry of the signature-(p,q) product S^p x S^q: p is the dimension of
/// the negative-signature factor (p >= 0), q of the positive one (q >= 1),
/// n = p + q. Scalar curvature is (n-1)(q-p).
struct CurvatureContext {
  CurvatureContext(int p, int q);

  int p = 0;
  int q = 1;

  int n() const { return p + q; }
  Rational scalar_curvature() const;

  /// (n-2)/(4(n-1)), the conformal Laplacian's curvature coupling.
  /// Throws std::invalid_argument when n < 2.
  Rational curvature_coupling() const;
};

/// The order-2m operator as the alternating binomial sum of factor chains
/// in C, B, Q, with the dependent symbol P eliminated as P = m - 1 - Q:
///
///   sum_{l=0}^{m} (-1)^{m-l} binom(m,l)
///     * (C+Q)(C+Q-2)...       [l factors, step -2]
///     * (C-Q)(C-Q+2)...       [l factors, step +2]
///     * (B+P)(B+P-2)...       [m-l factors, step -2]
///     * (B-P)(B-P+2)...       [m-l factors, step +2]
///
/// Returned over the declared variables {C, B, Q}; the content is expected
/// to be Q-free, which is exactly what verify_factorization certifies.
MultiPoly sum_form_operator(int m);

/// sum_form_operator with delta added to the binomial coefficient of the
/// term at index ell (0 <= ell <= m). Negative-control input.
MultiPoly sum_form_operator_perturbed(int m, int ell, const Rational& delta);

/// The factored form: (C+B+m-1)(C+B+m-3)...(C+B-m+1) times
/// (C-B+m-1)...(C-B-m+1), decrements of 2, m factors each. Variables {C, B}.
MultiPoly product_form_operator(int m);

/// The factored form regrouped into polynomial factors of C^2 and B^2:
/// for m odd, (C^2-B^2) * prod_{l=1}^{(m-1)/2} [C^4 - 2(B^2+(2l)^2)C^2 + (B^2-(2l)^2)^2];
/// for m even, prod_{l=1}^{m/2} [C^4 - 2(B^2+(2l-1)^2)C^2 + (B^2-(2l-1)^2)^2].
/// This shape makes it manifest that the operator is differential.
MultiPoly paired_form_operator(int m);

/// Round-sphere S^n specialization: product_form_operator at B = 1/2,
/// rewritten in the Laplacian via C^2 = Delta + ((n-1)/2)^2. Variable {Delta}.
MultiPoly sphere_operator(int m, int n);

/// Gover's conformally-Einstein product form on S^n:
/// prod_{l=1}^{m} (Delta + c_l * n(n-1)) with c_l = (n+2l-2)(n-2l)/(4n(n-1)).
MultiPoly gover_product(int m, int n);

/// Conformal Laplacian eigenvalue polynomial on S^p x S^q:
/// lambda - mu + (n-2)/(4(n-1)) * Scal, where lambda and mu are the
/// eigenvalues of the Laplacians on S^q and S^p.
MultiPoly yamabe_operator(const CurvatureContext& ctx);

/// Fourth-order operator from expanding the squared d'Alembertian:
/// lambda^2 + mu^2 - 2 lambda mu - 2(1 - kS) lambda + 2(-1 - kS) mu
///   + (kS)^2 + n - n^2/2 + pq,  with kS = (n-2) Scal / (4(n-1)).
MultiPoly paneitz_operator_expanded(const CurvatureContext& ctx);

/// The same operator assembled from its curvature ingredients: the leading
/// square, the transgression term 2 kS (lambda - mu) - 2 (lambda + mu), and
/// the Q-curvature contribution (kS)^2 + n - n^2/2 + pq.
MultiPoly paneitz_operator_curvature(const CurvatureContext& ctx);

/// Generic exact comparison producing a report; the witness of a failure is
/// the leading nonzero monomial of lhs - rhs.
VerificationReport verify_polys_equal(std::string claim,
                                      std::vector<std::pair<std::string, std::string>> params,
                                      const MultiPoly& lhs, const MultiPoly& rhs);

/// sum form == product form, symbolically in {C, B, Q}. A pass certifies
/// Q-independence as well, since Q stays a free symbol throughout.
VerificationReport verify_factorization(int m);

/// paired form == product form.
VerificationReport verify_paired_form(int m);

/// Order-lowering recursion: the order-2(m+1) sum form equals the order-2m
/// sum form shifted by C -> C-1, Q -> Q-1, times (C+m-B)(C+m+B).
VerificationReport verify_recursion(int m);

/// Invariance of the product form under C -> -C and under B -> -B
/// (equivalently: only even powers of each appear).
VerificationReport verify_sign_symmetries(int m);

/// sphere_operator(m, n) == gover_product(m, n).
VerificationReport verify_gover_form(int m, int n);

/// paneitz_operator_expanded == paneitz_operator_curvature for one context.
VerificationReport verify_paneitz_equivalence(const CurvatureContext& ctx);

}  // namespace gjms
