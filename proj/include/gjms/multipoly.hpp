// Sparse multivariate polynomials over exact rationals in the fixed
// variable universe C, B, Q, Delta, lambda, mu.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gjms/rational.hpp"

namespace gjms {

/// The variable universe, in the global canonical order. C and B are the
/// shifted square roots of the sphere Laplacians, Q the homogeneity symbol,
/// Delta the round-sphere Laplacian, lambda/mu the eigenvalues of the two
/// factor Laplacians.
enum class Var : std::uint8_t { C = 0, B = 1, Q = 2, Delta = 3, Lambda = 4, Mu = 5 };

inline constexpr int kVarCount = 6;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Sparse polynomial over Rational coefficients. Each value carries an
/// ordered list of declared variables (a subset of the universe, in
/// canonical order) and a term map keyed by exponent vectors of matching
/// length. Invariants: no stored coefficient is zero; term keys all have
/// length variables().size().
///
/// Values are immutable after construction in the sense that every
/// operation returns a fresh polynomial; the mutating operators replace the
/// whole value. Safe to share across threads once built.
///
/// Declared variables are part of the contract, not of the mathematics:
/// a polynomial may declare Q and use it in no term (this is exactly what
/// the Q-independence checks produce). operator== compares mathematical
/// content over the union of the declared lists.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  /// Graded lexicographic, highest first: larger total degree wins, ties
  /// broken by lexicographically larger exponent vector (C most
  /// significant). Serialization order and leading-term order.
  struct GradedLexDown {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GradedLexDown>;

  MultiPoly() = default;                       // zero polynomial, no variables
  MultiPoly(const Rational& constant);         // NOLINT: intentionally implicit
  explicit MultiPoly(long constant) : MultiPoly(Rational(constant)) {}

  static MultiPoly variable(Var v);

  const std::vector<Var>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;

  /// The sum of the terms of exactly the given total degree.
  MultiPoly homogeneous_part(int degree) const;

  /// True when every term carries an even exponent of v (vacuously true
  /// when v is not declared).
  bool has_only_even_powers(Var v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { a *= b; return a; }
  friend MultiPoly operator+(MultiPoly a, const Rational& b) { a += MultiPoly(b); return a; }
  friend MultiPoly operator-(MultiPoly a, const Rational& b) { a -= MultiPoly(b); return a; }
  friend MultiPoly operator*(MultiPoly a, const Rational& b) { a *= MultiPoly(b); return a; }
  friend MultiPoly operator+(const Rational& a, MultiPoly b) { return std::move(b) + a; }
  friend MultiPoly operator-(const Rational& a, const MultiPoly& b) { return MultiPoly(a) - b; }
  friend MultiPoly operator*(const Rational& a, MultiPoly b) { return std::move(b) * a; }

  /// v -> v + offset, fully expanded. The declared variable list is
  /// preserved (shifting is an automorphism of the same ring).
  /// Throws std::invalid_argument when v is not declared.
  MultiPoly shifted(Var v, const Rational& offset) const;

  /// v -> replacement, fully expanded. v leaves the declared list unless
  /// the replacement reintroduces it. Throws when v is not declared.
  MultiPoly substituted(Var v, const MultiPoly& replacement) const;

  /// v^2 -> replacement. Requires every power of v to be even; throws
  /// std::invalid_argument otherwise or when v is not declared.
  MultiPoly squares_rewritten(Var v, const MultiPoly& replacement) const;

  /// Exact evaluation. The assignment must cover every declared variable
  /// (extra entries are ignored); throws std::invalid_argument otherwise.
  Rational evaluate(const std::map<Var, Rational>& assignment) const;

  /// Graded-lex text form, e.g. "1 * C^2 + -1 * B^2" or "0". Coefficients
  /// are printed num/den with the denominator omitted when 1.
  std::string str() const;

  /// Text form of the leading (graded-lex greatest) term; nullopt for zero.
  /// This is the "first nonzero monomial" used as a failure witness.
  std::optional<std::string> leading_term_str() const;

  /// Inverse of str(). Accepts "name^e" and bare "name" factors and an
  /// optional leading coefficient per term. Throws std::invalid_argument
  /// on malformed input or unknown variable names.
  static MultiPoly parse(std::string_view text);

  /// Mathematical equality over the union of the declared variable lists.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.str();
  }

 private:
  std::vector<Var> vars_;  // strictly ascending in canonical order
  TermMap terms_;

  /// Re-declares this polynomial over a superset of its variables.
  MultiPoly embedded(const std::vector<Var>& superset) const;
  void insert_term(Exponents key, Rational coef);
  std::string term_str(const Exponents& key, const Rational& coef) const;

  friend MultiPoly pow(const MultiPoly& base, int exponent);
};

/// base^e for e >= 0 (e = 0 gives the constant 1).
MultiPoly pow(const MultiPoly& base, int exponent);

/// Product of `count` factors (base + start), (base + start + step),
/// (base + start + 2*step), ...; count = 0 yields the constant 1.
/// The step must be +2 or -2: all operator factor chains here move in
/// increments or decrements of two.
MultiPoly factor_chain(const MultiPoly& base, const Rational& start, int step, int count);

/// Descriptor form of a factor chain, for callers that want to hold one
/// before expanding it.
struct FactorChain {
  MultiPoly base;
  Rational start;
  int step = -2;
  int count = 0;

  MultiPoly expand() const { return factor_chain(base, start, step, count); }
};

}  // namespace gjms
