// Exact eigenvalue/multiplicity enumeration for sphere Laplacians and for
// the factored operator family on S^p x S^q, plus the low-order
// cross-checks against the explicit second- and fourth-order operators.
#pragma once

#include <string>
#include <vector>

#include "gjms/rational.hpp"
#include "gjms/report.hpp"

namespace gjms {

/// One harmonic degree on S^q: Laplacian eigenvalue j(q-1+j), shifted
/// square-root value j + (q-1)/2, and the dimension of the degree-j
/// harmonic space.
struct SphereModeRow {
  int j = 0;
  Rational laplacian_eigenvalue;
  Rational c_value;
  Integer multiplicity;
};

/// Degrees j = 0..jmax on S^q. Multiplicity is
/// binom(j+q, q) - binom(j+q-2, q). Throws std::invalid_argument for
/// q < 1 (an S^0 factor has no harmonic ladder here; the round sphere is
/// served by sphere_operator) or jmax < 0.
std::vector<SphereModeRow> sphere_modes(int q, int jmax);

/// binom(j+q, q) - binom(j+q-2, q), with binom(a, b) = 0 when a < b.
Integer harmonic_multiplicity(int j, int q);

struct SpectrumRow {
  int j = 0;
  int k = 0;
  Rational c_value;
  Rational b_value;
  Rational eigenvalue;
  Integer multiplicity;
};

/// Full joint spectrum of the order-2m operator on S^p x S^q over the mode
/// rectangle j <= jmax, k <= kmax, rows sorted by (j, k).
struct SpectrumTable {
  int p = 1;
  int q = 1;
  int m = 1;
  int jmax = 0;
  int kmax = 0;
  std::vector<SpectrumRow> rows;
};

/// eigenvalue = product form evaluated at C = j + (q-1)/2, B = k + (p-1)/2;
/// multiplicity = mult(j, q) * mult(k, p). Requires p, q >= 1 and m >= 1.
SpectrumTable product_spectrum(int p, int q, int m, int jmax, int kmax);

/// Order-2 spectral values match the Yamabe polynomial at
/// (lambda, mu) = (j(q-1+j), k(p-1+k)) on every enumerated mode.
VerificationReport crosscheck_yamabe(int p, int q, int jmax, int kmax);

/// Order-4 spectral values match the expanded fourth-order polynomial.
VerificationReport crosscheck_paneitz(int p, int q, int jmax, int kmax);

/// Numeric end-to-end Q-independence check: the sum form evaluated at
/// (C, B, Q) = (c_j, b_k, q_sample) equals the product-form spectral value
/// on every enumerated mode, for an arbitrary rational q_sample.
VerificationReport crosscheck_sum_form_numeric(int p, int q, int m,
                                               const Rational& q_sample,
                                               int jmax, int kmax);

/// JSON array of {"j", "k", "c", "b", "eigenvalue", "multiplicity"};
/// rationals are exact "num/den" strings, multiplicity a decimal string.
std::string to_json(const SpectrumTable& table);

inline constexpr const char* kSpectrumCsvHeader = "j,k,c,b,eigenvalue,multiplicity";

/// CSV with header row; same columns and value strings as the JSON form.
std::string to_csv(const SpectrumTable& table);

}  // namespace gjms
