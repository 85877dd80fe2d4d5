#include "gjms/spectrum.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "gjms/binomial.hpp"
#include "gjms/multipoly.hpp"
#include "gjms/operators.hpp"

namespace gjms {

namespace {

using clock_type = std::chrono::steady_clock;

void require_factors(int p, int q) {
  if (p < 1)
    throw std::invalid_argument(
        "S^0 factor unsupported in spectrum enumeration; use sphere_operator "
        "for the round sphere");
  if (q < 1)
    throw std::invalid_argument(
        "S^0 factor unsupported in spectrum enumeration; use sphere_operator "
        "for the round sphere");
}

std::string mode_witness(int j, int k, const Rational& lhs, const Rational& rhs) {
  return "mode (j=" + std::to_string(j) + " k=" + std::to_string(k) +
         "): lhs=" + lhs.str() + " rhs=" + rhs.str();
}

VerificationReport finish(VerificationReport r, clock_type::time_point t0) {
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(clock_type::now() - t0);
  return r;
}

}  // namespace

Integer harmonic_multiplicity(int j, int q) {
  return binomial(j + q, q) - binomial(j + q - 2, q);
}

std::vector<SphereModeRow> sphere_modes(int q, int jmax) {
  if (q < 1)
    throw std::invalid_argument(
        "S^0 factor unsupported; use sphere_operator for the round sphere");
  if (jmax < 0) throw std::invalid_argument("sphere_modes: jmax must be >= 0");
  std::vector<SphereModeRow> rows;
  rows.reserve(static_cast<size_t>(jmax) + 1);
  for (int j = 0; j <= jmax; ++j) {
    SphereModeRow row;
    row.j = j;
    row.laplacian_eigenvalue = Rational(static_cast<long>(j) * (q - 1 + j));
    row.c_value = Rational(j) + Rational(q - 1, 2);
    row.multiplicity = harmonic_multiplicity(j, q);
    rows.push_back(std::move(row));
  }
  return rows;
}

SpectrumTable product_spectrum(int p, int q, int m, int jmax, int kmax) {
  require_factors(p, q);
  if (m < 1) throw std::invalid_argument("product_spectrum: m must be >= 1");
  const auto qmodes = sphere_modes(q, jmax);
  const auto pmodes = sphere_modes(p, kmax);
  const MultiPoly g = product_form_operator(m);

  SpectrumTable table;
  table.p = p;
  table.q = q;
  table.m = m;
  table.jmax = jmax;
  table.kmax = kmax;
  table.rows.reserve(qmodes.size() * pmodes.size());
  for (const auto& jm : qmodes) {
    for (const auto& km : pmodes) {
      SpectrumRow row;
      row.j = jm.j;
      row.k = km.j;
      row.c_value = jm.c_value;
      row.b_value = km.c_value;
      row.eigenvalue = g.evaluate({{Var::C, jm.c_value}, {Var::B, km.c_value}});
      row.multiplicity = jm.multiplicity * km.multiplicity;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

VerificationReport crosscheck_yamabe(int p, int q, int jmax, int kmax) {
  const auto t0 = clock_type::now();
  require_factors(p, q);
  VerificationReport r;
  r.claim = "yamabe-crosscheck";
  r.params = {{"p", std::to_string(p)}, {"q", std::to_string(q)},
              {"jmax", std::to_string(jmax)}, {"kmax", std::to_string(kmax)}};
  const CurvatureContext ctx(p, q);
  const MultiPoly yam = yamabe_operator(ctx);
  const auto table = product_spectrum(p, q, 1, jmax, kmax);
  r.passed = true;
  for (const auto& row : table.rows) {
    const Rational lam(static_cast<long>(row.j) * (q - 1 + row.j));
    const Rational mu(static_cast<long>(row.k) * (p - 1 + row.k));
    const Rational rhs = yam.evaluate({{Var::Lambda, lam}, {Var::Mu, mu}});
    if (row.eigenvalue != rhs) {
      r.passed = false;
      r.witness = mode_witness(row.j, row.k, row.eigenvalue, rhs);
      break;
    }
  }
  return finish(std::move(r), t0);
}

VerificationReport crosscheck_paneitz(int p, int q, int jmax, int kmax) {
  const auto t0 = clock_type::now();
  require_factors(p, q);
  VerificationReport r;
  r.claim = "paneitz-crosscheck";
  r.params = {{"p", std::to_string(p)}, {"q", std::to_string(q)},
              {"jmax", std::to_string(jmax)}, {"kmax", std::to_string(kmax)}};
  const CurvatureContext ctx(p, q);
  const MultiPoly pan = paneitz_operator_expanded(ctx);
  const auto table = product_spectrum(p, q, 2, jmax, kmax);
  r.passed = true;
  for (const auto& row : table.rows) {
    const Rational lam(static_cast<long>(row.j) * (q - 1 + row.j));
    const Rational mu(static_cast<long>(row.k) * (p - 1 + row.k));
    const Rational rhs = pan.evaluate({{Var::Lambda, lam}, {Var::Mu, mu}});
    if (row.eigenvalue != rhs) {
      r.passed = false;
      r.witness = mode_witness(row.j, row.k, row.eigenvalue, rhs);
      break;
    }
  }
  return finish(std::move(r), t0);
}

VerificationReport crosscheck_sum_form_numeric(int p, int q, int m,
                                               const Rational& q_sample,
                                               int jmax, int kmax) {
  const auto t0 = clock_type::now();
  require_factors(p, q);
  VerificationReport r;
  r.claim = "sum-form-numeric-crosscheck";
  r.params = {{"p", std::to_string(p)}, {"q", std::to_string(q)},
              {"m", std::to_string(m)}, {"Qsample", q_sample.str()},
              {"jmax", std::to_string(jmax)}, {"kmax", std::to_string(kmax)}};
  const MultiPoly sum_form = sum_form_operator(m);
  const auto table = product_spectrum(p, q, m, jmax, kmax);
  r.passed = true;
  for (const auto& row : table.rows) {
    const Rational lhs = sum_form.evaluate(
        {{Var::C, row.c_value}, {Var::B, row.b_value}, {Var::Q, q_sample}});
    if (lhs != row.eigenvalue) {
      r.passed = false;
      r.witness = mode_witness(row.j, row.k, lhs, row.eigenvalue);
      break;
    }
  }
  return finish(std::move(r), t0);
}

std::string to_json(const SpectrumTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json o;
    o["j"] = row.j;
    o["k"] = row.k;
    o["c"] = row.c_value.fraction_str();
    o["b"] = row.b_value.fraction_str();
    o["eigenvalue"] = row.eigenvalue.fraction_str();
    o["multiplicity"] = row.multiplicity.get_str();
    rows.push_back(std::move(o));
  }
  return rows.dump();
}

std::string to_csv(const SpectrumTable& table) {
  std::string out = kSpectrumCsvHeader;
  out += '\n';
  for (const auto& row : table.rows) {
    out += std::to_string(row.j) + "," + std::to_string(row.k) + "," +
           row.c_value.fraction_str() + "," + row.b_value.fraction_str() + "," +
           row.eigenvalue.fraction_str() + "," + row.multiplicity.get_str() + "\n";
  }
  return out;
}

}  // namespace gjms
