// Batch CLI: verification suites and spectrum export with deterministic,
// machine-readable output. Data goes to stdout (or --output); diagnostics
// such as per-check timings go to stderr. Exit codes: 0 all checks passed,
// 1 at least one verification failed, 2 usage or parameter error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "gjms/intertwinor.hpp"
#include "gjms/multipoly.hpp"
#include "gjms/operators.hpp"
#include "gjms/rational.hpp"
#include "gjms/report.hpp"
#include "gjms/spectrum.hpp"

namespace {

using namespace gjms;

struct OutputConfig {
  std::string format = "text";
  std::string output_path;
};

void add_output_options(CLI::App* cmd, OutputConfig* out) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", out->output_path, "Write data output to this file");
}

class DataSink {
 public:
  explicit DataSink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void print_diagnostics(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    std::cerr << "# " << r.claim;
    for (const auto& [k, v] : r.params) std::cerr << " " << k << "=" << v;
    std::cerr << " elapsed_ms=" << (static_cast<double>(r.elapsed.count()) / 1000.0)
              << "\n";
  }
}

void emit_reports(const std::vector<VerificationReport>& reports,
                  const OutputConfig& cfg, std::ostream& os) {
  if (cfg.format == "json") {
    os << "[";
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) os << ",";
      os << to_json(reports[i]);
    }
    os << "]\n";
  } else if (cfg.format == "csv") {
    os << kReportCsvHeader << "\n";
    for (const auto& r : reports) os << to_csv_row(r) << "\n";
  } else {
    for (const auto& r : reports) os << to_text_line(r) << "\n";
  }
}

void emit_spectrum(const SpectrumTable& table, const OutputConfig& cfg, std::ostream& os) {
  if (cfg.format == "json") {
    os << to_json(table) << "\n";
  } else if (cfg.format == "csv") {
    os << to_csv(table);
  } else {
    for (const auto& row : table.rows) {
      os << "j=" << row.j << " k=" << row.k << " c=" << row.c_value.fraction_str()
         << " b=" << row.b_value.fraction_str()
         << " eigenvalue=" << row.eigenvalue.fraction_str()
         << " multiplicity=" << row.multiplicity.get_str() << "\n";
    }
  }
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::cerr << "run with --help for usage\n";
  return 2;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verification and spectra for conformally invariant operators "
      "on pseudo-Riemannian products of spheres"};
  app.require_subcommand(0, 1);

  bool self_test_negative = false;
  app.add_flag("--self-test-negative", self_test_negative,
               "Perturb one identity on purpose; the check must fail and the "
               "exit code must be 1");

  // verify-factorization
  auto* fact = app.add_subcommand(
      "verify-factorization",
      "Sum form equals product form symbolically in C, B, Q for m = 1..mmax");
  int fact_mmax = 10;
  bool fact_dump = false;
  OutputConfig fact_out;
  fact->add_option("--mmax", fact_mmax, "Largest half-order m")->capture_default_str();
  fact->add_flag("--dump-poly", fact_dump, "Print the constructed polynomials");
  add_output_options(fact, &fact_out);

  // verify-recursion
  auto* rec = app.add_subcommand(
      "verify-recursion",
      "Order-lowering recursion between consecutive sum forms for m = 1..mmax");
  int rec_mmax = 10;
  OutputConfig rec_out;
  rec->add_option("--mmax", rec_mmax, "Largest half-order m")->capture_default_str();
  add_output_options(rec, &rec_out);

  // verify-paired
  auto* paired = app.add_subcommand(
      "verify-paired",
      "Paired differential-operator form equals the product form, and only "
      "even powers of C and B appear, for m = 1..mmax");
  int paired_mmax = 10;
  bool paired_dump = false;
  OutputConfig paired_out;
  paired->add_option("--mmax", paired_mmax, "Largest half-order m")->capture_default_str();
  paired->add_flag("--dump-poly", paired_dump, "Print the constructed polynomials");
  add_output_options(paired, &paired_out);

  // verify-gover
  auto* gover = app.add_subcommand(
      "verify-gover",
      "Round-sphere specialization equals the conformally-Einstein product "
      "form for m = 1..mmax, n = 2..nmax");
  int gover_mmax = 10;
  int gover_nmax = 10;
  bool gover_dump = false;
  OutputConfig gover_out;
  gover->add_option("--mmax", gover_mmax, "Largest half-order m")->capture_default_str();
  gover->add_option("--nmax", gover_nmax, "Largest sphere dimension n")->capture_default_str();
  gover->add_flag("--dump-poly", gover_dump, "Print the constructed polynomials");
  add_output_options(gover, &gover_out);

  // verify-paneitz-claim
  auto* pan = app.add_subcommand(
      "verify-paneitz-claim",
      "Expanded fourth-order operator equals its curvature-ingredient form");
  int pan_p = 1, pan_q = 3, pan_pmax = 0, pan_qmax = 0;
  bool pan_dump = false;
  OutputConfig pan_out;
  pan->add_option("--p", pan_p, "Negative-signature sphere dimension")->capture_default_str();
  pan->add_option("--q", pan_q, "Positive-signature sphere dimension")->capture_default_str();
  pan->add_option("--pmax", pan_pmax, "Check the whole grid 1..pmax x 1..qmax instead");
  pan->add_option("--qmax", pan_qmax, "Check the whole grid 1..pmax x 1..qmax instead");
  pan->add_flag("--dump-poly", pan_dump, "Print the constructed polynomials");
  add_output_options(pan, &pan_out);

  // crosscheck
  auto* cross = app.add_subcommand(
      "crosscheck",
      "Spectral cross-checks on S^p x S^q: order-2 vs Yamabe, order-4 vs the "
      "fourth-order operator, and the numeric sum-form check at a sample Q");
  int cross_p = 1, cross_q = 3, cross_mmax = 10, cross_jmax = 20, cross_kmax = 20;
  std::string cross_qsample = "7/3";
  bool cross_dump = false;
  OutputConfig cross_out;
  cross->add_option("--p", cross_p, "Negative-signature sphere dimension")->capture_default_str();
  cross->add_option("--q", cross_q, "Positive-signature sphere dimension")->capture_default_str();
  cross->add_option("--mmax", cross_mmax, "Largest half-order for the numeric check")
      ->capture_default_str();
  cross->add_option("--jmax", cross_jmax, "Largest S^q harmonic degree")->capture_default_str();
  cross->add_option("--kmax", cross_kmax, "Largest S^p harmonic degree")->capture_default_str();
  cross->add_option("--qsample", cross_qsample, "Rational sample value for Q, e.g. 7/3")
      ->capture_default_str();
  cross->add_flag("--dump-poly", cross_dump, "Print the constructed polynomials");
  add_output_options(cross, &cross_out);

  // intertwine
  auto* inter = app.add_subcommand(
      "intertwine",
      "Coefficient-exact intertwining check on the torus mode grid for "
      "m = 1..mmax");
  int inter_mmax = 10, inter_radius = 25;
  bool inter_trace = false;
  int trace_j = 1, trace_f = 0;
  OutputConfig inter_out;
  inter->add_option("--mmax", inter_mmax, "Largest half-order m")->capture_default_str();
  inter->add_option("-N,--radius", inter_radius, "Mode grid radius (|j|,|f| <= radius)")
      ->capture_default_str();
  inter->add_flag("--trace", inter_trace,
                  "Dump the step-by-step mode vectors for one starting mode");
  inter->add_option("--trace-j", trace_j, "Starting mode j for --trace")->capture_default_str();
  inter->add_option("--trace-f", trace_f, "Starting mode f for --trace")->capture_default_str();
  add_output_options(inter, &inter_out);

  // reconstruct
  auto* recon = app.add_subcommand(
      "reconstruct",
      "Propagate diagonal-intertwinor eigenvalues over the mode lattice and "
      "compare with the product form, for m = 1..mmax");
  int recon_mmax = 10, recon_radius = 25;
  OutputConfig recon_out;
  recon->add_option("--mmax", recon_mmax, "Largest half-order m")->capture_default_str();
  recon->add_option("-N,--radius", recon_radius, "Mode grid radius")->capture_default_str();
  add_output_options(recon, &recon_out);

  // spectrum
  auto* spec = app.add_subcommand(
      "spectrum", "Exact joint spectrum table of the order-2m operator on S^p x S^q");
  int spec_p = 1, spec_q = 3, spec_m = 1, spec_jmax = 20, spec_kmax = 20;
  bool spec_dump = false;
  OutputConfig spec_out;
  spec->add_option("--p", spec_p, "Negative-signature sphere dimension")->capture_default_str();
  spec->add_option("--q", spec_q, "Positive-signature sphere dimension")->capture_default_str();
  spec->add_option("--m", spec_m, "Half-order of the operator")->capture_default_str();
  spec->add_option("--jmax", spec_jmax, "Largest S^q harmonic degree")->capture_default_str();
  spec->add_option("--kmax", spec_kmax, "Largest S^p harmonic degree")->capture_default_str();
  spec->add_flag("--dump-poly", spec_dump, "Print the evaluated polynomial");
  add_output_options(spec, &spec_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    app.exit(e);
    return 2;
  }

  try {
    if (self_test_negative) {
      // One deliberately broken identity: a single binomial coefficient of
      // the sum form bumped by 1. Detection means the report fails.
      std::vector<VerificationReport> reports;
      reports.push_back(verify_polys_equal(
          "factorization-negative-control", {{"m", "3"}, {"ell", "1"}, {"delta", "1"}},
          sum_form_operator_perturbed(3, 1, Rational(1)), product_form_operator(3)));
      emit_reports(reports, OutputConfig{}, std::cout);
      print_diagnostics(reports);
      return all_passed(reports) ? 0 : 1;
    }

    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }

    std::vector<VerificationReport> reports;

    if (fact->parsed()) {
      if (fact_mmax < 1) return usage_error("--mmax must be >= 1");
      DataSink sink(fact_out.output_path);
      for (int m = 1; m <= fact_mmax; ++m) {
        if (fact_dump) {
          sink.stream() << "sum_form_operator(m=" << m
                        << ") = " << sum_form_operator(m).str() << "\n";
          sink.stream() << "product_form_operator(m=" << m
                        << ") = " << product_form_operator(m).str() << "\n";
        }
        reports.push_back(verify_factorization(m));
      }
      emit_reports(reports, fact_out, sink.stream());
    } else if (rec->parsed()) {
      if (rec_mmax < 1) return usage_error("--mmax must be >= 1");
      DataSink sink(rec_out.output_path);
      for (int m = 1; m <= rec_mmax; ++m) reports.push_back(verify_recursion(m));
      emit_reports(reports, rec_out, sink.stream());
    } else if (paired->parsed()) {
      if (paired_mmax < 1) return usage_error("--mmax must be >= 1");
      DataSink sink(paired_out.output_path);
      for (int m = 1; m <= paired_mmax; ++m) {
        if (paired_dump) {
          sink.stream() << "paired_form_operator(m=" << m
                        << ") = " << paired_form_operator(m).str() << "\n";
        }
        reports.push_back(verify_paired_form(m));
        reports.push_back(verify_sign_symmetries(m));
      }
      emit_reports(reports, paired_out, sink.stream());
    } else if (gover->parsed()) {
      if (gover_mmax < 1) return usage_error("--mmax must be >= 1");
      if (gover_nmax < 2) return usage_error("--nmax must be >= 2");
      DataSink sink(gover_out.output_path);
      for (int m = 1; m <= gover_mmax; ++m) {
        for (int n = 2; n <= gover_nmax; ++n) {
          if (gover_dump) {
            sink.stream() << "sphere_operator(m=" << m << ",n=" << n
                          << ") = " << sphere_operator(m, n).str() << "\n";
          }
          reports.push_back(verify_gover_form(m, n));
        }
      }
      emit_reports(reports, gover_out, sink.stream());
    } else if (pan->parsed()) {
      if ((pan_pmax > 0) != (pan_qmax > 0))
        return usage_error("--pmax and --qmax must be given together");
      DataSink sink(pan_out.output_path);
      if (pan_pmax > 0) {
        for (int p = 1; p <= pan_pmax; ++p) {
          for (int q = 1; q <= pan_qmax; ++q) {
            reports.push_back(verify_paneitz_equivalence(CurvatureContext(p, q)));
          }
        }
      } else {
        if (pan_p < 1 || pan_q < 1) return usage_error("--p and --q must be >= 1");
        const CurvatureContext ctx(pan_p, pan_q);
        if (pan_dump) {
          sink.stream() << "paneitz_operator_expanded(p=" << pan_p << ",q=" << pan_q
                        << ") = " << paneitz_operator_expanded(ctx).str() << "\n";
          sink.stream() << "paneitz_operator_curvature(p=" << pan_p << ",q=" << pan_q
                        << ") = " << paneitz_operator_curvature(ctx).str() << "\n";
        }
        reports.push_back(verify_paneitz_equivalence(ctx));
      }
      emit_reports(reports, pan_out, sink.stream());
    } else if (cross->parsed()) {
      if (cross_p < 1 || cross_q < 1) return usage_error("--p and --q must be >= 1");
      if (cross_mmax < 1) return usage_error("--mmax must be >= 1");
      if (cross_jmax < 0 || cross_kmax < 0)
        return usage_error("--jmax and --kmax must be >= 0");
      Rational qsample;
      try {
        qsample = Rational::parse(cross_qsample);
      } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
      }
      DataSink sink(cross_out.output_path);
      if (cross_dump) {
        const CurvatureContext ctx(cross_p, cross_q);
        sink.stream() << "yamabe_operator(p=" << cross_p << ",q=" << cross_q
                      << ") = " << yamabe_operator(ctx).str() << "\n";
        sink.stream() << "paneitz_operator_expanded(p=" << cross_p << ",q=" << cross_q
                      << ") = " << paneitz_operator_expanded(ctx).str() << "\n";
      }
      reports.push_back(crosscheck_yamabe(cross_p, cross_q, cross_jmax, cross_kmax));
      reports.push_back(crosscheck_paneitz(cross_p, cross_q, cross_jmax, cross_kmax));
      for (int m = 1; m <= cross_mmax; ++m) {
        reports.push_back(crosscheck_sum_form_numeric(cross_p, cross_q, m, qsample,
                                                      cross_jmax, cross_kmax));
      }
      emit_reports(reports, cross_out, sink.stream());
    } else if (inter->parsed()) {
      if (inter_mmax < 1) return usage_error("--mmax must be >= 1");
      if (inter_radius < inter_mmax + 2)
        return usage_error("--radius must be >= mmax + 2");
      DataSink sink(inter_out.output_path);
      for (int m = 1; m <= inter_mmax; ++m) {
        if (inter_trace) {
          const ModeVector basis = ModeVector::unit(Mode{trace_j, trace_f});
          const ModeVector u_phi = conformal_action(1 - m, basis);
          const ModeVector g_u_phi = factored_action(m, u_phi);
          const ModeVector g_phi = factored_action(m, basis);
          const ModeVector u_g_phi = conformal_action(m + 1, g_phi);
          sink.stream() << "trace m=" << m << " phi(" << trace_j << "," << trace_f << ")\n"
                        << "  action(1-m) phi        = " << u_phi.to_json() << "\n"
                        << "  factored action of it  = " << g_u_phi.to_json() << "\n"
                        << "  factored action on phi = " << g_phi.to_json() << "\n"
                        << "  action(m+1) of it      = " << u_g_phi.to_json() << "\n";
        }
        reports.push_back(verify_intertwining(m, inter_radius));
      }
      emit_reports(reports, inter_out, sink.stream());
    } else if (recon->parsed()) {
      if (recon_mmax < 1) return usage_error("--mmax must be >= 1");
      if (recon_radius < recon_mmax + 1)
        return usage_error("--radius must be >= mmax + 1");
      DataSink sink(recon_out.output_path);
      for (int m = 1; m <= recon_mmax; ++m) {
        reports.push_back(verify_reconstruction(m, recon_radius));
      }
      emit_reports(reports, recon_out, sink.stream());
    } else if (spec->parsed()) {
      if (spec_p < 1 || spec_q < 1) return usage_error("--p and --q must be >= 1");
      if (spec_m < 1) return usage_error("--m must be >= 1");
      if (spec_jmax < 0 || spec_kmax < 0)
        return usage_error("--jmax and --kmax must be >= 0");
      DataSink sink(spec_out.output_path);
      if (spec_dump) {
        sink.stream() << "product_form_operator(m=" << spec_m
                      << ") = " << product_form_operator(spec_m).str() << "\n";
      }
      const SpectrumTable table =
          product_spectrum(spec_p, spec_q, spec_m, spec_jmax, spec_kmax);
      emit_spectrum(table, spec_out, sink.stream());
      return 0;
    }

    print_diagnostics(reports);
    return all_passed(reports) ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
