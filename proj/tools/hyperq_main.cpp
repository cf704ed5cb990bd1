// Command-line front end: spectra, structural analysis, power construction,
// instance generation, and the seeded property-suite runner.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyperq/hyperq.hpp"
#include "hyperq/report.hpp"

namespace {

void emit(const hyperq::json& doc, const std::string& json_out) {
  std::string text = doc.dump(2);
  if (json_out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(json_out, std::ios::binary);
  if (!out) hyperq::fail(hyperq::errc::parse_error, "cannot write '" + json_out + "'");
  out << text << "\n";
}

void add_tolerance_flags(CLI::App* cmd, hyperq::Tolerances& tol) {
  cmd->add_option("--tol-zero", tol.zero_scale,
                  "relative scale for treating an eigenvalue as zero")
      ->capture_default_str();
  cmd->add_option("--tol-group", tol.group_scale,
                  "relative scale for merging eigenvalues into one multiplicity group")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signless Laplacian spectra of k-uniform hypergraphs"};
  app.require_subcommand(1);
  int exit_code = 0;

  hyperq::Tolerances tol;
  std::string json_out;

  auto* sp = app.add_subcommand("spectrum", "eigenvalues and multiplicities of one input file");
  std::string sp_file;
  bool sp_exact = false;
  sp->add_option("file", sp_file, "hypergraph file")->required();
  sp->add_flag("--exact-charpoly", sp_exact,
               "include exact integer characteristic polynomial coefficients");
  add_tolerance_flags(sp, tol);
  sp->add_option("--json-out", json_out, "write the JSON report to this path");
  sp->callback([&] {
    hyperq::Hypergraph h = hyperq::parse_hypergraph_file(sp_file);
    emit(hyperq::spectrum_report(h, tol, sp_exact), json_out);
  });

  auto* an = app.add_subcommand("analyze", "full structural battery with theorem assertions");
  std::string an_file;
  an->add_option("file", an_file, "hypergraph file")->required();
  add_tolerance_flags(an, tol);
  an->add_option("--json-out", json_out, "write the JSON report to this path");
  an->callback([&] {
    hyperq::Hypergraph h = hyperq::parse_hypergraph_file(an_file);
    hyperq::AnalyzeOutcome outcome = hyperq::run_analysis(h, tol);
    emit(outcome.report, json_out);
    if (!outcome.ok) {
      std::cerr << "assertion failed: " << outcome.first_failure << "\n";
      exit_code = 1;
    }
  });

  auto* pw = app.add_subcommand("power", "generalized power of a base hypergraph");
  std::string pw_file, pw_out;
  hyperq::PowerParams params;
  bool pw_verify = false;
  pw->add_option("file", pw_file, "base hypergraph file")->required();
  pw->add_option("-s", params.s, "copies per base vertex")->capture_default_str();
  pw->add_option("-r", params.r, "uniformity of the power, r >= k s")->required();
  pw->add_flag("--verify", pw_verify,
               "eigendecompose the constructed power and compare with the prediction");
  pw->add_option("--out", pw_out, "write the constructed hypergraph to this path");
  add_tolerance_flags(pw, tol);
  pw->add_option("--json-out", json_out, "write the JSON report to this path");
  pw->callback([&] {
    hyperq::Hypergraph h = hyperq::parse_hypergraph_file(pw_file);
    hyperq::PowerResult built = hyperq::power(h, params);
    hyperq::PredictedSpectrum pred = hyperq::predict_power_spectrum(h, params, tol);
    std::optional<std::string> constructed_file;
    if (!pw_out.empty()) {
      hyperq::write_hypergraph_file(built.hypergraph, pw_out);
      constructed_file = pw_out;
    }
    std::optional<bool> verified;
    if (pw_verify) verified = hyperq::verify_power_spectrum(h, params, tol);
    emit(hyperq::power_report(h, params, pred, constructed_file, verified), json_out);
    if (verified && !*verified) {
      std::cerr << "verification failed: constructed spectrum disagrees with prediction\n";
      exit_code = 1;
    }
  });

  auto* gen = app.add_subcommand("gen", "uniformly sample a random k-uniform hypergraph");
  int gen_k = 2, gen_n = 0, gen_m = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("-k", gen_k, "edge cardinality")->required();
  gen->add_option("-n", gen_n, "vertex labels 1..n")->required();
  gen->add_option("-m", gen_m, "number of distinct edges")->required();
  gen->add_option("--seed", gen_seed, "generator seed; same seed gives a byte-identical file")
      ->capture_default_str();
  gen->add_option("-o,--out", gen_out, "output path (stdout when absent)");
  gen->callback([&] {
    hyperq::Hypergraph h = hyperq::random_hypergraph(gen_k, gen_n, gen_m, gen_seed);
    if (gen_out.empty())
      std::cout << hyperq::serialize_hypergraph(h);
    else
      hyperq::write_hypergraph_file(h, gen_out);
  });

  auto* ver = app.add_subcommand("verify", "run the seeded cross-module property suites");
  hyperq::VerifyOptions vopt;
  ver->add_option("--trials", vopt.trials, "trials per suite")->capture_default_str();
  ver->add_option("--max-n", vopt.max_n, "largest vertex count sampled")->capture_default_str();
  ver->add_option("--min-k", vopt.min_k, "smallest edge cardinality")->capture_default_str();
  ver->add_option("--max-k", vopt.max_k, "largest edge cardinality")->capture_default_str();
  ver->add_option("--seed", vopt.seed, "master seed")->capture_default_str();
  add_tolerance_flags(ver, vopt.tol);
  ver->add_option("--json-out", json_out, "write the JSON summary to this path");
  ver->callback([&] {
    hyperq::VerifySummary summary = hyperq::run_verify(vopt);
    emit(hyperq::verify_report(summary), json_out);
    if (!summary.all_passed()) {
      std::cerr << "property suites reported failures\n";
      exit_code = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const hyperq::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
