#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperq/charpoly.hpp"
#include "hyperq/eigen.hpp"
#include "hyperq/error.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/power.hpp"
#include "hyperq/spectral.hpp"
#include "hyperq/structure.hpp"
#include "hyperq/verify.hpp"

namespace hyperq {

using json = nlohmann::json;

// Reports round every floating value to 12 significant digits so files are
// stable across platforms with differing printf tails.
inline double round_sig(double v, int digits = 12) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

inline json tolerance_record(const Spectrum& spec) {
  return json{{"tauSolve", round_sig(spec.tau_solve)},
              {"tauGroup", round_sig(spec.tau_group)},
              {"tauZero", round_sig(spec.tau_zero)}};
}

inline json spectrum_json(const Spectrum& spec) {
  json values = json::array();
  json mults = json::array();
  for (const EigenGroup& g : spec.groups) {
    values.push_back(spec.is_zero(g.value) ? 0.0 : round_sig(g.value));
    mults.push_back(g.multiplicity);
  }
  return json{{"eigenvalues", values},
              {"multiplicities", mults},
              {"rho", round_sig(spec.rho())},
              {"tolerances", tolerance_record(spec)}};
}

inline json spectrum_report(const Hypergraph& h, const Tolerances& tol,
                            bool exact_charpoly = false,
                            int order_limit = kDefaultCharPolyOrderLimit) {
  SymmetricMatrix q = signless_laplacian(h);
  Spectrum spec = eigen_decompose(q, tol);
  json out = spectrum_json(spec);
  out["k"] = h.k();
  out["vertices"] = h.vertex_count();
  out["edges"] = h.edge_count();
  if (exact_charpoly) {
    if (h.vertex_count() <= order_limit) {
      CharPoly p = char_poly_exact(q, order_limit);
      out["charpoly"] = p.coefficient_strings();
    } else {
      out["charpoly"] = nullptr;
      out["charpolyNote"] = "skipped: order " + std::to_string(h.vertex_count()) +
                            " exceeds the exact-arithmetic limit " + std::to_string(order_limit);
    }
  }
  return out;
}

struct AnalyzeOutcome {
  json report;
  bool ok = true;
  std::string first_failure;  // empty when ok
};

namespace detail {

inline void record_assertion(AnalyzeOutcome& out, json& list, const std::string& name,
                             bool held, const std::string& note = "") {
  json item{{"name", name}, {"held", held}};
  if (!note.empty()) item["note"] = note;
  list.push_back(item);
  if (!held && out.ok) {
    out.ok = false;
    out.first_failure = name;
  }
}

inline json partition_json(const Hypergraph& h, const PartialBipartition& part) {
  auto tokens = [&](const std::vector<int>& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(h.token(v));
    return a;
  };
  json p{{"V0", tokens(part.v0)}, {"V1", tokens(part.v1)}, {"V2", tokens(part.v2)}};
  if (part.balanced)
    p["balancedRatio"] = {part.balanced->first, part.balanced->second};
  else
    p["balancedRatio"] = nullptr;
  return p;
}

}  // namespace detail

// Full structural battery over one input. The outcome flag is the CLI exit
// status: every theorem-backed assertion must hold on the computed data.
inline AnalyzeOutcome run_analysis(const Hypergraph& h, const Tolerances& tol) {
  AnalyzeOutcome out;
  json& r = out.report;
  json assertions = json::array();

  r["input"] = {{"k", h.k()}, {"vertices", h.vertex_count()}, {"edges", h.edge_count()}};

  DegreeProfile deg = degrees(h);
  json per = json::object();
  for (int v = 0; v < h.vertex_count(); ++v) per[h.token(v)] = deg.per_vertex[v];
  r["degrees"] = {{"perVertex", per},
                  {"min", deg.min},
                  {"max", deg.max},
                  {"average", round_sig(deg.average())}};

  bool connected = is_connected(h);
  std::optional<int> diam = diameter(h);
  r["connectivity"] = {{"connected", connected},
                       {"diameter", diam ? json(*diam) : json(nullptr)}};

  SymmetricMatrix q = signless_laplacian(h);
  Spectrum spec = eigen_decompose(q, tol);
  r["spectrum"] = spectrum_json(spec);

  {
    DegreeProfile d2 = degrees(h);
    std::vector<double> sums = q.row_sums();
    bool held = true;
    for (int i = 0; i < h.vertex_count(); ++i)
      held = held && sums[i] == static_cast<double>(h.k()) * d2.per_vertex[i];
    detail::record_assertion(out, assertions, "row-sums", held);
  }
  detail::record_assertion(out, assertions, "line-degree-identity", line_degree_check(h));

  try {
    long long m_spec = spectral_edge_count(spec, h.k());
    r["edgeCountFromSpectrum"] = m_spec;
    detail::record_assertion(out, assertions, "edge-count-from-spectrum",
                             m_spec == h.edge_count());
  } catch (const error& e) {
    r["edgeCountFromSpectrum"] = nullptr;
    detail::record_assertion(out, assertions, "edge-count-from-spectrum", false, e.what());
  }

  const char* kSkip = "skipped: requires connectivity";
  if (connected) {
    try {
      DegreeSumBounds b = degree_sum_bounds(h, tol);
      r["bounds"] = {{"edgeDegreeSumMin", b.lower},
                     {"edgeDegreeSumMax", b.upper},
                     {"kTimesAverageDegree", round_sig(b.k_avg)},
                     {"kTimesMaxDegree", round_sig(b.k_max)},
                     {"rho", round_sig(b.rho)},
                     {"tauZero", round_sig(spec.tau_zero)}};
      detail::record_assertion(out, assertions, "degree-sum-bounds",
                               b.edge_sum_bounds_hold && b.k_degree_bounds_hold);
    } catch (const error& e) {
      r["bounds"] = nullptr;
      detail::record_assertion(out, assertions, "degree-sum-bounds", false, e.what());
    }

    try {
      RegularityReport reg = regularity_report(h, tol);
      r["regularity"] = {{"regular", reg.is_regular},
                         {"rhoEqualsKMaxDegree", reg.rho_equals_k_max},
                         {"rhoEqualsKAverageDegree", reg.rho_equals_k_avg},
                         {"principalUniform", reg.principal_uniform},
                         {"tauZero", round_sig(spec.tau_zero)}};
      detail::record_assertion(out, assertions, "regularity-equivalence", true);
    } catch (const error& e) {
      r["regularity"] = nullptr;
      detail::record_assertion(out, assertions, "regularity-equivalence", false, e.what());
    }

    try {
      DiameterSpectrumReport ds = distinct_eigenvalues_vs_diameter(h, tol);
      r["distinctVsDiameter"] = {{"distinct", ds.distinct},
                                 {"diameter", ds.diameter},
                                 {"tauGroup", round_sig(spec.tau_group)}};
      detail::record_assertion(out, assertions, "distinct-eigenvalues-vs-diameter", ds.holds);
    } catch (const error& e) {
      r["distinctVsDiameter"] = nullptr;
      detail::record_assertion(out, assertions, "distinct-eigenvalues-vs-diameter", false,
                               e.what());
    }

    try {
      long long bound = diameter_upper_bound(h, tol);
      r["diameterUpperBound"] = {{"bound", bound},
                                 {"diameter", diam ? json(*diam) : json(nullptr)},
                                 {"tauGroup", round_sig(spec.tau_group)}};
      detail::record_assertion(out, assertions, "diameter-upper-bound",
                               diam && *diam <= bound);
    } catch (const error& e) {
      // Degenerate top of spectrum or a single edge: the bound is undefined,
      // not violated.
      if (e.code() == errc::degenerate_spectrum || e.code() == errc::too_few_edges)
        r["diameterUpperBound"] = {{"bound", nullptr}, {"note", e.what()}};
      else
        detail::record_assertion(out, assertions, "diameter-upper-bound", false, e.what());
    }
  } else {
    r["bounds"] = kSkip;
    r["regularity"] = kSkip;
    r["distinctVsDiameter"] = kSkip;
    r["diameterUpperBound"] = kSkip;
  }

  {
    Coloring col = greedy_min_degree_coloring(h);
    json assignment = json::object();
    for (int v = 0; v < h.vertex_count(); ++v) assignment[h.token(v)] = col.assignment[v];
    json cj{{"colorsUsed", col.color_count}, {"assignment", assignment}};
    detail::record_assertion(out, assertions, "coloring-proper", coloring_is_proper(h, col));
    if (connected) {
      long long bound = chromatic_upper_bound(spec.rho(), h.k());
      cj["bound"] = bound;
      cj["tauGroup"] = round_sig(spec.tau_group);
      detail::record_assertion(out, assertions, "coloring-within-bound",
                               col.color_count <= bound);
    } else {
      cj["bound"] = kSkip;
    }
    r["coloring"] = cj;
  }

  {
    json zj{{"zeroMultiplicity", spec.zero_count()}, {"tauZero", round_sig(spec.tau_zero)}};
    if (spec.zero_count() > 0) {
      try {
        auto part = partial_bipartition_from_kernel(h, tol);
        if (part) {
          zj["partition"] = detail::partition_json(h, *part);
          detail::record_assertion(out, assertions, "zero-partition-valid", true);
        } else {
          zj["partition"] = nullptr;
          detail::record_assertion(out, assertions, "zero-partition-valid", false,
                                   "zero eigenvalue present but no partition extracted");
        }
      } catch (const error& e) {
        zj["partition"] = nullptr;
        detail::record_assertion(out, assertions, "zero-partition-valid", false, e.what());
      }
    } else {
      zj["partition"] = nullptr;
    }
    if (auto pattern = detect_easy_balanced_patterns(h)) {
      zj["balancedPattern"] = detail::partition_json(h, *pattern);
      bool held = false;
      std::string note;
      try {
        std::vector<double> x = balanced_bipartition_to_kernel(h, *pattern, tol);
        held = norm2(q.apply(x)) <= 1e-8 * q.frobenius_norm() * norm2(x);
      } catch (const error& e) {
        note = e.what();
      }
      detail::record_assertion(out, assertions, "balanced-pattern-kernel", held, note);
      if (held && spec.zero_count() == 0)
        detail::record_assertion(out, assertions, "balanced-pattern-zero-eigenvalue", false,
                                 "balanced pattern found but spectrum lacks 0");
    } else {
      zj["balancedPattern"] = nullptr;
    }
    r["zeroEigenvalue"] = zj;
  }

  r["assertions"] = assertions;
  r["allAssertionsHeld"] = out.ok;
  if (!out.ok) r["firstFailedAssertion"] = out.first_failure;
  return out;
}

inline json predicted_spectrum_json(const PredictedSpectrum& pred) {
  json values = json::array();
  json mults = json::array();
  for (const EigenGroup& g : pred.groups) {
    values.push_back(round_sig(g.value));
    mults.push_back(g.multiplicity);
  }
  return json{{"eigenvalues", values},
              {"multiplicities", mults},
              {"order", pred.total},
              {"trace", pred.exact_trace},
              {"tauZero", round_sig(pred.tau_zero)}};
}

inline json power_report(const Hypergraph& base, const PowerParams& p,
                         const PredictedSpectrum& pred,
                         const std::optional<std::string>& constructed_file,
                         std::optional<bool> verified) {
  json out;
  out["base"] = {{"k", base.k()}, {"vertices", base.vertex_count()},
                 {"edges", base.edge_count()}};
  out["params"] = {{"s", p.s}, {"r", p.r}};
  out["constructedFile"] = constructed_file ? json(*constructed_file) : json(nullptr);
  out["predictedSpectrum"] = predicted_spectrum_json(pred);
  out["verified"] = verified ? json(*verified) : json(nullptr);
  return out;
}

inline json verify_report(const VerifySummary& summary) {
  json suites = json::array();
  for (const SuiteResult& s : summary.suites) {
    json sj{{"name", s.name},
            {"trials", s.trials},
            {"passes", s.passes},
            {"failures", s.failures},
            {"skips", s.skips}};
    if (!s.notes.empty()) sj["notes"] = s.notes;
    if (s.counterexample) sj["counterexample"] = *s.counterexample;
    suites.push_back(sj);
  }
  return json{{"masterSeed", summary.master_seed},
              {"requestedTrials", summary.requested_trials},
              {"suites", suites},
              {"allPassed", summary.all_passed()}};
}

}  // namespace hyperq
