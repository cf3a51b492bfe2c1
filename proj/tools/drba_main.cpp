// drba — exact verifier for Rota-Baxter covers and differential extensions
// induced by a constraint ω = xy − (φ(x) + y·ψ(x)).
//
//   classify   where a constraint sits relative to the stable families
//   repro      rerun the named counterexample probes against their closed forms
//   positive   random stability sweep for one constraint across carriers
//   laws       structure-map identities (monad, comonad, θ, ϑ)
//
// Every subcommand that emits a report exits nonzero iff some entry failed,
// so the binary doubles as a CI gate.  JSON output is byte-stable for a fixed
// seed apart from the elapsed_ms field.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drba/cases.hpp"
#include "drba/constraint.hpp"
#include "drba/rational.hpp"
#include "drba/report.hpp"
#include "drba/scalar_poly.hpp"
#include "drba/suites.hpp"

namespace {

using drba::Scalar;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_int(const std::string& tok) {
  std::string t = tok;
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  bool ok = !t.empty() && !(t.size() == 1 && t == "-");
  for (std::size_t i = ok ? (t[0] == '-' ? 1 : 0) : 0; ok && i < t.size(); ++i)
    ok = std::isdigit(static_cast<unsigned char>(t[i]));
  if (!ok) throw std::invalid_argument("expected an integer, got '" + tok + "'");
  return std::stol(t);
}

std::vector<Scalar> parse_grid(const std::string& text) {
  std::vector<Scalar> grid;
  for (const std::string& tok : split_csv(text)) grid.emplace_back(parse_int(tok));
  return grid;
}

std::vector<Scalar> parse_weights(const std::string& text) {
  std::vector<Scalar> weights;
  for (const std::string& tok : split_csv(text)) weights.push_back(Scalar::parse(tok));
  return weights;
}

// --cases accepts "all", individual ids, and the group spellings C2 / W.
std::vector<std::string> expand_cases(const std::string& text) {
  const std::vector<std::string>& all = drba::counterexample_case_ids();
  std::vector<std::string> picked;
  auto add = [&picked](const std::string& id) {
    if (std::find(picked.begin(), picked.end(), id) == picked.end()) picked.push_back(id);
  };
  for (const std::string& tok : split_csv(text)) {
    if (tok == "all") {
      for (const std::string& id : all) add(id);
    } else if (tok == "C2") {
      add("C2-s0");
      add("C2-s1");
      add("C2-s2");
    } else if (tok == "W") {
      add("W-a0");
      add("W-b0");
    } else if (std::find(all.begin(), all.end(), tok) != all.end()) {
      add(tok);
    } else {
      throw std::invalid_argument("unknown case id '" + tok +
                                  "' (use 'all', C1, C2, C2-s0..s2, W, W-a0, W-b0, or i..viii)");
    }
  }
  return picked;
}

drba::ReportFormat parse_format(const std::string& text) {
  return text == "json" ? drba::ReportFormat::Json : drba::ReportFormat::Text;
}

int finish(const std::vector<drba::ReportEntry>& entries, const std::string& format) {
  std::cout << drba::emit_report(entries, parse_format(format));
  return drba::report_exit_code(entries);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verifier for Rota-Baxter covers and differential extensions\n"
      "induced by a constraint xy - (phi(x) + y*psi(x))"};
  app.require_subcommand(1);
  int exit_code = 0;

  const std::string coeff_help = " coefficients: comma-separated rationals, lowest degree first";

  // ---- classify ------------------------------------------------------------
  auto* cls = app.add_subcommand("classify", "place a constraint relative to the stable families");
  std::string cls_phi = "0", cls_psi = "0";
  cls->add_option("--phi", cls_phi, "phi" + coeff_help)->capture_default_str();
  cls->add_option("--psi", cls_psi, "psi" + coeff_help)->capture_default_str();
  cls->callback([&] {
    drba::Constraint omega{drba::ScalarPoly::parse(cls_phi), drba::ScalarPoly::parse(cls_psi)};
    drba::Verdict v = drba::classify(omega);
    auto behavior = [&omega](const Scalar& lambda) {
      auto family = drba::applicable_case(omega, lambda);
      return family ? "unstable (case " + *family + ")"
                    : std::string("covers stay Rota-Baxter");
    };
    std::cout << "constraint:  " << omega.str() << "\n"
              << "normal form: " << v.str() << "\n"
              << "weight 0:    " << behavior(Scalar(0)) << "\n"
              << "weight != 0: " << behavior(Scalar(1)) << "\n";
  });

  // ---- repro ---------------------------------------------------------------
  auto* repro = app.add_subcommand("repro", "rerun counterexample probes against closed forms");
  std::string repro_cases = "all", repro_weight = "0", repro_grid = "-2,-1,1,2";
  std::string repro_format = "text";
  repro->add_option("--cases", repro_cases, "'all' or a comma-separated list; C2 and W name groups")
      ->capture_default_str();
  repro->add_option("--weight", repro_weight, "the weight lambda, as a rational")
      ->capture_default_str();
  repro->add_option("--grid", repro_grid, "integer coefficient grid (write --grid=-2,-1,1,2)")
      ->capture_default_str();
  repro->add_option("--format", repro_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  repro->callback([&] {
    auto entries = drba::run_counterexample_cases(expand_cases(repro_cases),
                                                  Scalar::parse(repro_weight),
                                                  parse_grid(repro_grid));
    exit_code = finish(entries, repro_format);
  });

  // ---- positive ------------------------------------------------------------
  auto* pos = app.add_subcommand("positive", "random stability sweep for one constraint");
  std::string pos_phi = "0", pos_psi = "0", pos_weights = "0,1,-2,3/5", pos_algebra;
  std::string pos_format = "text";
  drba::PositiveOptions pos_opt;
  pos->add_option("--phi", pos_phi, "phi" + coeff_help)->capture_default_str();
  pos->add_option("--psi", pos_psi, "psi" + coeff_help)->capture_default_str();
  pos->add_option("--weights", pos_weights, "weights to sweep, comma-separated rationals")
      ->capture_default_str();
  pos->add_option("--order", pos_opt.order, "check series components 0..N")->capture_default_str();
  pos->add_option("--trials", pos_opt.trials, "random pairs per carrier and weight")
      ->capture_default_str();
  pos->add_option("--seed", pos_opt.seed, "RNG seed (runs are deterministic)")
      ->capture_default_str();
  pos->add_option("--algebra", pos_algebra,
                  "dp:<m> (cover on series over Z(k)/I_m), dp:inf (over Z(k)), or "
                  "free:dp:<m> (extension on the word algebra; m caps sampled slots); "
                  "omitted: sweep dp:1..dp:5");
  pos->add_option("--format", pos_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  pos->callback([&] {
    drba::Constraint omega{drba::ScalarPoly::parse(pos_phi), drba::ScalarPoly::parse(pos_psi)};
    pos_opt.weights = parse_weights(pos_weights);
    if (!pos_algebra.empty()) pos_opt.algebra = drba::AlgebraChoice::parse(pos_algebra);
    exit_code = finish(drba::run_positive_suite(omega, pos_opt), pos_format);
  });

  // ---- laws ----------------------------------------------------------------
  auto* laws = app.add_subcommand("laws", "structure-map identities: monad, comonad, theta folds");
  std::uint64_t laws_seed = 1;
  std::size_t laws_cap = 3;
  std::string laws_format = "text";
  laws->add_option("--seed", laws_seed, "RNG seed (runs are deterministic)")->capture_default_str();
  laws->add_option("--degree-cap", laws_cap, "degree / component cap for the sampled identities")
      ->capture_default_str();
  laws->add_option("--format", laws_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  laws->callback([&] { exit_code = finish(drba::run_law_suite(laws_seed, laws_cap), laws_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
