#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drba/constraint.hpp"
#include "drba/rational.hpp"
#include "drba/report.hpp"

namespace drba {

// The named counterexample cases, in display (lexicographic) order:
//
//   C1, C2-s0, C2-s1, C2-s2      one of φ, ψ vanishes; probes at weight 0
//   W-a0, W-b0                   the weight-0 stable family, probed at λ ≠ 0
//   i … viii                     φ ≠ 0 and ψ ≠ 0, split by (deg φ, deg ψ)
//
// Each case carries a hand-checked probe: a quotient carrier ℨ(k)/I_m, a pair
// of series f, g, and a closed-form value for the Rota-Baxter defect of the
// cover at component 1.  A run evaluates the defect exactly and compares it
// against the closed form.
const std::vector<std::string>& counterexample_case_ids();

// Structural dispatch: the name of the counterexample family containing ω,
// independent of weight.  Members of {xy, xy−1, xy−yx} belong to no family
// (their covers are Rota-Baxter at every weight) and map to nullopt; the rest
// of the weight-0 stable family maps to W-a0 / W-b0 (unstable only at λ ≠ 0);
// everything else maps to the case whose hypotheses it satisfies, which is
// unique: for φ ≠ 0 ≠ ψ exactly one of i…viii applies.
std::optional<std::string> counterexample_family(const Constraint& omega);

// Which case certifies that the cover construction over ω breaks the
// Rota-Baxter identity at weight λ; nullopt when no violation exists (ω is
// stable at λ).  Cases C1/C2-*/i…viii carry weight-0 probes, W-* nonzero-
// weight probes, so exactly the applicable family is reported.
std::optional<std::string> applicable_case(const Constraint& omega, const Scalar& lambda);

// Run the probes for the named cases at weight λ.  Coefficients named in a
// case's closed form sweep the whole grid; auxiliary coefficients cycle
// grid[i mod grid.size()].  Cases whose probes live at a different weight
// produce a single skipped entry (match = true, note explains); so do grid
// values that violate a case hypothesis.  Entries come back sorted by case
// id and are byte-stable for fixed inputs apart from elapsed_ms.
std::vector<ReportEntry> run_counterexample_cases(const std::vector<std::string>& ids,
                                                  const Scalar& lambda,
                                                  const std::vector<Scalar>& grid);

// All fourteen cases at once.
std::vector<ReportEntry> run_counterexample_suite(const Scalar& lambda,
                                                  const std::vector<Scalar>& grid);

// Every constraint the named cases instantiate at this grid, paired with
// whether its probe's defect is nonzero.  This is the raw material for
// checking the classifier against observed behavior: each instantiated ω
// should be predicted unstable exactly when its probe finds a violation.
// Skipped cases contribute nothing.
std::vector<std::pair<Constraint, bool>> probe_outcomes(const std::vector<std::string>& ids,
                                                        const Scalar& lambda,
                                                        const std::vector<Scalar>& grid);

}  // namespace drba
