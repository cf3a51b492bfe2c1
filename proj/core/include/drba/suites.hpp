#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drba/constraint.hpp"
#include "drba/rational.hpp"
#include "drba/report.hpp"

namespace drba {

// Carrier selector for stability sweeps, parsed from the CLI spelling:
//
//   dp:<m>       the quotient ℨ(k)/I_m, m ≥ 1        (covers on series)
//   dp:inf       the full divided-power algebra ℨ(k)  (covers on series)
//   free:dp:<m>  the word algebra ℨ(ℨ(k)) with the shift derivation as base
//                operator (the induced extension, checked as a differential);
//                m only bounds which basis slots z_0..z_{m-1} get sampled.
//                The base stays untruncated because the shift-down map is a
//                differential of ℨ(k) but of no proper truncation.
struct AlgebraChoice {
  enum class Kind { Quotient, Full, FreeOverQuotient };

  Kind kind = Kind::Quotient;
  std::size_t modulus = 4;  // ignored for Full

  // Throws std::invalid_argument on anything unparseable (including dp:0).
  static AlgebraChoice parse(const std::string& text);
  std::string str() const;
};

struct PositiveOptions {
  std::vector<Scalar> weights;           // λ values to sweep; must be nonempty
  std::size_t order = 8;                 // series defect components checked: 0..order
  std::size_t trials = 50;               // random pairs per weight and carrier
  std::uint64_t seed = 1;
  std::optional<AlgebraChoice> algebra;  // nullopt → sweep dp:1 … dp:5
};

// Stability sweep for one constraint.  Per weight and carrier the sweep draws
// random pairs and scans for a violation: on series carriers the Rota-Baxter
// defect of the cover, on free carriers the differential defect of the
// extension.  The expectation comes from the classifier, so an entry matches
// when observed behavior agrees with the predicted verdict — for a
// predicted-unstable constraint, *finding* a violation is the match.
std::vector<ReportEntry> run_positive_suite(const Constraint& omega, const PositiveOptions& opt);

// Structural laws of the tool chest, each verified on seeded random samples
// at weights 0, 1 and -2:
//
//   monad-unit-inner / -outer / -assoc   collapse of nested word algebras
//   comonad-counit / -coassoc            the shift coalgebra on series
//   vartheta-operator-compat / -multiplicative
//                                        the fold out of the word algebra
//   theta-multiplicative                 iterated-derivative series
//
// degree_cap bounds the sizes of the sampled elements and the component
// window on series.
std::vector<ReportEntry> run_law_suite(std::uint64_t seed, std::size_t degree_cap);

}  // namespace drba
