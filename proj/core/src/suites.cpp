#include "drba/suites.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <utility>

#include "drba/algebra.hpp"
#include "drba/cases.hpp"
#include "drba/divided_power.hpp"
#include "drba/free_rb.hpp"
#include "drba/hurwitz.hpp"
#include "drba/sampling.hpp"

namespace drba {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Keep witness strings readable in tables; exact values live in the library,
// not the report.
std::string clip(std::string s) {
  constexpr std::size_t kMax = 160;
  if (s.size() > kMax) {
    s.resize(kMax);
    s += " ...";
  }
  return s;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

LinearOp<DPAlgebra> shift_up() {
  return [](const DPElement& u) { return dp_P(u); };
}

LinearOp<DPAlgebra> shift_down() {
  return [](const DPElement& u) { return dp_d(u); };
}

// Scan for a Rota-Baxter violation of the cover on random series pairs.
std::optional<std::string> scan_cover(const Constraint& omega, const Scalar& lambda,
                                      const AlgebraChoice& carrier, const PositiveOptions& opt) {
  DPAlgebra A = carrier.kind == AlgebraChoice::Kind::Full
                    ? DPAlgebra(std::nullopt, lambda)
                    : DPAlgebra(carrier.modulus, lambda);
  CoverOperator<DPAlgebra> cover(A, omega, shift_up());
  Rng rng(opt.seed);
  for (std::size_t t = 1; t <= opt.trials; ++t) {
    auto f = random_series(rng, A);
    auto g = random_series(rng, A);
    DefectProbe<DPAlgebra> probe(cover, f, g);
    for (std::size_t n = 0; n <= opt.order; ++n) {
      DPElement d = probe.defect(n);
      if (!A.is_zero(d))
        return "pair " + std::to_string(t) + ", component " + std::to_string(n) +
               ": Rota-Baxter defect " + clip(A.str(d));
    }
  }
  return std::nullopt;
}

// Scan for a differential violation of the induced extension on random
// elements of the word algebra over ℨ(k).  The carrier must be the full
// divided-power algebra: the shift-down map is a weight-λ differential there,
// but on a truncation it is not (the truncation ideal is not closed under it),
// so a quotient base would produce defects even for constraints whose
// extensions are genuinely differentials.  The slot bound from the dp:<m>
// spelling caps which basis indices get sampled instead.
std::optional<std::string> scan_extension(const Constraint& omega, const Scalar& lambda,
                                          std::size_t modulus, const PositiveOptions& opt) {
  DPAlgebra A(std::nullopt, lambda);
  FreeRBAlgebra<DPAlgebra> F(A);
  ExtensionOperator<DPAlgebra> ext(F, omega, shift_down());
  Rng rng(opt.seed);
  const std::size_t max_slot = std::min<std::size_t>(modulus - 1, 3);
  for (std::size_t t = 1; t <= opt.trials; ++t) {
    auto u = random_free_dp_elem(rng, F, max_slot);
    auto v = random_free_dp_elem(rng, F, max_slot);
    auto qu = ext.apply(u);
    auto qv = ext.apply(v);
    auto rhs = F.add(F.add(F.mul(qu, v), F.mul(u, qv)), F.scale(lambda, F.mul(qu, qv)));
    auto defect = F.add(ext.apply(F.mul(u, v)), F.scale(Scalar(-1), rhs));
    if (!F.is_zero(defect))
      return "pair " + std::to_string(t) + ": differential defect " + clip(F.str(defect));
  }
  return std::nullopt;
}

ReportEntry sweep_one(const Constraint& omega, const Scalar& lambda,
                      const AlgebraChoice& carrier, const PositiveOptions& opt) {
  const auto t0 = Clock::now();
  const bool on_free = carrier.kind == AlgebraChoice::Kind::FreeOverQuotient;
  const auto family = applicable_case(omega, lambda);

  std::optional<std::string> violation = on_free
                                             ? scan_extension(omega, lambda, carrier.modulus, opt)
                                             : scan_cover(omega, lambda, carrier, opt);

  ReportEntry e;
  e.case_id = (on_free ? std::string("extension@") : std::string("cover@")) + carrier.str();
  e.constraint = omega.str();
  e.weight = lambda.str();
  e.seed = opt.seed;
  if (violation) {
    e.computed = "violation at " + *violation;
  } else {
    e.computed = "no violation in " + std::to_string(opt.trials) + " random pairs";
    if (!on_free) e.computed += " up to order " + std::to_string(opt.order);
  }
  if (family) {
    e.expected = "unstable (case " + *family + "): some carrier admits a violating pair";
  } else {
    e.expected = on_free
                     ? "stable: the extension is a differential of weight " + lambda.str()
                     : "stable: the cover is a Rota-Baxter operator of weight " + lambda.str();
  }
  // The classifier's "unstable" asserts a witness on SOME carrier, not on
  // every quotient — an obstruction can die in the truncation (e.g. a defect
  // supported on z̄₁ vanishes identically over ℨ(k)/I₁, where the cover is
  // genuinely Rota-Baxter).  So only a violation on a classified-stable
  // constraint is a hard disagreement; a clean sweep on a classified-unstable
  // one is carrier-limited, not contradictory.
  if (violation.has_value() && !family) {
    e.match = false;
    e.note = "disagreement between classifier and observed behavior";
  } else if (!violation.has_value() && family) {
    e.match = true;
    e.note = "no witness at this carrier; case " + *family + " certifies one on richer carriers";
  } else {
    e.match = true;
    e.note = "classification-consistent";
  }
  e.elapsed_ms = ms_since(t0);
  return e;
}

}  // namespace

AlgebraChoice AlgebraChoice::parse(const std::string& text) {
  auto fail = [&]() -> AlgebraChoice {
    throw std::invalid_argument("algebra must be dp:<m>, dp:inf, or free:dp:<m>; got '" + text +
                                "'");
  };
  std::string rest = text;
  AlgebraChoice out;
  if (rest.rfind("free:", 0) == 0) {
    out.kind = Kind::FreeOverQuotient;
    rest = rest.substr(5);
  }
  if (rest.rfind("dp:", 0) != 0) return fail();
  rest = rest.substr(3);
  if (rest == "inf") {
    if (out.kind == Kind::FreeOverQuotient) return fail();  // free words need a finite quotient
    out.kind = Kind::Full;
    return out;
  }
  if (!all_digits(rest)) return fail();
  out.modulus = std::stoul(rest);
  if (out.modulus == 0) return fail();
  return out;
}

std::string AlgebraChoice::str() const {
  switch (kind) {
    case Kind::Full:
      return "dp:inf";
    case Kind::FreeOverQuotient:
      return "free:dp:" + std::to_string(modulus);
    case Kind::Quotient:
    default:
      return "dp:" + std::to_string(modulus);
  }
}

std::vector<ReportEntry> run_positive_suite(const Constraint& omega, const PositiveOptions& opt) {
  if (opt.weights.empty())
    throw std::invalid_argument("stability sweep needs at least one weight");
  if (opt.trials == 0) throw std::invalid_argument("stability sweep needs at least one trial");

  std::vector<AlgebraChoice> carriers;
  if (opt.algebra) {
    carriers.push_back(*opt.algebra);
  } else {
    for (std::size_t m = 1; m <= 5; ++m)
      carriers.push_back(AlgebraChoice{AlgebraChoice::Kind::Quotient, m});
  }

  std::vector<ReportEntry> out;
  out.reserve(opt.weights.size() * carriers.size());
  for (const Scalar& lambda : opt.weights)
    for (const AlgebraChoice& carrier : carriers) out.push_back(sweep_one(omega, lambda, carrier, opt));
  sort_report(out);
  return out;
}

namespace {

// One law entry: ok/failed plus a sample count, at one weight.
ReportEntry law_entry(const std::string& id, const Scalar& lambda, std::uint64_t seed,
                      std::size_t samples, const std::optional<std::string>& failure,
                      Clock::time_point t0) {
  ReportEntry e;
  e.case_id = id;
  e.constraint = "";
  e.weight = lambda.str();
  e.seed = seed;
  e.expected = "identity holds on every sample";
  e.computed = failure ? "violated: " + clip(*failure)
                       : "holds for " + std::to_string(samples) + " samples";
  e.match = !failure.has_value();
  e.elapsed_ms = ms_since(t0);
  return e;
}

using FQ = FreeRBAlgebra<RationalAlgebra>;
using FFQ = FreeRBAlgebra<FQ>;
using FFFQ = FreeRBAlgebra<FFQ>;

}  // namespace

std::vector<ReportEntry> run_law_suite(std::uint64_t seed, std::size_t degree_cap) {
  if (degree_cap == 0) throw std::invalid_argument("degree cap must be at least 1");
  const std::vector<Scalar> weights = {Scalar(0), Scalar(1), Scalar(-2)};
  std::vector<ReportEntry> out;

  for (const Scalar& lambda : weights) {
    // --- comonad structure of the shift on series ------------------------
    {
      const auto t0 = Clock::now();
      DPAlgebra A(4, lambda);
      Rng rng(seed);
      std::optional<std::string> failure;
      const std::size_t samples = 20;
      for (std::size_t t = 0; t < samples && !failure; ++t) {
        auto f = random_series(rng, A);
        for (std::size_t n = 0; n <= degree_cap && !failure; ++n) {
          if (!A.equal(epsilon(f.shift(n)), f.component(n)))
            failure = "counit failed at component " + std::to_string(n);
          if (!A.equal(delta(f, 0, n), f.component(n)))
            failure = "trivial split failed at component " + std::to_string(n);
        }
      }
      out.push_back(law_entry("comonad-counit", lambda, seed, samples, failure, t0));
    }
    {
      const auto t0 = Clock::now();
      DPAlgebra A(4, lambda);
      Rng rng(seed);
      std::optional<std::string> failure;
      const std::size_t samples = 20;
      for (std::size_t t = 0; t < samples && !failure; ++t) {
        auto f = random_series(rng, A);
        for (std::size_t l = 0; l <= degree_cap && !failure; ++l)
          for (std::size_t m = 0; m <= degree_cap && !failure; ++m)
            for (std::size_t n = 0; n <= degree_cap && !failure; ++n) {
              auto nested = f.shift(l).shift(m).component(n);
              auto flat = delta(f, l + m, n);
              if (!A.equal(nested, flat))
                failure = "coassociativity failed at split (" + std::to_string(l) + ", " +
                          std::to_string(m) + ", " + std::to_string(n) + ")";
            }
      }
      out.push_back(law_entry("comonad-coassoc", lambda, seed, samples, failure, t0));
    }

    // --- monad structure of the word algebra -----------------------------
    {
      const auto t0 = Clock::now();
      DPAlgebra A(3, lambda);
      FreeRBAlgebra<DPAlgebra> F(A);
      FreeRBAlgebra<FreeRBAlgebra<DPAlgebra>> FF(F);
      Rng rng(seed);
      std::optional<std::string> failure;
      const std::size_t samples = 15;
      for (std::size_t t = 0; t < samples && !failure; ++t) {
        auto u = random_free_dp_elem(rng, F, 2, degree_cap + 1, degree_cap);
        if (!F.equal(monad_mu(F, FF.word({u})), u)) failure = "outer unit failed: " + F.str(u);
      }
      out.push_back(law_entry("monad-unit-outer", lambda, seed, samples, failure, t0));
    }
    {
      const auto t0 = Clock::now();
      DPAlgebra A(3, lambda);
      FreeRBAlgebra<DPAlgebra> F(A);
      FreeRBAlgebra<FreeRBAlgebra<DPAlgebra>> FF(F);
      Rng rng(seed);
      std::optional<std::string> failure;
      const std::size_t samples = 15;
      for (std::size_t t = 0; t < samples && !failure; ++t) {
        auto u = random_free_dp_elem(rng, F, 2, degree_cap + 1, degree_cap);
        auto lifted = map_slots(F, FF, u, [&](const DPElement& a) { return unit_embed(F, a); });
        if (!F.equal(monad_mu(F, lifted), u)) failure = "inner unit failed: " + F.str(u);
      }
      out.push_back(law_entry("monad-unit-inner", lambda, seed, samples, failure, t0));
    }
    {
      const auto t0 = Clock::now();
      RationalAlgebra k{lambda};
      FQ F(k);
      FFQ FF(F);
      FFFQ FFF(FF);
      Rng rng(seed);
      std::optional<std::string> failure;
      const std::size_t samples = 6;
      auto rand_f = [&](Rng& r) {
        return random_free_elem(r, F, [](Rng& rr) { return Scalar(rr.int_in(-3, 3)); }, 2, 2);
      };
      auto rand_ff = [&](Rng& r) {
        return random_free_elem(r, FF, rand_f, 2, 2);
      };
      for (std::size_t t = 0; t < samples && !failure; ++t) {
        auto w = random_free_elem(rng, FFF, rand_ff, 2, 2);
        auto collapse_outer_first = monad_mu(F, monad_mu(FF, w));
        auto mapped = map_slots(FFF, FF, w, [&](const FFQ::Elem& x) { return monad_mu(F, x); });
        auto collapse_inner_first = monad_mu(F, mapped);
        if (!F.equal(collapse_outer_first, collapse_inner_first))
          failure = "associativity failed on a depth-3 word";
      }
      out.push_back(law_entry("monad-assoc", lambda, seed, samples, failure, t0));
    }

    // --- the fold out of the word algebra --------------------------------
    {
      const auto t0 = Clock::now();
      DPAlgebra A(4, lambda);
      FreeRBAlgebra<DPAlgebra> F(A);
      LinearOp<DPAlgebra> P = shift_up();
      Rng rng(seed);
      std::optional<std::string> failure;
      const std::size_t samples = 15;
      for (std::size_t t = 0; t < samples && !failure; ++t) {
        auto u = random_free_dp_elem(rng, F, 3, degree_cap + 1, degree_cap);
        if (!A.equal(vartheta(A, P, free_P(F, u)), dp_P(vartheta(A, P, u))))
          failure = "fold does not intertwine the two operators on " + clip(F.str(u));
      }
      out.push_back(law_entry("vartheta-operator-compat", lambda, seed, samples, failure, t0));
    }
    {
      const auto t0 = Clock::now();
      DPAlgebra A(4, lambda);
      FreeRBAlgebra<DPAlgebra> F(A);
      LinearOp<DPAlgebra> P = shift_up();
      Rng rng(seed);
      std::optional<std::string> failure;
      const std::size_t samples = 15;
      for (std::size_t t = 0; t < samples && !failure; ++t) {
        auto u = random_free_dp_elem(rng, F, 3, degree_cap + 1, degree_cap);
        auto v = random_free_dp_elem(rng, F, 3, degree_cap + 1, degree_cap);
        if (!A.equal(vartheta(A, P, F.mul(u, v)), A.mul(vartheta(A, P, u), vartheta(A, P, v))))
          failure = "fold is not multiplicative on a sampled pair";
      }
      out.push_back(law_entry("vartheta-multiplicative", lambda, seed, samples, failure, t0));
    }

    // --- iterated-derivative series ---------------------------------------
    {
      const auto t0 = Clock::now();
      DPAlgebra A(std::nullopt, lambda);
      LinearOp<DPAlgebra> d = shift_down();
      Rng rng(seed);
      std::optional<std::string> failure;
      const std::size_t samples = 15;
      for (std::size_t t = 0; t < samples && !failure; ++t) {
        auto u = random_dp_element(rng, A, degree_cap + 2);
        auto v = random_dp_element(rng, A, degree_cap + 2);
        auto lhs = theta_series(A, d, A.mul(u, v));
        auto rhs = hmul_series(theta_series(A, d, u), theta_series(A, d, v));
        for (std::size_t n = 0; n <= degree_cap + 2 && !failure; ++n)
          if (!A.equal(lhs.component(n), rhs.component(n)))
            failure = "iterated-derivative series not multiplicative at component " +
                      std::to_string(n);
      }
      out.push_back(law_entry("theta-multiplicative", lambda, seed, samples, failure, t0));
    }
  }

  sort_report(out);
  return out;
}

}  // namespace drba
