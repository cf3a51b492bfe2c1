// Acceptance suite: ten end-to-end checks, each with an enforced wall-clock
// budget.  Every comparison is exact; a criterion fails on any mismatch or on
// blowing its budget.  One line per criterion, nonzero exit on any failure.
//
// The checks deliberately re-derive their expected values from scratch
// (binomials from a local Pascal triangle, closed forms rebuilt term by term)
// instead of reusing the library's own formulas, so a bug in a formula cannot
// certify itself.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drba/algebra.hpp"
#include "drba/cases.hpp"
#include "drba/constraint.hpp"
#include "drba/divided_power.hpp"
#include "drba/free_rb.hpp"
#include "drba/hurwitz.hpp"
#include "drba/rational.hpp"
#include "drba/report.hpp"
#include "drba/sampling.hpp"
#include "drba/scalar_poly.hpp"
#include "drba/suites.hpp"

namespace {

using namespace drba;
using Clock = std::chrono::steady_clock;

struct Checker {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> notes;  // first few failure witnesses

  void require(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failed;
    if (notes.size() < 4) notes.push_back(what);
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = untimed
  std::function<void(Checker&)> run;
};

Scalar binom(std::size_t a, std::size_t b) {
  if (b > a) return Scalar(0);
  // small Pascal triangle; the suite never needs indices beyond ~20
  long long num = 1;
  for (std::size_t i = 0; i < b; ++i) num = num * static_cast<long long>(a - i) / static_cast<long long>(i + 1);
  return Scalar(static_cast<long>(num));
}

const std::vector<Scalar>& default_weights() {
  static const std::vector<Scalar> w = {Scalar(0), Scalar(1), Scalar(-2), Scalar(3, 5)};
  return w;
}

LinearOp<DPAlgebra> up() {
  return [](const DPElement& u) { return dp_P(u); };
}

LinearOp<DPAlgebra> down() {
  return [](const DPElement& u) { return dp_d(u); };
}

Constraint omega_const(long a0) { return {ScalarPoly::constant(Scalar(a0)), ScalarPoly()}; }
Constraint omega_yx(long b0 = 0) {
  return {ScalarPoly(), ScalarPoly({Scalar(b0), Scalar(1)})};
}

// ---- 1: the divided-power product against a from-scratch binomial sum -----
void crit_dp_oracle(Checker& ck) {
  for (const Scalar& l : default_weights()) {
    DPAlgebra A(std::nullopt, l);
    for (std::size_t m = 0; m <= 8; ++m) {
      for (std::size_t n = 0; n <= 8; ++n) {
        DPElement got = A.mul(A.basis(m), A.basis(n));
        DPElement want = A.zero();
        for (std::size_t j = 0; j <= std::min(m, n); ++j)
          want = A.add(want, A.scale(binom(m + n - j, n) * binom(n, j) * l.pow(static_cast<long>(j)),
                                     A.basis(m + n - j)));
        ck.require(got == want, "z_" + std::to_string(m) + " z_" + std::to_string(n) +
                                    " at weight " + l.str() + ": got " + got.str());
        if (l.is_zero())
          ck.require(got == A.scale(binom(m + n, n), A.basis(m + n)),
                     "weight-0 form for z_" + std::to_string(m) + " z_" + std::to_string(n));
      }
    }
  }
}

// ---- 2: ring laws of the series product and its shift derivation ----------
void crit_hurwitz_laws(Checker& ck) {
  Rng rng(20260818);
  for (const Scalar& l : default_weights()) {
    DPAlgebra A(4, l);
    for (std::size_t t = 0; t < 25; ++t) {  // 25 pairs x 4 weights = 100
      auto f = random_series(rng, A);
      auto g = random_series(rng, A);
      auto h = random_series(rng, A);
      auto fg = hmul_series(f, g);
      auto gf = hmul_series(g, f);
      auto fg_h = hmul_series(fg, h);
      auto f_gh = hmul_series(f, hmul_series(g, h));
      auto dfg = partial(fg);
      auto leibniz = hmul_series(partial(f), g)
                         .add(hmul_series(f, partial(g)))
                         .add(hmul_series(partial(f), partial(g)).scale(l));
      for (std::size_t n = 0; n <= 8; ++n) {
        ck.require(fg.component(n) == gf.component(n),
                   "commutativity, component " + std::to_string(n) + ", weight " + l.str());
        ck.require(fg_h.component(n) == f_gh.component(n),
                   "associativity, component " + std::to_string(n) + ", weight " + l.str());
        ck.require(dfg.component(n) == leibniz.component(n),
                   "shift Leibniz rule, component " + std::to_string(n) + ", weight " + l.str());
      }
    }
  }
}

// ---- 3: shuffle words of 1s multiply like divided powers; the prepend
//         operator satisfies the Rota-Baxter identity over both carriers ----
void crit_shuffle_cross(Checker& ck) {
  const std::vector<Scalar> weights = {Scalar(0), Scalar(1), Scalar(-2)};
  for (const Scalar& l : weights) {
    RationalAlgebra K{l};
    FreeRBAlgebra<RationalAlgebra> F(K);
    DPAlgebra A(std::nullopt, l);
    auto w = [&](std::size_t m) {
      return F.word(std::vector<Scalar>(m + 1, Scalar(1)));
    };
    for (std::size_t m = 0; m <= 5; ++m) {
      for (std::size_t n = 0; n <= 5; ++n) {
        auto got = F.mul(w(m), w(n));
        DPElement prod = A.mul(A.basis(m), A.basis(n));
        auto want = F.zero();
        for (std::size_t i = 0; i < prod.support_end(); ++i)
          if (!prod.coeff(i).is_zero()) want = F.add(want, F.scale(prod.coeff(i), w(i)));
        ck.require(F.equal(got, want), "shuffle of 1-words vs divided powers, (m,n)=(" +
                                           std::to_string(m) + "," + std::to_string(n) +
                                           "), weight " + l.str());
      }
    }
  }
  Rng rng(314159);
  for (const Scalar& l : weights) {
    {
      RationalAlgebra K{l};
      FreeRBAlgebra<RationalAlgebra> F(K);
      auto slot = [](Rng& r) { return Scalar(r.int_in(-3, 3)); };
      std::vector<std::pair<FreeRBAlgebra<RationalAlgebra>::Elem,
                            FreeRBAlgebra<RationalAlgebra>::Elem>> samples;
      for (std::size_t t = 0; t < 100; ++t)
        samples.emplace_back(random_free_elem(rng, F, slot), random_free_elem(rng, F, slot));
      auto rep = check_rb_axiom(F, [&F](const auto& u) { return free_P(F, u); }, l, samples);
      ck.require(rep.pass, "over the rationals, weight " + l.str() + ": " + rep.witness);
    }
    {
      DPAlgebra A3(3, l);
      FreeRBAlgebra<DPAlgebra> F(A3);
      std::vector<std::pair<FreeRBAlgebra<DPAlgebra>::Elem, FreeRBAlgebra<DPAlgebra>::Elem>>
          samples;
      for (std::size_t t = 0; t < 100; ++t)
        samples.emplace_back(random_free_dp_elem(rng, F, 2), random_free_dp_elem(rng, F, 2));
      auto rep = check_rb_axiom(F, [&F](const auto& u) { return free_P(F, u); }, l, samples);
      ck.require(rep.pass, "over truncated divided powers, weight " + l.str() + ": " + rep.witness);
    }
  }
}

// ---- 4: every counterexample probe hits its closed form, nonzero ----------
void crit_counterexamples(Checker& ck) {
  const std::vector<Scalar> grid = {Scalar(-2), Scalar(-1), Scalar(1), Scalar(2)};
  auto entries = run_counterexample_suite(Scalar(0), grid);
  std::set<std::string> probed;
  for (const auto& e : entries) {
    ck.require(e.match, e.case_id + " " + e.constraint + ": computed " + e.computed +
                            " expected " + e.expected);
    if (e.note.rfind("skipped:", 0) == 0) continue;
    probed.insert(e.case_id);
    ck.require(e.computed != "0",
               e.case_id + " " + e.constraint + ": defect vanished under the case hypotheses");
  }
  for (const char* id : {"C1", "C2-s0", "C2-s1", "C2-s2", "i", "ii", "iii", "iv", "v", "vi",
                         "vii", "viii"})
    ck.require(probed.count(id) > 0, std::string("no probe ran for case ") + id);
}

// ---- 5: the constant families, re-derived from raw probes -----------------
void crit_weight_forcing(Checker& ck) {
  const std::vector<Scalar> weights = {Scalar(1), Scalar(-2), Scalar(3, 5)};
  for (const Scalar& l : weights) {
    for (long a0 = -2; a0 <= 3; ++a0) {
      DPAlgebra A(1, l);
      CoverOperator<DPAlgebra> cov(A, omega_const(a0), up());
      auto e = Series<DPAlgebra>::identity(A);
      DPElement d = rb_defect(cov, e, e, 1);
      DPElement want = A.scale(l * Scalar(a0) * Scalar(a0 - 1), A.basis(0));
      ck.require(d == want, "constant constraint, a0=" + std::to_string(a0) + ", weight " +
                                l.str() + ": defect " + d.str());
      ck.require(d.is_zero() == (a0 == 0 || a0 == 1),
                 "constant constraint vanishing locus at a0=" + std::to_string(a0));
    }
    for (long b0 = -2; b0 <= 3; ++b0) {
      DPAlgebra A(2, l);
      CoverOperator<DPAlgebra> cov(A, omega_yx(b0), up());
      auto f = Series<DPAlgebra>::literal(A, {{1, A.basis(0)}});
      auto g = Series<DPAlgebra>::identity(A);
      DPElement d = rb_defect(cov, f, g, 1);
      DPElement want = A.scale(l * l * Scalar(b0), A.basis(1));
      ck.require(d == want, "shifted-linear constraint, b0=" + std::to_string(b0) + ", weight " +
                                l.str() + ": defect " + d.str());
      ck.require(d.is_zero() == (b0 == 0),
                 "shifted-linear constraint vanishing locus at b0=" + std::to_string(b0));
    }
  }
}

// ---- 6: the stable constraints keep covers Rota-Baxter on random sweeps ---
void crit_positive(Checker& ck) {
  PositiveOptions opt;
  opt.order = 8;
  opt.trials = 50;
  opt.seed = 20260818;
  auto sweep = [&](const Constraint& omega, const std::vector<Scalar>& weights) {
    opt.weights = weights;
    for (const auto& e : run_positive_suite(omega, opt)) {
      bool clean = e.match && e.computed.rfind("no violation", 0) == 0;
      ck.require(clean, e.constraint + " on " + e.case_id + " at weight " + e.weight + ": " +
                            e.computed);
    }
  };
  sweep(omega_const(0), default_weights());
  sweep(omega_const(1), default_weights());
  sweep(omega_yx(), default_weights());
  sweep(omega_const(-2), {Scalar(0)});
  sweep(omega_const(5), {Scalar(0)});
  sweep(omega_yx(-1), {Scalar(0)});
  sweep(omega_yx(2), {Scalar(0)});
}

// ---- 7: cover closed forms, component by component to depth 10 ------------
void crit_cover_forms(Checker& ck) {
  Rng rng(4242);
  for (const Scalar& l : default_weights()) {
    DPAlgebra A(std::nullopt, l);
    for (std::size_t t = 0; t < 5; ++t) {
      auto f = random_series(rng, A);
      for (long a0 : {-2L, 5L}) {
        CoverOperator<DPAlgebra> cov(A, omega_const(a0), up());
        auto Qf = cov.apply(f);
        ck.require(Qf.component(0) == dp_P(f.component(0)),
                   "constant constraint, component 0, weight " + l.str());
        for (std::size_t n = 1; n <= 10; ++n)
          ck.require(Qf.component(n) == A.scale(Scalar(a0), f.component(n - 1)),
                     "constant constraint a0=" + std::to_string(a0) + ", component " +
                         std::to_string(n) + ", weight " + l.str());
      }
      {
        CoverOperator<DPAlgebra> cov(A, omega_yx(), up());
        auto Qf = cov.apply(f);
        for (std::size_t n = 0; n <= 10; ++n)
          ck.require(Qf.component(n) == dp_P(f.component(n)),
                     "commutator constraint, component " + std::to_string(n) + ", weight " +
                         l.str());
      }
      {
        CoverOperator<DPAlgebra> cov(A, {ScalarPoly(), ScalarPoly()}, up());
        auto Qf = cov.apply(f);
        ck.require(Qf.component(0) == dp_P(f.component(0)),
                   "bare constraint, component 0, weight " + l.str());
        for (std::size_t n = 1; n <= 10; ++n)
          ck.require(Qf.component(n).is_zero(),
                     "bare constraint, component " + std::to_string(n) + ", weight " + l.str());
      }
    }
  }
}

// ---- 8: extensions of the down shift are weight-λ differentials -----------
void crit_extension(Checker& ck) {
  const std::vector<Scalar> weights = {Scalar(0), Scalar(1), Scalar(-2)};
  const std::vector<Constraint> omegas = {{ScalarPoly(), ScalarPoly()}, omega_const(1),
                                          omega_yx()};
  Rng rng(5150);
  for (const Constraint& omega : omegas) {
    for (const Scalar& l : weights) {
      DPAlgebra A(std::nullopt, l);
      FreeRBAlgebra<DPAlgebra> F(A);
      ExtensionOperator<DPAlgebra> ext(F, omega, down());
      auto max_len = [](const FreeRBAlgebra<DPAlgebra>::Elem& u) {
        std::size_t m = 0;
        for (const auto& [w, c] : u.terms()) m = std::max(m, w.size());
        return m;
      };
      std::vector<std::pair<FreeRBAlgebra<DPAlgebra>::Elem, FreeRBAlgebra<DPAlgebra>::Elem>>
          samples;
      for (std::size_t t = 0; t < 50; ++t) {
        auto u = random_free_dp_elem(rng, F, 3);
        auto v = random_free_dp_elem(rng, F, 3);
        // word lengths never grow: the extension respects the filtration by
        // tensor degree
        ck.require(max_len(ext.apply(u)) <= max_len(u),
                   omega.str() + " at weight " + l.str() + ": extension raised a word length");
        // on one-slot words the extension restricts to the base operator
        DPElement a = random_dp_element(rng, A, 5);
        ck.require(ext.apply(unit_embed(F, a)) == unit_embed(F, dp_d(a)),
                   omega.str() + " at weight " + l.str() +
                       ": extension disagrees with the base operator on " + a.str());
        samples.emplace_back(std::move(u), std::move(v));
      }
      auto rep = check_diff_axiom(
          F, [&ext](const auto& u) { return ext.apply(u); }, l, samples);
      ck.require(rep.pass, omega.str() + " at weight " + l.str() + ": " + rep.witness);
    }
  }
}

// ---- 9: monad, comonad, and fold compatibilities ---------------------------
void crit_structure_maps(Checker& ck) {
  auto entries = run_law_suite(20260818, 3);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    ck.require(e.match, e.case_id + " at weight " + e.weight + ": " + e.computed);
    ids.insert(e.case_id);
  }
  for (const char* id : {"monad-unit-outer", "monad-unit-inner", "monad-assoc", "comonad-counit",
                         "comonad-coassoc", "vartheta-operator-compat", "vartheta-multiplicative",
                         "theta-multiplicative"})
    ck.require(ids.count(id) > 0, std::string("law never ran: ") + id);
}

// ---- 10: the classifier predicts exactly what the probes and sweeps see ---
void crit_consistency(Checker& ck) {
  const std::vector<Scalar> grid = {Scalar(-2), Scalar(-1), Scalar(1), Scalar(2)};
  for (const Scalar& l : {Scalar(0), Scalar(1)}) {
    for (const auto& [omega, violated] : probe_outcomes(counterexample_case_ids(), l, grid)) {
      Verdict v = classify(omega);
      bool stable = l.is_zero() ? (v.in_omega0 || v.in_omegak) : v.in_omegak;
      ck.require(violated == !stable, omega.str() + " at weight " + l.str() + ": classifier says " +
                                          (stable ? "stable" : "unstable") + ", probe says " +
                                          (violated ? "violated" : "clean"));
      ck.require(applicable_case(omega, l).has_value() == violated,
                 omega.str() + " at weight " + l.str() + ": case dispatch disagrees with probe");
    }
  }
  PositiveOptions opt;
  opt.order = 5;
  opt.trials = 10;
  opt.seed = 424242;
  auto agree = [&](const Constraint& omega, const std::vector<Scalar>& weights) {
    opt.weights = weights;
    for (const auto& e : run_positive_suite(omega, opt)) {
      bool consistent = e.match && (e.note == "classification-consistent" ||
                                    e.note.rfind("no witness at this carrier", 0) == 0);
      ck.require(consistent,
                 e.constraint + " on " + e.case_id + " at weight " + e.weight + ": " + e.note);
    }
  };
  agree(omega_const(0), default_weights());
  agree(omega_const(1), default_weights());
  agree(omega_yx(), default_weights());
  agree(omega_const(-2), {Scalar(0), Scalar(1)});
  agree(omega_const(5), {Scalar(0), Scalar(1)});
  agree(omega_yx(-1), {Scalar(0), Scalar(-2)});
  agree(omega_yx(2), {Scalar(0), Scalar(-2)});
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "divided-power product oracle", 1.0, crit_dp_oracle},
      {2, "series ring laws and the shift Leibniz rule", 10.0, crit_hurwitz_laws},
      {3, "shuffle cross-check and Rota-Baxter axiom", 30.0, crit_shuffle_cross},
      {4, "counterexample probes match their closed forms", 60.0, crit_counterexamples},
      {5, "weight forcing on the constant families", 5.0, crit_weight_forcing},
      {6, "stable constraints keep covers Rota-Baxter", 120.0, crit_positive},
      {7, "cover closed forms to depth 10", 1.0, crit_cover_forms},
      {8, "extension differential axiom, filtration, restriction", 60.0, crit_extension},
      {9, "structure-map laws", 30.0, crit_structure_maps},
      {10, "classifier agrees with observed behavior", 0.0, crit_consistency},
  };

  std::cout << "acceptance suite: exact checks with enforced runtime budgets\n\n";
  std::size_t passed = 0;
  for (const auto& c : criteria) {
    Checker ck;
    auto t0 = Clock::now();
    c.run(ck);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_budget = c.budget_s == 0.0 || secs < c.budget_s;
    bool pass = ck.failed == 0 && in_budget;
    if (pass) ++passed;

    std::string budget =
        c.budget_s == 0.0 ? "" : ", budget " + std::to_string(static_cast<int>(c.budget_s)) + "s";
    char line[256];
    std::snprintf(line, sizeof(line), "[%s] criterion %2d: %-52s (%zu checks, %.2fs%s)",
                  pass ? "PASS" : "FAIL", c.id, c.name, ck.checks, secs, budget.c_str());
    std::cout << line << "\n";
    if (!in_budget) std::cout << "       over budget\n";
    for (const auto& n : ck.notes) std::cout << "       - " << n << "\n";
    if (ck.failed > ck.notes.size())
      std::cout << "       ... and " << (ck.failed - ck.notes.size()) << " more\n";
  }
  std::cout << "\n" << passed << "/" << criteria.size() << " criteria passed\n";
  return passed == criteria.size() ? 0 : 1;
}
