#include "drba/cases.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>
#include <stdexcept>
#include <utility>

#include "drba/divided_power.hpp"
#include "drba/hurwitz.hpp"

namespace drba {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// A probe series is either the identity (1, 0, 0, …) or a one-term literal
// δ_M · z̄_u.  Every counterexample in the table is witnessed by such a pair.
struct SeriesSpec {
  bool identity = false;
  std::size_t M = 0;
  std::size_t u = 0;
};

constexpr SeriesSpec kIdentity{true, 0, 0};

SeriesSpec delta(std::size_t M, std::size_t u = 0) { return {false, M, u}; }

// One fully instantiated probe.  The reported value is sign · defect(1) and
// must equal coeff · z̄_index in ℨ(k)/I_modulus.
struct Probe {
  std::string id;
  Constraint omega;
  Scalar lambda;
  std::size_t modulus = 1;
  SeriesSpec f, g;
  int sign = -1;
  Scalar coeff;
  std::size_t index = 0;
  std::string note;
};

// Instantiating a case yields runnable probes plus ready-made entries for
// grid values that violate a hypothesis.
struct Plan {
  std::vector<Probe> probes;
  std::vector<ReportEntry> skips;
};

Series<DPAlgebra> realize(const DPAlgebra& A, const SeriesSpec& s) {
  if (s.identity) return Series<DPAlgebra>::identity(A);
  return Series<DPAlgebra>::literal(A, {{s.M, A.basis(s.u)}});
}

DPElement probe_defect(const Probe& p) {
  DPAlgebra A(p.modulus, p.lambda);
  CoverOperator<DPAlgebra> cover(A, p.omega, [](const DPElement& u) { return dp_P(u); });
  return rb_defect(cover, realize(A, p.f), realize(A, p.g), 1);
}

ReportEntry run_probe(const Probe& p) {
  const auto t0 = Clock::now();
  DPAlgebra A(p.modulus, p.lambda);
  DPElement defect = probe_defect(p);
  DPElement computed = p.sign < 0 ? A.scale(Scalar(-1), defect) : defect;
  DPElement expected = A.scale(p.coeff, A.basis(p.index));

  ReportEntry e;
  e.case_id = p.id;
  e.constraint = p.omega.str();
  e.weight = p.lambda.str();
  e.computed = computed.str();
  e.expected = expected.str();
  e.match = (computed == expected);
  e.elapsed_ms = ms_since(t0);
  e.note = p.note;
  return e;
}

ReportEntry skipped(const std::string& id, const Scalar& lambda, std::string why) {
  ReportEntry e;
  e.case_id = id;
  e.weight = lambda.str();
  e.match = true;
  e.note = "skipped: " + std::move(why);
  return e;
}

const Scalar& cycled(const std::vector<Scalar>& grid, std::size_t i) {
  return grid[i % grid.size()];
}

// Polynomial of degree exactly `deg` with the given leading coefficient;
// lower coefficients cycle the grid.  The caller guarantees lead ≠ 0.
ScalarPoly aux_poly(std::size_t deg, const Scalar& lead, const std::vector<Scalar>& grid) {
  std::vector<Scalar> c(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) c[i] = cycled(grid, i);
  c[deg] = lead;
  return ScalarPoly(std::move(c));
}

void zero_grid_skip(Plan& plan, const std::string& id, const Scalar& lambda, const char* which) {
  plan.skips.push_back(skipped(
      id, lambda,
      std::string("grid value 0 violates the case hypothesis (") + which + " must be nonzero)"));
}

// --- the fourteen cases ---------------------------------------------------
//
// All weight-0 probes evaluate the defect at component 1.  The closed forms
// below were derived by hand from the cover recursion and are locked in by
// the test suite; `sign` says whether the table lists -defect(1) (the usual
// orientation) or +defect(1).

// ψ = 0, deg φ = r ≥ 1: the cover of P̄ on ℨ(k)/I₂ fails on f = δ_{2r-1}·z̄₀
// against the identity, with -defect(1) = a_r² z̄₀ (lower coefficients of φ
// never reach the probe).
void plan_C1(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  for (std::size_t r : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
    for (const Scalar& ar : grid) {
      if (ar.is_zero()) {
        zero_grid_skip(plan, "C1", lambda, "leading coefficient of phi");
        continue;
      }
      Probe p;
      p.id = "C1";
      p.omega = {aux_poly(r, ar, grid), ScalarPoly{}};
      p.lambda = lambda;
      p.modulus = 2;
      p.f = delta(2 * r - 1);
      p.g = kIdentity;
      p.coeff = ar * ar;
      p.index = 0;
      plan.probes.push_back(std::move(p));
    }
  }
}

// φ = 0, ψ = b₀ ≠ 0: identity against identity on ℨ(k)/I₃ already fails,
// +defect(1) = 2 b₀ z̄₂.
void plan_C2s0(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  for (const Scalar& b0 : grid) {
    if (b0.is_zero()) {
      zero_grid_skip(plan, "C2-s0", lambda, "constant term of psi");
      continue;
    }
    Probe p;
    p.id = "C2-s0";
    p.omega = {ScalarPoly{}, ScalarPoly({b0})};
    p.lambda = lambda;
    p.modulus = 3;
    p.f = kIdentity;
    p.g = kIdentity;
    p.sign = +1;
    p.coeff = Scalar(2) * b0;
    p.index = 2;
    plan.probes.push_back(std::move(p));
  }
}

// φ = 0, ψ = b₀ + b₁x with b₁ ∉ {0, 1}: f = δ₁·z̄₀ on ℨ(k)/I₃ gives
// -defect(1) = b₁(b₁ - 1) z̄₂.  b₁ = 1 is the weight-0 stable family.
void plan_C2s1(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  for (const Scalar& b1 : grid) {
    if (b1.is_zero()) {
      zero_grid_skip(plan, "C2-s1", lambda, "linear coefficient of psi");
      continue;
    }
    if (b1.is_one()) {
      plan.skips.push_back(skipped("C2-s1", lambda,
                                   "psi = b0 + x with phi = 0 keeps the cover Rota-Baxter "
                                   "at weight 0; no counterexample exists"));
      continue;
    }
    Probe p;
    p.id = "C2-s1";
    p.omega = {ScalarPoly{}, aux_poly(1, b1, grid)};
    p.lambda = lambda;
    p.modulus = 3;
    p.f = delta(1);
    p.g = kIdentity;
    p.coeff = b1 * (b1 - Scalar(1));
    p.index = 2;
    plan.probes.push_back(std::move(p));
  }
}

// φ = 0, deg ψ = s ≥ 2: f = δ_{s²}·z̄₀ on ℨ(k)/I₃ gives
// -defect(1) = b_s^{s+1} z̄₂.
void plan_C2s2(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  for (std::size_t s : {std::size_t{2}, std::size_t{3}}) {
    for (const Scalar& bs : grid) {
      if (bs.is_zero()) {
        zero_grid_skip(plan, "C2-s2", lambda, "leading coefficient of psi");
        continue;
      }
      Probe p;
      p.id = "C2-s2";
      p.omega = {ScalarPoly{}, aux_poly(s, bs, grid)};
      p.lambda = lambda;
      p.modulus = 3;
      p.f = delta(s * s);
      p.g = kIdentity;
      p.coeff = bs.pow(static_cast<long>(s) + 1);
      p.index = 2;
      plan.probes.push_back(std::move(p));
    }
  }
}

// deg φ = r > deg ψ = s > 1: f = δ_{r+(r-1)s}·z̄₀ on ℨ(k)/I₁ gives
// -defect(1) = a_r² b_s^{r-1} z̄₀.
void plan_i(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  const std::size_t r = 3, s = 2;
  for (const Scalar& ar : grid) {
    if (ar.is_zero()) {
      zero_grid_skip(plan, "i", lambda, "leading coefficient of phi");
      continue;
    }
    for (const Scalar& bs : grid) {
      if (bs.is_zero()) {
        zero_grid_skip(plan, "i", lambda, "leading coefficient of psi");
        continue;
      }
      Probe p;
      p.id = "i";
      p.omega = {aux_poly(r, ar, grid), aux_poly(s, bs, grid)};
      p.lambda = lambda;
      p.modulus = 1;
      p.f = delta(r + (r - 1) * s);
      p.g = kIdentity;
      p.coeff = ar * ar * bs.pow(static_cast<long>(r) - 1);
      p.index = 0;
      plan.probes.push_back(std::move(p));
    }
  }
}

// deg φ = deg ψ = s > 1: f = δ_{s²}·z̄₁ on ℨ(k)/I₂ gives
// -defect(1) = a_s² b_s^{s-1} z̄₁.
void plan_ii(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  for (std::size_t s : {std::size_t{2}, std::size_t{3}}) {
    for (const Scalar& as : grid) {
      if (as.is_zero()) {
        zero_grid_skip(plan, "ii", lambda, "leading coefficient of phi");
        continue;
      }
      for (const Scalar& bs : grid) {
        if (bs.is_zero()) {
          zero_grid_skip(plan, "ii", lambda, "leading coefficient of psi");
          continue;
        }
        Probe p;
        p.id = "ii";
        p.omega = {aux_poly(s, as, grid), aux_poly(s, bs, grid)};
        p.lambda = lambda;
        p.modulus = 2;
        p.f = delta(s * s, 1);
        p.g = kIdentity;
        p.coeff = as * as * bs.pow(static_cast<long>(s) - 1);
        p.index = 1;
        plan.probes.push_back(std::move(p));
      }
    }
  }
}

// deg φ = r < deg ψ = s with s > 1: the ψ-side dominates; f = δ_{s²}·z̄₀
// on ℨ(k)/I₃ gives -defect(1) = b_s^{s+1} z̄₂ (independent of φ).
void plan_iii(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  const std::size_t r = 2, s = 3;
  const Scalar& ar = cycled(grid, r);
  if (ar.is_zero()) {
    zero_grid_skip(plan, "iii", lambda, "cycled leading coefficient of phi");
    return;
  }
  for (const Scalar& bs : grid) {
    if (bs.is_zero()) {
      zero_grid_skip(plan, "iii", lambda, "leading coefficient of psi");
      continue;
    }
    Probe p;
    p.id = "iii";
    p.omega = {aux_poly(r, ar, grid), aux_poly(s, bs, grid)};
    p.lambda = lambda;
    p.modulus = 3;
    p.f = delta(s * s);
    p.g = kIdentity;
    p.coeff = bs.pow(static_cast<long>(s) + 1);
    p.index = 2;
    plan.probes.push_back(std::move(p));
  }
}

// deg φ = r > 1, ψ = b₀ + b₁x: on ℨ(k)/I₁ the defect depends on the
// geometric sum Σ_{k<r} b₁^k.  When it is nonzero, f = δ_{2r-1}·z̄₀ against
// the identity gives -defect(1) = a_r² (Σ_{k<r} b₁^k) z̄₀; when it vanishes
// (b₁ = -1 with r even, over ℚ) shift the probe to f = δ_{2(r-1)}·z̄₀
// against g = δ₁·z̄₀, which gives -defect(1) = -r a_r² b₁^{r-1} z̄₀.
void plan_iv(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  for (std::size_t r : {std::size_t{2}, std::size_t{3}}) {
    for (const Scalar& ar : grid) {
      if (ar.is_zero()) {
        zero_grid_skip(plan, "iv", lambda, "leading coefficient of phi");
        continue;
      }
      for (const Scalar& b1 : grid) {
        if (b1.is_zero()) {
          zero_grid_skip(plan, "iv", lambda, "linear coefficient of psi");
          continue;
        }
        Scalar geo(0), pw(1);
        for (std::size_t k = 0; k < r; ++k) {
          geo += pw;
          pw *= b1;
        }
        Probe p;
        p.id = "iv";
        p.omega = {aux_poly(r, ar, grid), aux_poly(1, b1, grid)};
        p.lambda = lambda;
        p.modulus = 1;
        p.index = 0;
        if (!geo.is_zero()) {
          p.f = delta(2 * r - 1);
          p.g = kIdentity;
          p.coeff = ar * ar * geo;
          p.note = "geometric sum of b1 powers is nonzero";
        } else {
          p.f = delta(2 * (r - 1));
          p.g = delta(1);
          p.coeff = Scalar(-static_cast<long>(r)) * ar * ar * b1.pow(static_cast<long>(r) - 1);
          p.note = "geometric sum of b1 powers vanishes; shifted probe";
        }
        plan.probes.push_back(std::move(p));
      }
    }
  }
}

// deg φ = 1, ψ = b₀ + b₁x with b₁ ≠ 0: f = δ₁·z̄₀ on ℨ(k)/I₁ gives
// -defect(1) = a₁² z̄₀ (ψ never reaches the probe).
void plan_v(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  const Scalar& b1 = cycled(grid, 1);
  if (b1.is_zero()) {
    zero_grid_skip(plan, "v", lambda, "cycled linear coefficient of psi");
    return;
  }
  for (const Scalar& a1 : grid) {
    if (a1.is_zero()) {
      zero_grid_skip(plan, "v", lambda, "leading coefficient of phi");
      continue;
    }
    Probe p;
    p.id = "v";
    p.omega = {aux_poly(1, a1, grid), aux_poly(1, b1, grid)};
    p.lambda = lambda;
    p.modulus = 1;
    p.f = delta(1);
    p.g = kIdentity;
    p.coeff = a1 * a1;
    p.index = 0;
    plan.probes.push_back(std::move(p));
  }
}

// φ = a₀ ≠ 0, ψ = b₀ + b₁x with b₁ ≠ 0, on ℨ(k)/I₃.  For b₁ ≠ 1 the linear
// probe f = δ₁·z̄₀ gives -defect(1) = b₁(b₁ - 1) z̄₂; at b₁ = 1 that probe
// degenerates and the identity pair catches the constant instead:
// -defect(1) = 2 a₀ z̄₁.
void plan_vi(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  for (const Scalar& a0 : grid) {
    if (a0.is_zero()) {
      zero_grid_skip(plan, "vi", lambda, "constant term of phi");
      continue;
    }
    for (const Scalar& b1 : grid) {
      if (b1.is_zero()) {
        zero_grid_skip(plan, "vi", lambda, "linear coefficient of psi");
        continue;
      }
      Probe p;
      p.id = "vi";
      p.omega = {ScalarPoly({a0}), aux_poly(1, b1, grid)};
      p.lambda = lambda;
      p.modulus = 3;
      if (!b1.is_one()) {
        p.f = delta(1);
        p.g = kIdentity;
        p.coeff = b1 * (b1 - Scalar(1));
        p.index = 2;
        p.note = "b1 != 1: linear probe";
      } else {
        p.f = kIdentity;
        p.g = kIdentity;
        p.coeff = Scalar(2) * a0;
        p.index = 1;
        p.note = "b1 = 1: identity pair sees the constant term";
      }
      plan.probes.push_back(std::move(p));
    }
  }
}

// deg φ = r ≥ 1, ψ = b₀ ≠ 0: same probe as C1 but on ℨ(k)/I₁, where the
// base operator vanishes; -defect(1) = a_r² z̄₀ (independent of b₀).
void plan_vii(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  const Scalar& b0 = cycled(grid, 0);
  if (b0.is_zero()) {
    zero_grid_skip(plan, "vii", lambda, "cycled constant term of psi");
    return;
  }
  for (std::size_t r : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
    for (const Scalar& ar : grid) {
      if (ar.is_zero()) {
        zero_grid_skip(plan, "vii", lambda, "leading coefficient of phi");
        continue;
      }
      Probe p;
      p.id = "vii";
      p.omega = {aux_poly(r, ar, grid), ScalarPoly({b0})};
      p.lambda = lambda;
      p.modulus = 1;
      p.f = delta(2 * r - 1);
      p.g = kIdentity;
      p.coeff = ar * ar;
      p.index = 0;
      plan.probes.push_back(std::move(p));
    }
  }
}

// φ = a₀ ≠ 0, ψ = b₀ ≠ 0: the identity pair on ℨ(k)/I₃ gives
// -defect(1) = -2 b₀ z̄₂ (independent of a₀).
void plan_viii(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  const Scalar& a0 = cycled(grid, 0);
  if (a0.is_zero()) {
    zero_grid_skip(plan, "viii", lambda, "cycled constant term of phi");
    return;
  }
  for (const Scalar& b0 : grid) {
    if (b0.is_zero()) {
      zero_grid_skip(plan, "viii", lambda, "constant term of psi");
      continue;
    }
    Probe p;
    p.id = "viii";
    p.omega = {ScalarPoly({a0}), ScalarPoly({b0})};
    p.lambda = lambda;
    p.modulus = 3;
    p.f = kIdentity;
    p.g = kIdentity;
    p.coeff = Scalar(-2) * b0;
    p.index = 2;
    plan.probes.push_back(std::move(p));
  }
}

// ω = xy - a₀ at λ ≠ 0: the identity pair on ℨ(k)/I₁ gives
// +defect(1) = λ a₀ (a₀ - 1) z̄₀, vanishing exactly at a₀ ∈ {0, 1} — the two
// members that stay Rota-Baxter at every weight.  The sweep therefore adds
// 0 and 1 to the grid so the vanishing locus is part of the record.
void plan_Wa0(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  std::set<Scalar> values(grid.begin(), grid.end());
  values.insert(Scalar(0));
  values.insert(Scalar(1));
  for (const Scalar& a0 : values) {
    Probe p;
    p.id = "W-a0";
    p.omega = {ScalarPoly({a0}), ScalarPoly{}};
    p.lambda = lambda;
    p.modulus = 1;
    p.f = kIdentity;
    p.g = kIdentity;
    p.sign = +1;
    p.coeff = lambda * a0 * (a0 - Scalar(1));
    p.index = 0;
    if (p.coeff.is_zero()) p.note = "stable member of the family: defect vanishes";
    plan.probes.push_back(std::move(p));
  }
}

// ω = xy - (b₀y + yx) at λ ≠ 0: f = δ₁·z̄₀ against the identity on ℨ(k)/I₂
// gives +defect(1) = λ² b₀ z̄₁, vanishing exactly at b₀ = 0 (ω = xy - yx).
void plan_Wb0(Plan& plan, const Scalar& lambda, const std::vector<Scalar>& grid) {
  std::set<Scalar> values(grid.begin(), grid.end());
  values.insert(Scalar(0));
  for (const Scalar& b0 : values) {
    Probe p;
    p.id = "W-b0";
    p.omega = {ScalarPoly{}, ScalarPoly({b0, Scalar(1)})};
    p.lambda = lambda;
    p.modulus = 2;
    p.f = delta(1);
    p.g = kIdentity;
    p.sign = +1;
    p.coeff = lambda * lambda * b0;
    p.index = 1;
    if (p.coeff.is_zero()) p.note = "stable member of the family: defect vanishes";
    plan.probes.push_back(std::move(p));
  }
}

using Planner = void (*)(Plan&, const Scalar&, const std::vector<Scalar>&);

struct CaseDef {
  const char* id;
  bool weight_zero_probe;  // probes frozen at λ = 0 vs. needing λ ≠ 0
  Planner plan;
};

constexpr auto kCases = std::to_array<CaseDef>({
    {"C1", true, plan_C1},
    {"C2-s0", true, plan_C2s0},
    {"C2-s1", true, plan_C2s1},
    {"C2-s2", true, plan_C2s2},
    {"W-a0", false, plan_Wa0},
    {"W-b0", false, plan_Wb0},
    {"i", true, plan_i},
    {"ii", true, plan_ii},
    {"iii", true, plan_iii},
    {"iv", true, plan_iv},
    {"v", true, plan_v},
    {"vi", true, plan_vi},
    {"vii", true, plan_vii},
    {"viii", true, plan_viii},
});

const CaseDef* find_case(const std::string& id) {
  for (const auto& c : kCases)
    if (id == c.id) return &c;
  return nullptr;
}

// Plans for the requested ids at weight λ; cases whose probes live at the
// other kind of weight contribute one skip entry instead.
Plan plan_cases(const std::vector<std::string>& ids, const Scalar& lambda,
                const std::vector<Scalar>& grid) {
  if (grid.empty()) throw std::invalid_argument("counterexample grid must be nonempty");
  Plan plan;
  for (const auto& id : ids) {
    const CaseDef* def = find_case(id);
    if (!def) throw std::invalid_argument("unknown counterexample case id: " + id);
    if (def->weight_zero_probe && !lambda.is_zero()) {
      plan.skips.push_back(skipped(id, lambda,
                                   "probe is frozen at weight 0; rerun with weight 0 to "
                                   "evaluate this case"));
      continue;
    }
    if (!def->weight_zero_probe && lambda.is_zero()) {
      plan.skips.push_back(skipped(id, lambda,
                                   "this family keeps covers Rota-Baxter at weight 0; a "
                                   "nonzero weight is required to see a violation"));
      continue;
    }
    def->plan(plan, lambda, grid);
  }
  return plan;
}

}  // namespace

const std::vector<std::string>& counterexample_case_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& c : kCases) v.emplace_back(c.id);
    return v;
  }();
  return ids;
}

std::optional<std::string> counterexample_family(const Constraint& omega) {
  const Verdict v = classify(omega);
  if (v.in_omegak) return std::nullopt;
  if (v.in_omega0)
    return v.normal_form == Verdict::Form::XY_MINUS_CONST ? std::string("W-a0")
                                                          : std::string("W-b0");
  const auto r = omega.phi.degree();
  const auto s = omega.psi.degree();
  if (!s) return std::string("C1");  // ψ = 0 and ω unstable ⟹ deg φ ≥ 1
  if (!r) {                          // φ = 0; ψ = b₀ + x was handled above
    if (*s == 0) return std::string("C2-s0");
    if (*s == 1) return std::string("C2-s1");
    return std::string("C2-s2");
  }
  if (*s > 1) {
    if (*r > *s) return std::string("i");
    if (*r == *s) return std::string("ii");
    return std::string("iii");
  }
  if (*s == 1) {
    if (*r > 1) return std::string("iv");
    if (*r == 1) return std::string("v");
    return std::string("vi");
  }
  return *r >= 1 ? std::string("vii") : std::string("viii");
}

std::optional<std::string> applicable_case(const Constraint& omega, const Scalar& lambda) {
  const Verdict v = classify(omega);
  if (v.in_omegak) return std::nullopt;
  if (v.in_omega0 && lambda.is_zero()) return std::nullopt;
  return counterexample_family(omega);
}

std::vector<ReportEntry> run_counterexample_cases(const std::vector<std::string>& ids,
                                                  const Scalar& lambda,
                                                  const std::vector<Scalar>& grid) {
  Plan plan = plan_cases(ids, lambda, grid);
  std::vector<ReportEntry> out = std::move(plan.skips);
  out.reserve(out.size() + plan.probes.size());
  for (const Probe& p : plan.probes) out.push_back(run_probe(p));
  sort_report(out);
  return out;
}

std::vector<ReportEntry> run_counterexample_suite(const Scalar& lambda,
                                                  const std::vector<Scalar>& grid) {
  return run_counterexample_cases(counterexample_case_ids(), lambda, grid);
}

std::vector<std::pair<Constraint, bool>> probe_outcomes(const std::vector<std::string>& ids,
                                                        const Scalar& lambda,
                                                        const std::vector<Scalar>& grid) {
  Plan plan = plan_cases(ids, lambda, grid);
  std::vector<std::pair<Constraint, bool>> out;
  out.reserve(plan.probes.size());
  for (const Probe& p : plan.probes) out.emplace_back(p.omega, !probe_defect(p).is_zero());
  return out;
}

}  // namespace drba
