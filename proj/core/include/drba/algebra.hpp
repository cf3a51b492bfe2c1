#pragma once

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drba/constraint.hpp"
#include "drba/rational.hpp"
#include "drba/scalar_poly.hpp"

namespace drba {

// Uniform contract for a commutative unital algebra carrier.  A context is a
// small immutable value (weight λ plus a descriptor such as a quotient
// modulus); elements are immutable values and all operations are pure, so
// everything here is freely shareable across threads.
template <class Ctx>
concept CarrierAlgebra = requires(const Ctx& c, const typename Ctx::Elem& u,
                                  const typename Ctx::Elem& v, const Scalar& s) {
  typename Ctx::Elem;
  { c.zero() } -> std::same_as<typename Ctx::Elem>;
  { c.one() } -> std::same_as<typename Ctx::Elem>;
  { c.add(u, v) } -> std::same_as<typename Ctx::Elem>;
  { c.scale(s, u) } -> std::same_as<typename Ctx::Elem>;
  { c.mul(u, v) } -> std::same_as<typename Ctx::Elem>;
  { c.equal(u, v) } -> std::same_as<bool>;
  { c.is_zero(u) } -> std::same_as<bool>;
  { c.str(u) } -> std::same_as<std::string>;
  { c.weight() } -> std::same_as<Scalar>;
};

// A carrier whose elements decompose into distinguished basis elements with
// scalar coefficients, and which can be used as tensor-word slots (ordered,
// equality-comparable).  Needed by the free Rota-Baxter construction.
template <class Ctx>
concept DecomposableAlgebra =
    CarrierAlgebra<Ctx> &&
    requires(const Ctx& c, const typename Ctx::Elem& u) {
      {
        c.decompose(u)
      } -> std::same_as<std::vector<std::pair<typename Ctx::Elem, Scalar>>>;
    } &&
    requires(const typename Ctx::Elem& u, const typename Ctx::Elem& v) {
      { u < v } -> std::convertible_to<bool>;
      { u == v } -> std::convertible_to<bool>;
    };

// Linear operator on a carrier.  Additivity/linearity are contract, not
// construction: check_linearity probes them on samples.
template <class Ctx>
using LinearOp = std::function<typename Ctx::Elem(const typename Ctx::Elem&)>;

// The exact rationals as a carrier (the base ring k).  Its weight tags the
// structures built over it; the ring product itself is weight-independent.
struct RationalAlgebra {
  using Elem = Scalar;
  Scalar lambda;

  Elem zero() const { return Scalar(); }
  Elem one() const { return Scalar(1); }
  Elem add(const Elem& u, const Elem& v) const { return u + v; }
  Elem scale(const Scalar& s, const Elem& u) const { return s * u; }
  Elem mul(const Elem& u, const Elem& v) const { return u * v; }
  bool equal(const Elem& u, const Elem& v) const { return u == v; }
  bool is_zero(const Elem& u) const { return u.is_zero(); }
  std::string str(const Elem& u) const { return u.str(); }
  Scalar weight() const { return lambda; }
  std::vector<std::pair<Elem, Scalar>> decompose(const Elem& u) const {
    if (u.is_zero()) return {};
    return {{Scalar(1), u}};
  }
};

// p(op) applied to u: Σ_i p_i · op^i(u), with op^0 the identity.
template <CarrierAlgebra Ctx>
typename Ctx::Elem apply_operator_poly(const Ctx& ctx, const ScalarPoly& p,
                                       const LinearOp<Ctx>& op, const typename Ctx::Elem& u) {
  typename Ctx::Elem acc = ctx.zero();
  typename Ctx::Elem power = u;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.coeff(i).is_zero()) acc = ctx.add(acc, ctx.scale(p.coeff(i), power));
    if (i + 1 < p.size()) power = op(power);
  }
  return acc;
}

// Outcome of a sampled axiom check.  Witnesses carry the offending element(s)
// and the nonzero defect rendered through the carrier, never a bare boolean.
template <CarrierAlgebra Ctx>
struct AxiomReport {
  bool pass = true;
  std::string witness;                       // human-readable description
  std::optional<typename Ctx::Elem> defect;  // left minus right at the witness
};

// Rota-Baxter axiom of weight λ:  P(u)P(v) = P(P(u)v) + P(uP(v)) + λP(uv).
template <CarrierAlgebra Ctx>
AxiomReport<Ctx> check_rb_axiom(const Ctx& ctx, const LinearOp<Ctx>& P, const Scalar& lambda,
                                const std::vector<std::pair<typename Ctx::Elem, typename Ctx::Elem>>& samples) {
  for (const auto& [u, v] : samples) {
    auto pu = P(u), pv = P(v);
    auto left = ctx.mul(pu, pv);
    auto right = ctx.add(ctx.add(P(ctx.mul(pu, v)), P(ctx.mul(u, pv))),
                         ctx.scale(lambda, P(ctx.mul(u, v))));
    auto defect = ctx.add(left, ctx.scale(Scalar(-1), right));
    if (!ctx.is_zero(defect)) {
      return {false,
              "Rota-Baxter axiom fails at u = " + ctx.str(u) + ", v = " + ctx.str(v) +
                  "; defect = " + ctx.str(defect),
              defect};
    }
  }
  return {};
}

// Differential axiom of weight λ:  d(1) = 0 and
// d(uv) = d(u)v + u d(v) + λ d(u)d(v).
template <CarrierAlgebra Ctx>
AxiomReport<Ctx> check_diff_axiom(const Ctx& ctx, const LinearOp<Ctx>& d, const Scalar& lambda,
                                  const std::vector<std::pair<typename Ctx::Elem, typename Ctx::Elem>>& samples) {
  auto done = d(ctx.one());
  if (!ctx.is_zero(done))
    return {false, "differential axiom fails: d(1) = " + ctx.str(done) + " is nonzero", done};
  for (const auto& [u, v] : samples) {
    auto du = d(u), dv = d(v);
    auto left = d(ctx.mul(u, v));
    auto right = ctx.add(ctx.add(ctx.mul(du, v), ctx.mul(u, dv)),
                         ctx.scale(lambda, ctx.mul(du, dv)));
    auto defect = ctx.add(left, ctx.scale(Scalar(-1), right));
    if (!ctx.is_zero(defect)) {
      return {false,
              "differential axiom fails at u = " + ctx.str(u) + ", v = " + ctx.str(v) +
                  "; defect = " + ctx.str(defect),
              defect};
    }
  }
  return {};
}

// Operator relation induced by ω:  d(Q(u)) = φ(d)(u) + Q(ψ(d)(u)).
template <CarrierAlgebra Ctx>
AxiomReport<Ctx> check_omega_relation(const Ctx& ctx, const LinearOp<Ctx>& d_like,
                                      const LinearOp<Ctx>& Q, const Constraint& omega,
                                      const std::vector<typename Ctx::Elem>& samples) {
  for (const auto& u : samples) {
    auto left = d_like(Q(u));
    auto right = ctx.add(apply_operator_poly(ctx, omega.phi, d_like, u),
                         Q(apply_operator_poly(ctx, omega.psi, d_like, u)));
    auto defect = ctx.add(left, ctx.scale(Scalar(-1), right));
    if (!ctx.is_zero(defect)) {
      return {false,
              "relation dQ = phi(d) + Q psi(d) fails at u = " + ctx.str(u) +
                  "; defect = " + ctx.str(defect),
              defect};
    }
  }
  return {};
}

// Additivity and scalar linearity of an operator on sampled pairs.
template <CarrierAlgebra Ctx>
AxiomReport<Ctx> check_linearity(const Ctx& ctx, const LinearOp<Ctx>& op,
                                 const std::vector<std::pair<typename Ctx::Elem, typename Ctx::Elem>>& samples,
                                 const std::vector<Scalar>& scalars) {
  for (const auto& [u, v] : samples) {
    auto additive = ctx.add(op(ctx.add(u, v)), ctx.scale(Scalar(-1), ctx.add(op(u), op(v))));
    if (!ctx.is_zero(additive))
      return {false, "additivity fails at u = " + ctx.str(u) + ", v = " + ctx.str(v), additive};
    for (const Scalar& c : scalars) {
      auto homog = ctx.add(op(ctx.scale(c, u)), ctx.scale(Scalar(-1), ctx.scale(c, op(u))));
      if (!ctx.is_zero(homog))
        return {false, "scalar linearity fails at c = " + c.str() + ", u = " + ctx.str(u), homog};
    }
  }
  return {};
}

}  // namespace drba
