#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drba/algebra.hpp"
#include "drba/constraint.hpp"
#include "drba/rational.hpp"
#include "drba/scalar_poly.hpp"

namespace drba {

// A sequence-with-memory over a carrier algebra: component(n) is computed on
// demand and cached, so towers of products and operator applications reuse
// work instead of re-expanding.  Series values are cheap shared handles into
// an immutable node graph; evaluation mutates only per-node memo tables, so
// use is single-threaded by design.
template <CarrierAlgebra Ctx>
class Series {
 public:
  using Elem = typename Ctx::Elem;

  // Finite-support series: everything outside `terms` is zero.
  static Series literal(const Ctx& ctx, std::map<std::size_t, Elem> terms) {
    return Series(std::make_shared<Node>(
        ctx, [ctx, terms = std::move(terms)](std::size_t n) -> Elem {
          auto it = terms.find(n);
          return it == terms.end() ? ctx.zero() : it->second;
        }));
  }

  static Series zero(const Ctx& ctx) { return literal(ctx, {}); }

  // (1, 0, 0, ...) — the multiplicative identity.
  static Series identity(const Ctx& ctx) {
    std::map<std::size_t, Elem> t;
    t.emplace(0, ctx.one());
    return literal(ctx, std::move(t));
  }

  // Arbitrary generated series; `gen` must be pure (it is called at most once
  // per index thanks to the memo).
  static Series generator(const Ctx& ctx, std::function<Elem(std::size_t)> gen) {
    return Series(std::make_shared<Node>(ctx, std::move(gen)));
  }

  const Ctx& context() const { return node_->ctx; }
  Elem component(std::size_t n) const { return node_->component(n); }

  // The shift ∂ applied j times: component n of the result is component n+j.
  Series shift(std::size_t j = 1) const {
    auto self = node_;
    return Series(std::make_shared<Node>(
        node_->ctx, [self, j](std::size_t n) { return self->component(n + j); }));
  }

  Series add(const Series& other) const {
    auto a = node_;
    auto b = other.node_;
    Ctx ctx = node_->ctx;
    return Series(std::make_shared<Node>(ctx, [ctx, a, b](std::size_t n) {
      return ctx.add(a->component(n), b->component(n));
    }));
  }

  Series scale(const Scalar& c) const {
    auto a = node_;
    Ctx ctx = node_->ctx;
    return Series(std::make_shared<Node>(
        ctx, [ctx, a, c](std::size_t n) { return ctx.scale(c, a->component(n)); }));
  }

 private:
  struct Node {
    Node(Ctx c, std::function<Elem(std::size_t)> g) : ctx(std::move(c)), gen(std::move(g)) {}
    Ctx ctx;
    std::function<Elem(std::size_t)> gen;
    mutable std::map<std::size_t, Elem> memo;
    Elem component(std::size_t n) const {
      auto it = memo.find(n);
      if (it != memo.end()) return it->second;
      Elem v = gen(n);
      return memo.emplace(n, std::move(v)).first->second;
    }
  };

  explicit Series(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Weighted Hurwitz product:
//   (f g)_n = Σ_{k=0}^{n} Σ_{j=0}^{n-k} C(n,k) C(n-k,j) λ^k f_{n-j} g_{k+j},
// with λ taken from the carrier.  At λ = 0 this is the classical Hurwitz
// (binomial-convolution) product.
template <CarrierAlgebra Ctx>
Series<Ctx> hmul_series(const Series<Ctx>& f, const Series<Ctx>& g) {
  Ctx ctx = f.context();
  Scalar lambda = ctx.weight();
  return Series<Ctx>::generator(ctx, [ctx, lambda, f, g](std::size_t n) {
    typename Ctx::Elem acc = ctx.zero();
    Scalar lk(1);  // λ^k
    for (std::size_t k = 0; k <= n; ++k) {
      if (!lk.is_zero()) {
        for (std::size_t j = 0; j + k <= n; ++j) {
          Scalar c = Scalar::binomial(n, k) * Scalar::binomial(n - k, j) * lk;
          acc = ctx.add(acc, ctx.scale(c, ctx.mul(f.component(n - j), g.component(k + j))));
        }
      }
      lk = lk * lambda;
    }
    return acc;
  });
}

// Single component of the product.  The weight is passed explicitly so call
// sites state their intent; it must agree with the carrier's weight.
template <CarrierAlgebra Ctx>
typename Ctx::Elem hmul(const Series<Ctx>& f, const Series<Ctx>& g, const Scalar& lambda,
                        std::size_t n) {
  if (!(lambda == f.context().weight()))
    throw std::invalid_argument("hmul: requested weight " + lambda.str() +
                                " does not match the carrier weight " +
                                f.context().weight().str());
  return hmul_series(f, g).component(n);
}

// The shift derivation ∂: (∂f)_n = f_{n+1}.
template <CarrierAlgebra Ctx>
Series<Ctx> partial(const Series<Ctx>& f) {
  return f.shift(1);
}

// Evaluation at the constant term: ε(f) = f_0, an algebra homomorphism.
template <CarrierAlgebra Ctx>
typename Ctx::Elem epsilon(const Series<Ctx>& f) {
  return f.component(0);
}

// Two-index component access δ(f, m, n) = f_{m+n}; the pairing underlying
// the comonad structure on these series.
template <CarrierAlgebra Ctx>
typename Ctx::Elem delta(const Series<Ctx>& f, std::size_t m, std::size_t n) {
  return f.component(m + n);
}

// n-fold application of an operator: θ(d, u, n) = d^n(u).
template <class Op, class Elem>
Elem theta(const Op& d, Elem u, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) u = d(u);
  return u;
}

// The series of iterated applications, θ(u) = (u, d(u), d²(u), ...).  When d
// is a differential of the carrier's weight this map is multiplicative into
// the Hurwitz product.
template <CarrierAlgebra Ctx>
Series<Ctx> theta_series(const Ctx& ctx, LinearOp<Ctx> d, typename Ctx::Elem u) {
  auto powers = std::make_shared<std::vector<typename Ctx::Elem>>();
  powers->push_back(std::move(u));
  return Series<Ctx>::generator(ctx, [d = std::move(d), powers](std::size_t n) {
    while (powers->size() <= n) powers->push_back(d(powers->back()));
    return (*powers)[n];
  });
}

// Render components 0..depth as "{index: element, ...}", omitting zeros.
template <CarrierAlgebra Ctx>
std::string render_series(const Series<Ctx>& f, std::size_t depth) {
  const Ctx& ctx = f.context();
  std::string out = "{";
  bool first = true;
  for (std::size_t n = 0; n <= depth; ++n) {
    auto v = f.component(n);
    if (ctx.is_zero(v)) continue;
    if (!first) out += ", ";
    out += std::to_string(n) + ": " + ctx.str(v);
    first = false;
  }
  out += "}";
  return out;
}

// How deep into the input a cover must read to produce output components
// 0..n: D(0) = 0 and D(n) is the maximum of n-1+deg(φ) (when φ ≠ 0) and
// D(n-1)+deg(ψ) (when ψ ≠ 0), or 0 when both vanish.
inline std::size_t required_input_order(const Constraint& omega, std::size_t n) {
  const auto r = omega.phi.degree();
  const auto s = omega.psi.degree();
  std::size_t depth = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t best = 0;
    bool present = false;
    if (r) {
      best = std::max(best, k - 1 + *r);
      present = true;
    }
    if (s) {
      best = std::max(best, depth + *s);
      present = true;
    }
    depth = present ? best : 0;
  }
  return depth;
}

// The operator on series induced by a base operator Q and a constraint
// ω = xy - (φ(x) + yψ(x)):
//
//   Q̃(f)_0     = Q(f_0)
//   Q̃(f)_{n+1} = Σ_i φ_i f_{n+i} + Σ_j ψ_j Q̃(∂^j f)_n
//
// Applying the operator snapshots the base map, so later set_base calls do
// not retroactively change already-produced series (that asymmetry is what
// the corrupted-operator checks in the tests rely on).
template <CarrierAlgebra Ctx>
class CoverOperator {
 public:
  CoverOperator(Ctx ctx, Constraint omega, LinearOp<Ctx> base)
      : ctx_(std::move(ctx)), omega_(std::move(omega)), base_(std::move(base)) {}

  const Ctx& context() const { return ctx_; }
  const Constraint& omega() const { return omega_; }
  void set_base(LinearOp<Ctx> base) { base_ = std::move(base); }

  Series<Ctx> apply(const Series<Ctx>& f) const {
    auto st = std::make_shared<State>(State{ctx_, omega_.phi, omega_.psi, base_, f, {}});
    return Series<Ctx>::generator(ctx_,
                                  [st](std::size_t n) { return st->component(n, 0); });
  }

 private:
  // component(n, t) is Q̃(∂^t f)_n; the pair-keyed memo makes the recursion
  // linear in n per distinct shift.
  struct State {
    Ctx ctx;
    ScalarPoly phi, psi;
    LinearOp<Ctx> base;
    Series<Ctx> arg;
    std::map<std::pair<std::size_t, std::size_t>, typename Ctx::Elem> memo;

    typename Ctx::Elem component(std::size_t n, std::size_t t) {
      auto key = std::make_pair(n, t);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      typename Ctx::Elem v = ctx.zero();
      if (n == 0) {
        v = base(arg.component(t));
      } else {
        for (std::size_t i = 0; i < phi.size(); ++i)
          if (!phi.coeff(i).is_zero())
            v = ctx.add(v, ctx.scale(phi.coeff(i), arg.component(n - 1 + i + t)));
        for (std::size_t j = 0; j < psi.size(); ++j)
          if (!psi.coeff(j).is_zero())
            v = ctx.add(v, ctx.scale(psi.coeff(j), component(n - 1, t + j)));
      }
      return memo.emplace(key, std::move(v)).first->second;
    }
  };

  Ctx ctx_;
  Constraint omega_;
  LinearOp<Ctx> base_;
};

template <CarrierAlgebra Ctx>
typename Ctx::Elem cover_component(const CoverOperator<Ctx>& C, const Series<Ctx>& f,
                                   std::size_t n) {
  return C.apply(f).component(n);
}

// All six series entering the Rota-Baxter identity for a cover, built once
// and shared so that defect components at successive n reuse every memo:
//
//   defect(n) = (Q̃f · Q̃g)_n - [ Q̃(Q̃f·g) + Q̃(f·Q̃g) + λ Q̃(f·g) ]_n.
//
// The operator is a Rota-Baxter operator of the carrier's weight exactly when
// every defect component vanishes.
template <CarrierAlgebra Ctx>
struct DefectProbe {
  Series<Ctx> qf, qg;       // Q̃f, Q̃g
  Series<Ctx> product;      // Q̃f · Q̃g
  Series<Ctx> inner_left;   // Q̃(Q̃f · g)
  Series<Ctx> inner_right;  // Q̃(f · Q̃g)
  Series<Ctx> inner_plain;  // Q̃(f · g)
  Scalar lambda;
  Ctx ctx;

  DefectProbe(const CoverOperator<Ctx>& C, const Series<Ctx>& f, const Series<Ctx>& g)
      : qf(C.apply(f)),
        qg(C.apply(g)),
        product(hmul_series(qf, qg)),
        inner_left(C.apply(hmul_series(qf, g))),
        inner_right(C.apply(hmul_series(f, qg))),
        inner_plain(C.apply(hmul_series(f, g))),
        lambda(C.context().weight()),
        ctx(C.context()) {}

  typename Ctx::Elem defect(std::size_t n) const {
    auto rhs = ctx.add(ctx.add(inner_left.component(n), inner_right.component(n)),
                       ctx.scale(lambda, inner_plain.component(n)));
    return ctx.add(product.component(n), ctx.scale(Scalar(-1), rhs));
  }
};

template <CarrierAlgebra Ctx>
typename Ctx::Elem rb_defect(const CoverOperator<Ctx>& C, const Series<Ctx>& f,
                             const Series<Ctx>& g, std::size_t n) {
  return DefectProbe<Ctx>(C, f, g).defect(n);
}

struct RelationCheck {
  bool pass = true;
  std::optional<std::size_t> witness_index;  // first failing component
  std::string detail;
};

// Verify that `claimed` really is the cover of f: component 0 must come from
// the base operator, and components 1..depth must satisfy the defining
// recursion.  The right-hand sides are re-derived from f alone — they never
// read `claimed` — so handing in a tampered series is caught.
template <CarrierAlgebra Ctx>
RelationCheck check_cover_relation(const CoverOperator<Ctx>& C, const Series<Ctx>& claimed,
                                   const Series<Ctx>& f, std::size_t depth) {
  const Ctx& ctx = C.context();
  auto expect0 = C.apply(f).component(0);
  auto got0 = claimed.component(0);
  if (!ctx.equal(got0, expect0)) {
    return {false, 0,
            "component 0: claimed " + ctx.str(got0) + " but the base operator gives " +
                ctx.str(expect0)};
  }
  const ScalarPoly& phi = C.omega().phi;
  const ScalarPoly& psi = C.omega().psi;
  std::vector<Series<Ctx>> shifted;  // cover of ∂^j f, one per ψ coefficient
  shifted.reserve(psi.size());
  for (std::size_t j = 0; j < psi.size(); ++j) shifted.push_back(C.apply(f.shift(j)));
  for (std::size_t n = 0; n + 1 <= depth; ++n) {
    typename Ctx::Elem rhs = ctx.zero();
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (!phi.coeff(i).is_zero())
        rhs = ctx.add(rhs, ctx.scale(phi.coeff(i), f.component(n + i)));
    for (std::size_t j = 0; j < psi.size(); ++j)
      if (!psi.coeff(j).is_zero())
        rhs = ctx.add(rhs, ctx.scale(psi.coeff(j), shifted[j].component(n)));
    auto got = claimed.component(n + 1);
    if (!ctx.equal(got, rhs)) {
      return {false, n + 1,
              "component " + std::to_string(n + 1) + ": claimed " + ctx.str(got) +
                  " but the recursion gives " + ctx.str(rhs)};
    }
  }
  return {};
}

template <CarrierAlgebra Ctx>
RelationCheck check_cover_relation(const CoverOperator<Ctx>& C, const Series<Ctx>& f,
                                   std::size_t depth) {
  return check_cover_relation(C, C.apply(f), f, depth);
}

// Series over a carrier, packaged as a carrier themselves (product = Hurwitz
// product).  Equality, zero-tests and rendering look at components 0..depth —
// a deliberate finite window, which is exactly what the sampled axiom
// checkers need.  Decomposition into basis elements is not meaningful here,
// so this satisfies CarrierAlgebra only.
template <CarrierAlgebra Ctx>
struct SeriesAlgebra {
  using Elem = Series<Ctx>;

  Ctx carrier;
  std::size_t depth = 8;

  Elem zero() const { return Series<Ctx>::zero(carrier); }
  Elem one() const { return Series<Ctx>::identity(carrier); }
  Elem add(const Elem& a, const Elem& b) const { return a.add(b); }
  Elem scale(const Scalar& c, const Elem& a) const { return a.scale(c); }
  Elem mul(const Elem& a, const Elem& b) const { return hmul_series(a, b); }
  bool equal(const Elem& a, const Elem& b) const {
    for (std::size_t n = 0; n <= depth; ++n)
      if (!carrier.equal(a.component(n), b.component(n))) return false;
    return true;
  }
  bool is_zero(const Elem& a) const {
    for (std::size_t n = 0; n <= depth; ++n)
      if (!carrier.is_zero(a.component(n))) return false;
    return true;
  }
  std::string str(const Elem& a) const { return render_series(a, depth); }
  Scalar weight() const { return carrier.weight(); }
};

}  // namespace drba
