#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drba/algebra.hpp"
#include "drba/constraint.hpp"
#include "drba/rational.hpp"

namespace drba {

// Free Rota-Baxter algebra over a decomposable carrier A: the direct sum of
// tensor powers A, A⊗A, A⊗A⊗A, ... with the weighted mixable-shuffle product
// and the operator that prepends the carrier unit.  Elements are stored as
// linear combinations of words whose slots are carrier *basis* elements; the
// word() builder expands arbitrary slots multilinearly, so two equal tensors
// always normalize to the same stored form.
template <DecomposableAlgebra Ctx>
class FreeRBAlgebra {
 public:
  using CElem = typename Ctx::Elem;
  using Word = std::vector<CElem>;  // always nonempty once stored

  class Elem {
   public:
    Elem() = default;
    const std::map<Word, Scalar>& terms() const { return t_; }
    friend bool operator==(const Elem& a, const Elem& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
    friend bool operator<(const Elem& a, const Elem& b) { return a.t_ < b.t_; }

   private:
    std::map<Word, Scalar> t_;  // zero coefficients are never stored
    friend class FreeRBAlgebra;
  };

  explicit FreeRBAlgebra(Ctx carrier) : c_(std::move(carrier)) {}

  const Ctx& carrier() const { return c_; }

  Elem zero() const { return {}; }
  Elem one() const { return word({c_.one()}); }

  // One tensor word with the given slots, expanded so that only basis
  // elements are stored.  Words of length zero have no meaning here.
  Elem word(const Word& slots, const Scalar& coeff = Scalar(1)) const {
    if (slots.empty())
      throw std::invalid_argument("free Rota-Baxter words must have at least one slot");
    Elem out;
    if (!coeff.is_zero()) expand(slots, 0, Word{}, coeff, out);
    return out;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (const auto& [w, c] : b.t_) add_term(out, w, c);
    return out;
  }

  Elem scale(const Scalar& s, const Elem& a) const {
    Elem out;
    if (s.is_zero()) return out;
    for (const auto& [w, c] : a.t_) out.t_.emplace(w, s * c);
    return out;
  }

  // Weighted mixable-shuffle product: heads multiply in the carrier, tails
  // shuffle with a λ-weighted merge term.
  Elem mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [wa, ca] : a.t_) {
      for (const auto& [wb, cb] : b.t_) {
        CElem head = c_.mul(wa[0], wb[0]);
        Tail ta(wa.begin() + 1, wa.end());
        Tail tb(wb.begin() + 1, wb.end());
        TailMap sh = shuffle(ta, tb);
        Scalar cab = ca * cb;
        for (const auto& [he, hc] : c_.decompose(head)) {
          for (const auto& [t, tc] : sh) {
            Word w;
            w.reserve(t.size() + 1);
            w.push_back(he);
            w.insert(w.end(), t.begin(), t.end());
            add_term(out, w, cab * hc * tc);
          }
        }
      }
    }
    return out;
  }

  bool equal(const Elem& a, const Elem& b) const { return a.t_ == b.t_; }
  bool is_zero(const Elem& a) const { return a.t_.empty(); }

  std::string str(const Elem& a) const {
    if (a.t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : a.t_) {
      if (!first) out += " + ";
      out += c.str();
      out += "·(";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ⊗ ";
        out += c_.str(w[i]);
      }
      out += ")";
      first = false;
    }
    return out;
  }

  Scalar weight() const { return c_.weight(); }

  std::vector<std::pair<Elem, Scalar>> decompose(const Elem& a) const {
    std::vector<std::pair<Elem, Scalar>> out;
    out.reserve(a.t_.size());
    for (const auto& [w, c] : a.t_) {
      Elem e;
      e.t_.emplace(w, Scalar(1));
      out.emplace_back(std::move(e), c);
    }
    return out;
  }

  // Length of the longest word appearing in u (0 for the zero element); the
  // product and the induced operators never increase it past their inputs'
  // combined degree, and extensions preserve it.
  std::size_t degree(const Elem& a) const {
    std::size_t d = 0;
    for (const auto& [w, c] : a.t_) d = std::max(d, w.size());
    return d;
  }

 private:
  using Tail = std::vector<CElem>;   // may be empty mid-recursion
  using TailMap = std::map<Tail, Scalar>;

  static void add_term(Elem& out, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = out.t_.find(w);
    if (it == out.t_.end()) {
      out.t_.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.t_.erase(it);
    }
  }

  static void tail_add(TailMap& out, Tail w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = out.find(w);
    if (it == out.end()) {
      out.emplace(std::move(w), c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.erase(it);
    }
  }

  void expand(const Word& slots, std::size_t i, Word prefix, const Scalar& c, Elem& out) const {
    if (i == slots.size()) {
      add_term(out, prefix, c);
      return;
    }
    for (const auto& [e, ce] : c_.decompose(slots[i])) {
      Word next = prefix;
      next.push_back(e);
      expand(slots, i + 1, std::move(next), c * ce, out);
    }
  }

  // a ⧢ b with the λ-weighted merge:
  //   ∅ ⧢ w = w ⧢ ∅ = w
  //   (x⊗x') ⧢ (y⊗y') = x⊗(x' ⧢ (y⊗y')) + y⊗((x⊗x') ⧢ y') + λ (xy)⊗(x' ⧢ y')
  TailMap shuffle(const Tail& a, const Tail& b) const {
    TailMap out;
    if (a.empty()) {
      out.emplace(b, Scalar(1));
      return out;
    }
    if (b.empty()) {
      out.emplace(a, Scalar(1));
      return out;
    }
    Tail at(a.begin() + 1, a.end());
    Tail bt(b.begin() + 1, b.end());
    auto emit = [&out](const CElem& head, const TailMap& rest, const Scalar& factor) {
      for (const auto& [t, c] : rest) {
        Tail w;
        w.reserve(t.size() + 1);
        w.push_back(head);
        w.insert(w.end(), t.begin(), t.end());
        tail_add(out, std::move(w), factor * c);
      }
    };
    emit(a[0], shuffle(at, b), Scalar(1));
    emit(b[0], shuffle(a, bt), Scalar(1));
    Scalar l = c_.weight();
    if (!l.is_zero()) {
      TailMap rest = shuffle(at, bt);
      for (const auto& [he, hc] : c_.decompose(c_.mul(a[0], b[0]))) emit(he, rest, l * hc);
    }
    return out;
  }

  Ctx c_;
};

// Named entry point for the product, for callers that read better with a
// verb than with F.mul.
template <DecomposableAlgebra Ctx>
typename FreeRBAlgebra<Ctx>::Elem mix_shuffle_mul(const FreeRBAlgebra<Ctx>& F,
                                                  const typename FreeRBAlgebra<Ctx>::Elem& u,
                                                  const typename FreeRBAlgebra<Ctx>::Elem& v) {
  return F.mul(u, v);
}

// The canonical Rota-Baxter operator: prepend the carrier unit to each word.
template <DecomposableAlgebra Ctx>
typename FreeRBAlgebra<Ctx>::Elem free_P(const FreeRBAlgebra<Ctx>& F,
                                         const typename FreeRBAlgebra<Ctx>::Elem& u) {
  typename FreeRBAlgebra<Ctx>::Elem out = F.zero();
  for (const auto& [w, c] : u.terms()) {
    typename FreeRBAlgebra<Ctx>::Word slots;
    slots.reserve(w.size() + 1);
    slots.push_back(F.carrier().one());
    slots.insert(slots.end(), w.begin(), w.end());
    out = F.add(out, F.word(slots, c));
  }
  return out;
}

// Degree-1 embedding of the carrier: a ↦ (a).
template <DecomposableAlgebra Ctx>
typename FreeRBAlgebra<Ctx>::Elem unit_embed(const FreeRBAlgebra<Ctx>& F,
                                             const typename Ctx::Elem& a) {
  return F.word({a});
}

// Fold a word through a Rota-Baxter pair (A, P):
//   ϑ(v₀ ⊗ v₁ ⊗ ... ⊗ v_m) = v₀ · P(v₁ · P(... P(v_m) ...)),
// extended linearly.  This is the unique Rota-Baxter morphism out of the free
// algebra restricting to the identity on degree 1.
template <DecomposableAlgebra Ctx>
typename Ctx::Elem vartheta(const Ctx& A, const LinearOp<Ctx>& P,
                            const typename FreeRBAlgebra<Ctx>::Elem& u) {
  typename Ctx::Elem out = A.zero();
  for (const auto& [w, c] : u.terms()) {
    typename Ctx::Elem acc = w.back();
    for (std::size_t i = w.size() - 1; i-- > 0;) acc = A.mul(w[i], P(acc));
    out = A.add(out, A.scale(c, acc));
  }
  return out;
}

// Monad multiplication: collapse one level of nesting, folding words of
// elements through the inner algebra's own operator.
template <DecomposableAlgebra Ctx>
typename FreeRBAlgebra<Ctx>::Elem monad_mu(
    const FreeRBAlgebra<Ctx>& F,
    const typename FreeRBAlgebra<FreeRBAlgebra<Ctx>>::Elem& u) {
  LinearOp<FreeRBAlgebra<Ctx>> P = [F](const typename FreeRBAlgebra<Ctx>::Elem& x) {
    return free_P(F, x);
  };
  return vartheta(F, P, u);
}

// Convenience overload: collapse an explicit word of elements.
template <DecomposableAlgebra Ctx>
typename FreeRBAlgebra<Ctx>::Elem monad_mu(
    const FreeRBAlgebra<Ctx>& F, const std::vector<typename FreeRBAlgebra<Ctx>::Elem>& slots) {
  FreeRBAlgebra<FreeRBAlgebra<Ctx>> FF(F);
  return monad_mu(F, FF.word(slots));
}

// Slot-wise application of a map A → B between carriers, i.e. the functor
// action on words: a₀ ⊗ ... ⊗ a_k ↦ g(a₀) ⊗ ... ⊗ g(a_k), multilinearly.
template <DecomposableAlgebra CtxA, DecomposableAlgebra CtxB, class Fn>
typename FreeRBAlgebra<CtxB>::Elem map_slots(const FreeRBAlgebra<CtxA>& source,
                                             const FreeRBAlgebra<CtxB>& target,
                                             const typename FreeRBAlgebra<CtxA>::Elem& u,
                                             Fn g) {
  (void)source;  // participates in deduction only
  typename FreeRBAlgebra<CtxB>::Elem out = target.zero();
  for (const auto& [w, c] : u.terms()) {
    typename FreeRBAlgebra<CtxB>::Word slots;
    slots.reserve(w.size());
    for (const auto& s : w) slots.push_back(g(s));
    out = target.add(out, target.word(slots, c));
  }
  return out;
}

// The operator on the free algebra induced by a base operator q on the
// carrier and a constraint ω = xy - (φ(x) + yψ(x)):
//
//   q̃((a))      = (q(a))
//   q̃(u₀ ⊗ u') = q(u₀) ⊗ u' + (u₀ + λ q(u₀)) · [φ(q̃) + P∘ψ(q̃)](u')
//
// where P prepends the carrier unit and λ is the carrier weight.  The
// construction needs q(1) = 0, which is checked up front; results are
// memoized per word, and the recursion is well founded because every
// component of q̃ applied to a word involves strictly shorter words.
template <DecomposableAlgebra Ctx>
class ExtensionOperator {
 public:
  using FElem = typename FreeRBAlgebra<Ctx>::Elem;
  using Word = typename FreeRBAlgebra<Ctx>::Word;

  ExtensionOperator(FreeRBAlgebra<Ctx> F, Constraint omega, LinearOp<Ctx> base)
      : F_(std::move(F)), omega_(std::move(omega)), base_(std::move(base)) {
    auto q1 = base_(F_.carrier().one());
    if (!F_.carrier().is_zero(q1))
      throw std::invalid_argument(
          "extension requires the base operator to kill the carrier unit; got q(1) = " +
          F_.carrier().str(q1));
  }

  const Constraint& omega() const { return omega_; }
  const FreeRBAlgebra<Ctx>& algebra() const { return F_; }

  FElem apply(const FElem& u) const {
    FElem out = F_.zero();
    for (const auto& [w, c] : u.terms()) out = F_.add(out, F_.scale(c, apply_word(w)));
    return out;
  }

 private:
  FElem apply_word(const Word& w) const {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    FElem result;
    if (w.size() == 1) {
      result = unit_embed(F_, base_(w[0]));
    } else {
      const Ctx& A = F_.carrier();
      Word tail(w.begin() + 1, w.end());
      FElem tail_elem = F_.word(tail);
      LinearOp<FreeRBAlgebra<Ctx>> self = [this](const FElem& x) { return apply(x); };
      FElem inner = F_.add(apply_operator_poly(F_, omega_.phi, self, tail_elem),
                           free_P(F_, apply_operator_poly(F_, omega_.psi, self, tail_elem)));
      typename Ctx::Elem head_mod = A.add(w[0], A.scale(A.weight(), base_(w[0])));
      result = F_.mul(unit_embed(F_, head_mod), inner);
      Word lead;
      lead.reserve(w.size());
      lead.push_back(base_(w[0]));
      lead.insert(lead.end(), tail.begin(), tail.end());
      result = F_.add(result, F_.word(lead));
    }
    return memo_.emplace(w, std::move(result)).first->second;
  }

  FreeRBAlgebra<Ctx> F_;
  Constraint omega_;
  LinearOp<Ctx> base_;
  mutable std::map<Word, FElem> memo_;
};

template <DecomposableAlgebra Ctx>
typename FreeRBAlgebra<Ctx>::Elem extension_apply(const ExtensionOperator<Ctx>& E,
                                                  const typename FreeRBAlgebra<Ctx>::Elem& u) {
  return E.apply(u);
}

}  // namespace drba
