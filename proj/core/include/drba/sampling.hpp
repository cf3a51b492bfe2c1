#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "drba/divided_power.hpp"
#include "drba/free_rb.hpp"
#include "drba/hurwitz.hpp"
#include "drba/rational.hpp"

namespace drba {

// Deterministic source of small integers.  Reduction is plain modulo on a
// mt19937_64 draw: biased in principle, but the bounds used here are tiny
// against the generator's range, and the payoff is bit-identical sampling for
// a given seed on every platform, which the reporting pipeline relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

  long int_in(long lo, long hi) {  // both ends inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

// Uniform integer coefficients in [-5, 5] at every index 0..max_index, with
// the quotient modulus capping the range when present.  Zero draws simply
// leave gaps, so support sizes vary naturally.
inline DPElement random_dp_element(Rng& rng, const DPAlgebra& A, std::size_t max_index) {
  if (A.modulus) max_index = std::min(max_index, *A.modulus - 1);
  DPElement out = A.zero();
  for (std::size_t i = 0; i <= max_index; ++i) {
    long c = rng.int_in(-5, 5);
    if (c != 0) out = A.add(out, A.scale(Scalar(c), A.basis(i)));
  }
  return out;
}

// Finite-support series: at most max_support components placed at indices
// 0..max_index (duplicate draws collapse), each a random carrier element.
inline Series<DPAlgebra> random_series(Rng& rng, const DPAlgebra& A,
                                       std::size_t max_support = 6, std::size_t max_index = 10,
                                       std::size_t elem_max_index = 8) {
  std::map<std::size_t, DPElement> terms;
  for (std::size_t k = 0; k < max_support; ++k) {
    std::size_t idx = static_cast<std::size_t>(rng.below(max_index + 1));
    terms[idx] = random_dp_element(rng, A, elem_max_index);
  }
  return Series<DPAlgebra>::literal(A, std::move(terms));
}

// Combination of at most max_words tensor words of length 1..max_len with
// integer coefficients in [-5, 5]; slots come from the provided sampler.
template <DecomposableAlgebra Ctx, class SlotFn>
typename FreeRBAlgebra<Ctx>::Elem random_free_elem(Rng& rng, const FreeRBAlgebra<Ctx>& F,
                                                   SlotFn slot, std::size_t max_words = 4,
                                                   std::size_t max_len = 3) {
  typename FreeRBAlgebra<Ctx>::Elem out = F.zero();
  std::size_t words = 1 + static_cast<std::size_t>(rng.below(max_words));
  for (std::size_t w = 0; w < words; ++w) {
    std::size_t len = 1 + static_cast<std::size_t>(rng.below(max_len));
    typename FreeRBAlgebra<Ctx>::Word slots;
    slots.reserve(len);
    for (std::size_t i = 0; i < len; ++i) slots.push_back(slot(rng));
    out = F.add(out, F.word(slots, Scalar(rng.int_in(-5, 5))));
  }
  return out;
}

// Words over divided powers with basis slots z_0..z_max_slot.
inline FreeRBAlgebra<DPAlgebra>::Elem random_free_dp_elem(Rng& rng,
                                                          const FreeRBAlgebra<DPAlgebra>& F,
                                                          std::size_t max_slot,
                                                          std::size_t max_words = 4,
                                                          std::size_t max_len = 3) {
  const DPAlgebra& A = F.carrier();
  std::size_t cap = A.modulus ? std::min(max_slot, *A.modulus - 1) : max_slot;
  auto slot = [&A, cap](Rng& r) { return A.basis(static_cast<std::size_t>(r.below(cap + 1))); };
  return random_free_elem(rng, F, slot, max_words, max_len);
}

}  // namespace drba
