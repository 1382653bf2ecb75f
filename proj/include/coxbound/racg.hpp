#pragma once

// Right-angled Coxeter systems (every m(s,t) is 2 or ∞).
//
// Reduced words of a right-angled element differ only by swapping adjacent
// commuting letters, so an element is a trace over the commutation relation.
// Its normal form is the lexicographically least linearisation of that trace,
// which coincides with the canonical word used by `coxbound::reduce`.

#include <span>
#include <vector>

#include "coxbound/system.hpp"

namespace coxbound::racg {

class NormalForm {
 public:
  /// The identity element.
  NormalForm() = default;

  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  GeneratorSet descents() const noexcept { return descents_; }

  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const NormalForm& a, const NormalForm& b) { return a.word_ <=> b.word_; }

 private:
  friend NormalForm make_normal_form(const CoxeterSystem&, Word);
  NormalForm(Word word, GeneratorSet descents) : word_(std::move(word)), descents_(descents) {}

  Word word_;
  GeneratorSet descents_;
};

/// A sequence t_1 ... t_n with m(t_i, t_{i+1}) = ∞ whose entries cover S.
struct Chain {
  Word sequence;
};

/// Wraps an already-reduced word: lex-normalises it and caches its descents.
/// The caller guarantees reducedness; used by the routines below.
NormalForm make_normal_form(const CoxeterSystem& system, Word reduced);

/// Lexicographically least linearisation of the trace of a reduced word.
/// O(ℓ · rank) bit operations.
Word lex_normalize(const CoxeterSystem& system, std::span<const Generator> reduced);

/// Cancels a reduced word by free reduction modulo commutation. Output is
/// reduced but not normalised.
Word cancel(const CoxeterSystem& system, std::span<const Generator> word);

/// Descent set of a reduced word: the letters whose last occurrence is
/// followed only by letters commuting with it.
GeneratorSet reduced_descents(const CoxeterSystem& system, std::span<const Generator> reduced);

/// Throws NotRightAngled.
void require_right_angled(const CoxeterSystem& system);

NormalForm nf(const CoxeterSystem& system, std::span<const Generator> word);

/// Normal form of x·s, linear in ℓ(x).
NormalForm nf_append(const CoxeterSystem& system, const NormalForm& x, Generator s);

/// Normal form of x·word, one letter at a time.
NormalForm nf_multiply(const CoxeterSystem& system, const NormalForm& x, std::span<const Generator> word);

/// {t ∈ descents : m(t,s0) = 2} ∪ {s0}: the descent set of w·s0 for every w
/// whose descent set is `descents`. Throws DescentContainsS0 if s0 ∈ descents.
GeneratorSet descent_update(const CoxeterSystem& system, GeneratorSet descents, Generator s0);

/// Whether the graph on S with edges {s,t : m(s,t) = ∞} is connected.
bool is_irreducible_racg(const CoxeterSystem& system);

/// Same test restricted to `subset` (empty and singleton subsets count as connected).
bool free_graph_connected(const CoxeterSystem& system, GeneratorSet subset);

/// Builds a chain t_1 ... t_n with t_1 ∉ first_forbidden and t_n = last.
///
/// The chain is a walk on a breadth-first spanning tree of the ∞-graph,
/// rooted at the smallest generator outside `first_forbidden`: every subtree
/// hanging off the root-to-`last` path is toured (down and back up) before
/// the walk steps along the path, and the walk stops at `last` without
/// returning. Its length is 2|S| - (path length) ≤ 2|S| - 1.
/// Throws NotIrreducible or ForbiddenCoversS.
Chain build_chain(const CoxeterSystem& system, GeneratorSet first_forbidden, Generator last);

/// Normal form of w·t_1⋯t_n; its descent set is {t_n}.
/// Throws ChainStartsInDescent if t_1 is a descent of w.
NormalForm push_to_singleton(const CoxeterSystem& system, const NormalForm& w, const Chain& chain);

/// A word x with ℓ(x) ≤ 1 and descents(wx) ∪ descents(vx) ≠ S. Prefers x = 1,
/// then the smallest s0 ∈ descents(w) that works, then the smallest in
/// descents(v). Throws NoSuchX when none does, which only happens when the
/// hypotheses (irreducible, more than two boundary points) are violated.
Word common_normalizer_step(const CoxeterSystem& system, const NormalForm& w, const NormalForm& v);

/// A word x = x_0·t_1⋯t_n with descents(wx) = descents(vx) = {s0}, where x_0
/// comes from `common_normalizer_step` and the chain ends at s0.
Word joint_push(const CoxeterSystem& system, const NormalForm& w, const NormalForm& v, Generator s0);

/// No quadruple {a,b,c,d} with m(a,b) = m(c,d) = ∞ and all four cross pairs
/// commuting (such a quadruple spans D∞ × D∞ and so a flat).
bool is_hyperbolic_racg(const CoxeterSystem& system);

/// {t : m(s,t) = 2}
GeneratorSet link(const CoxeterSystem& system, Generator s);

/// Whether every pair in link(s) commutes, so that Z_s = ⟨s⟩ × W_link(s) is finite.
bool generator_centralizer_finite(const CoxeterSystem& system, Generator s);

}  // namespace coxbound::racg
