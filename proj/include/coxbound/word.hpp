#pragma once

// Word problem, lengths and descent sets for arbitrary Coxeter systems.
//
// Elements are represented by their canonical word: the lexicographically
// least reduced word under the generator order. Two words name the same
// element iff their canonical words are identical.

#include <set>
#include <span>

#include "coxbound/system.hpp"

namespace coxbound {

/// Canonical reduced word of the element named by `word`. Right-angled systems
/// take the normal-form fast path; everything else uses `reduce_braid`.
Word reduce(const CoxeterSystem& system, std::span<const Generator> word);

/// Tits' solution of the word problem, valid for every Coxeter system.
/// Letters are multiplied in one at a time; the right-descent test explores
/// the braid-move class of the current reduced word. Cost grows with the
/// number of reduced expressions, so this is for desk-scale words.
Word reduce_braid(const CoxeterSystem& system, std::span<const Generator> word);

/// All words reachable from `word` by braid moves (s t s ... = t s t ..., m(s,t)
/// letters each side, m finite). For a reduced word this is the full set of
/// reduced expressions of its element.
std::set<Word> braid_class(const CoxeterSystem& system, std::span<const Generator> word);

std::size_t word_length(const CoxeterSystem& system, std::span<const Generator> word);

/// ℓ(u⁻¹v).
std::size_t word_distance(const CoxeterSystem& system, std::span<const Generator> u,
                          std::span<const Generator> v);

/// Right descent set {s : ℓ(ws) < ℓ(w)}.
GeneratorSet descent_set(const CoxeterSystem& system, std::span<const Generator> word);

/// Whether descent_set(word) == pieces.
bool piece_membership(const CoxeterSystem& system, std::span<const Generator> word, GeneratorSet pieces);

}  // namespace coxbound
