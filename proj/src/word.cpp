#include "coxbound/word.hpp"

#include <algorithm>
#include <deque>

#include "coxbound/racg.hpp"

namespace coxbound {

namespace {

// Whether word[pos, pos+m) alternates s t s t ... with s = word[pos], t = word[pos+1].
bool alternating_block(std::span<const Generator> word, std::size_t pos, std::size_t m) {
  if (pos + m > word.size()) return false;
  const Generator s = word[pos];
  const Generator t = word[pos + 1];
  for (std::size_t k = 0; k < m; ++k) {
    if (word[pos + k] != (k % 2 == 0 ? s : t)) return false;
  }
  return true;
}

// Right descents of a reduced word: the last letters over its braid class.
GeneratorSet last_letters(const std::set<Word>& cls) {
  GeneratorSet out;
  for (const Word& w : cls) {
    if (!w.empty()) out.insert(w.back());
  }
  return out;
}

}  // namespace

std::set<Word> braid_class(const CoxeterSystem& system, std::span<const Generator> word) {
  std::set<Word> seen;
  std::deque<Word> queue;
  seen.emplace(word.begin(), word.end());
  queue.emplace_back(word.begin(), word.end());
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Generator s = w[i];
      const Generator t = w[i + 1];
      if (s == t) continue;
      const Order m = system.m(s, t);
      if (is_infinite(m) || !alternating_block(w, i, m)) continue;
      Word moved = w;
      for (std::size_t k = 0; k < m; ++k) moved[i + k] = (k % 2 == 0 ? t : s);
      if (seen.insert(moved).second) queue.push_back(std::move(moved));
    }
  }
  return seen;
}

Word reduce_braid(const CoxeterSystem& system, std::span<const Generator> word) {
  check_word(system, word);
  Word current;
  std::set<Word> cls{current};
  for (Generator s : word) {
    auto ends_in_s = std::find_if(cls.begin(), cls.end(), [s](const Word& w) { return !w.empty() && w.back() == s; });
    Word next;
    if (ends_in_s != cls.end()) {
      next.assign(ends_in_s->begin(), ends_in_s->end() - 1);
    } else {
      next = current;
      next.push_back(s);
    }
    cls = braid_class(system, next);
    current = *cls.begin();
  }
  return current;
}

Word reduce(const CoxeterSystem& system, std::span<const Generator> word) {
  if (system.right_angled()) return racg::nf(system, word).word();
  return reduce_braid(system, word);
}

std::size_t word_length(const CoxeterSystem& system, std::span<const Generator> word) {
  return reduce(system, word).size();
}

std::size_t word_distance(const CoxeterSystem& system, std::span<const Generator> u,
                          std::span<const Generator> v) {
  return word_length(system, concat(inverse(u), v));
}

GeneratorSet descent_set(const CoxeterSystem& system, std::span<const Generator> word) {
  if (system.right_angled()) return racg::nf(system, word).descents();
  return last_letters(braid_class(system, reduce_braid(system, word)));
}

bool piece_membership(const CoxeterSystem& system, std::span<const Generator> word, GeneratorSet pieces) {
  return descent_set(system, word) == pieces;
}

}  // namespace coxbound
