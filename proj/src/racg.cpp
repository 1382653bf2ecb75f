#include "coxbound/racg.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "coxbound/error.hpp"

namespace coxbound::racg {

void require_right_angled(const CoxeterSystem& system) {
  if (!system.right_angled()) throw Error(ErrorKind::NotRightAngled, "system has an entry other than 2 or inf");
}

Word lex_normalize(const CoxeterSystem& system, std::span<const Generator> reduced) {
  const std::size_t rank = system.rank();
  const std::size_t n = reduced.size();
  // Occurrence positions of each generator, consumed front to back.
  std::vector<std::vector<std::size_t>> positions(rank);
  for (std::size_t p = 0; p < n; ++p) positions[static_cast<std::size_t>(reduced[p])].push_back(p);
  std::vector<std::size_t> next(rank, 0);
  auto front = [&](Generator g) {
    const auto& list = positions[static_cast<std::size_t>(g)];
    const std::size_t k = next[static_cast<std::size_t>(g)];
    return k < list.size() ? list[k] : n;
  };

  GeneratorSet remaining;
  for (Generator g : reduced) remaining.insert(g);

  Word out;
  out.reserve(n);
  while (out.size() < n) {
    Generator pick = -1;
    for (Generator g : remaining) {
      const std::size_t pos = front(g);
      bool blocked = false;
      for (Generator t : system.free_with(g) & remaining) {
        if (front(t) < pos) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        pick = g;
        break;
      }
    }
    out.push_back(pick);
    auto& k = next[static_cast<std::size_t>(pick)];
    ++k;
    if (k == positions[static_cast<std::size_t>(pick)].size()) remaining.erase(pick);
  }
  return out;
}

namespace {

// Position of the occurrence of s that cancels against a trailing s, if any.
std::optional<std::size_t> cancelling_position(const CoxeterSystem& system, std::span<const Generator> reduced,
                                               Generator s) {
  for (std::size_t p = reduced.size(); p-- > 0;) {
    if (reduced[p] == s) return p;
    if (!system.commuting(s).contains(reduced[p])) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Word cancel(const CoxeterSystem& system, std::span<const Generator> word) {
  Word out;
  out.reserve(word.size());
  for (Generator s : word) {
    if (auto p = cancelling_position(system, out, s)) {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(*p));
    } else {
      out.push_back(s);
    }
  }
  return out;
}

GeneratorSet reduced_descents(const CoxeterSystem& system, std::span<const Generator> reduced) {
  GeneratorSet after;
  GeneratorSet out;
  for (std::size_t p = reduced.size(); p-- > 0;) {
    const Generator t = reduced[p];
    if (!after.contains(t) && !after.intersects(system.free_with(t))) out.insert(t);
    after.insert(t);
  }
  return out;
}

NormalForm make_normal_form(const CoxeterSystem& system, Word reduced) {
  Word word = lex_normalize(system, reduced);
  const GeneratorSet descents = reduced_descents(system, word);
  return NormalForm(std::move(word), descents);
}

NormalForm nf(const CoxeterSystem& system, std::span<const Generator> word) {
  require_right_angled(system);
  check_word(system, word);
  return make_normal_form(system, cancel(system, word));
}

NormalForm nf_append(const CoxeterSystem& system, const NormalForm& x, Generator s) {
  require_right_angled(system);
  check_word(system, std::span<const Generator>(&s, 1));
  Word word = x.word();
  if (auto p = cancelling_position(system, word, s)) {
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(*p));
  } else {
    word.push_back(s);
  }
  return make_normal_form(system, std::move(word));
}

NormalForm nf_multiply(const CoxeterSystem& system, const NormalForm& x, std::span<const Generator> word) {
  require_right_angled(system);
  check_word(system, word);
  Word joined = x.word();
  for (Generator s : word) {
    if (auto p = cancelling_position(system, joined, s)) {
      joined.erase(joined.begin() + static_cast<std::ptrdiff_t>(*p));
    } else {
      joined.push_back(s);
    }
  }
  return make_normal_form(system, std::move(joined));
}

GeneratorSet descent_update(const CoxeterSystem& system, GeneratorSet descents, Generator s0) {
  require_right_angled(system);
  if (descents.contains(s0)) {
    throw Error(ErrorKind::DescentContainsS0, "generator " + system.label(s0) + " is already a descent");
  }
  GeneratorSet out = descents & system.commuting(s0);
  out.insert(s0);
  return out;
}

bool free_graph_connected(const CoxeterSystem& system, GeneratorSet subset) {
  if (subset.size() <= 1) return true;
  GeneratorSet reached = GeneratorSet::single(subset.min());
  GeneratorSet frontier = reached;
  while (!frontier.empty()) {
    GeneratorSet next;
    for (Generator g : frontier) next = next | (system.free_with(g) & subset);
    frontier = next - reached;
    reached = reached | frontier;
  }
  return reached == subset;
}

bool is_irreducible_racg(const CoxeterSystem& system) {
  require_right_angled(system);
  return free_graph_connected(system, system.all());
}

Chain build_chain(const CoxeterSystem& system, GeneratorSet first_forbidden, Generator last) {
  require_right_angled(system);
  check_word(system, std::span<const Generator>(&last, 1));
  if (!free_graph_connected(system, system.all())) {
    throw Error(ErrorKind::NotIrreducible, "the inf-graph on S is disconnected");
  }
  const GeneratorSet allowed = system.all() - first_forbidden;
  if (allowed.empty()) throw Error(ErrorKind::ForbiddenCoversS, "every generator is forbidden as a first letter");

  const std::size_t rank = system.rank();
  const Generator root = allowed.min();

  // Breadth-first spanning tree of the inf-graph.
  std::vector<Generator> parent(rank, -1);
  std::vector<std::vector<Generator>> children(rank);
  GeneratorSet reached = GeneratorSet::single(root);
  std::vector<Generator> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Generator v = queue[head];
    for (Generator c : system.free_with(v) - reached) {
      reached.insert(c);
      parent[static_cast<std::size_t>(c)] = v;
      children[static_cast<std::size_t>(v)].push_back(c);
      queue.push_back(c);
    }
  }

  // Successor of each vertex on the root -> last path.
  std::vector<Generator> path_next(rank, -1);
  for (Generator v = last; v != root; v = parent[static_cast<std::size_t>(v)]) {
    path_next[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] = v;
  }

  Word walk;
  auto tour = [&](auto&& self, Generator v) -> void {
    walk.push_back(v);
    for (Generator c : children[static_cast<std::size_t>(v)]) {
      self(self, c);
      walk.push_back(v);
    }
  };
  for (Generator v = root;;) {
    walk.push_back(v);
    const Generator onward = path_next[static_cast<std::size_t>(v)];
    for (Generator c : children[static_cast<std::size_t>(v)]) {
      if (c == onward) continue;
      tour(tour, c);
      walk.push_back(v);
    }
    if (onward < 0) break;
    v = onward;
  }
  return Chain{std::move(walk)};
}

NormalForm push_to_singleton(const CoxeterSystem& system, const NormalForm& w, const Chain& chain) {
  require_right_angled(system);
  if (!chain.sequence.empty() && w.descents().contains(chain.sequence.front())) {
    throw Error(ErrorKind::ChainStartsInDescent,
                "chain starts with " + system.label(chain.sequence.front()) + ", a descent of w");
  }
  return nf_multiply(system, w, chain.sequence);
}

Word common_normalizer_step(const CoxeterSystem& system, const NormalForm& w, const NormalForm& v) {
  require_right_angled(system);
  const GeneratorSet all = system.all();
  if ((w.descents() | v.descents()) != all) return {};
  for (GeneratorSet candidates : {w.descents(), v.descents()}) {
    for (Generator s0 : candidates) {
      const GeneratorSet joint = nf_append(system, w, s0).descents() | nf_append(system, v, s0).descents();
      if (joint != all) return {s0};
    }
  }
  throw Error(ErrorKind::NoSuchX, "no x of length <= 1 separates the descent sets of " +
                                      format_word(system, w.word()) + " and " + format_word(system, v.word()));
}

Word joint_push(const CoxeterSystem& system, const NormalForm& w, const NormalForm& v, Generator s0) {
  Word x = common_normalizer_step(system, w, v);
  const GeneratorSet forbidden = nf_multiply(system, w, x).descents() | nf_multiply(system, v, x).descents();
  const Chain chain = build_chain(system, forbidden, s0);
  x.insert(x.end(), chain.sequence.begin(), chain.sequence.end());
  return x;
}

bool is_hyperbolic_racg(const CoxeterSystem& system) {
  require_right_angled(system);
  const auto rank = static_cast<Generator>(system.rank());
  for (Generator a = 0; a < rank; ++a) {
    for (Generator b : system.free_with(a)) {
      if (b < a) continue;
      const GeneratorSet both = system.commuting(a) & system.commuting(b);
      for (Generator c : both) {
        if (system.free_with(c).intersects(both)) return false;
      }
    }
  }
  return true;
}

GeneratorSet link(const CoxeterSystem& system, Generator s) { return system.commuting(s); }

bool generator_centralizer_finite(const CoxeterSystem& system, Generator s) {
  require_right_angled(system);
  const GeneratorSet lk = link(system, s);
  for (Generator t : lk) {
    if (system.free_with(t).intersects(lk)) return false;
  }
  return true;
}

}  // namespace coxbound::racg
