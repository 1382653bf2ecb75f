// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "coxbound/ball.hpp"
#include "coxbound/boundary.hpp"
#include "coxbound/decision.hpp"
#include "coxbound/error.hpp"
#include "coxbound/parabolic.hpp"
#include "coxbound/racg.hpp"
#include "coxbound/word.hpp"
#include "support/cayley_oracle.hpp"
#include "support/systems.hpp"

using namespace coxbound;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// Length by the general braid-move algorithm, independent of the right-angled engine.
std::size_t braid_length(const CoxeterSystem& s, const Word& w) { return reduce_braid(s, w).size(); }

GeneratorSet braid_descents(const CoxeterSystem& s, const Word& w) {
  const Word r = reduce_braid(s, w);
  GeneratorSet out;
  for (Generator t = 0; t < static_cast<Generator>(s.rank()); ++t) {
    if (braid_length(s, concat(r, Word{t})) < r.size()) out.insert(t);
  }
  return out;
}

CoxeterSystem restrict_to(const CoxeterSystem& s, GeneratorSet subset) {
  std::vector<Generator> keep(subset.begin(), subset.end());
  CoxeterMatrix m(keep.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(s.label(keep[i]));
    for (std::size_t j = i + 1; j < keep.size(); ++j) m.set_symmetric(i, j, s.m(keep[i], keep[j]));
  }
  return make_system(std::move(m), std::move(labels));
}

sim::Ray ray(Word head, Word period) { return sim::Ray{std::move(head), std::move(period)}; }

Outcome word_problem_oracle() {
  std::vector<CoxeterSystem> systems;
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (CoxeterSystem& s : corpus::right_angled_labelled(rank)) systems.push_back(std::move(s));
  }
  const std::size_t right_angled = systems.size();
  for (Order m : {2u, 3u, 4u}) systems.push_back(corpus::dihedral(m));
  std::size_t words = 0;
  for (const CoxeterSystem& s : systems) {
    const oracle::CayleyBall ball(s, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
      for (const Word& w : corpus::all_words(s.rank(), n)) {
        ++words;
        const auto expected = ball.length(w);
        if (!expected || word_length(s, w) != *expected) {
          return {false, "mismatch at [" + format_word(s, w) + "]"};
        }
      }
    }
  }
  return {true, std::to_string(right_angled) + " right-angled + 3 dihedral systems, " + std::to_string(words) +
                    " words"};
}

Outcome descent_update_lemma() {
  std::mt19937_64 rng(2024);
  std::size_t cases = 0;
  for (const CoxeterSystem& s : corpus::randomized_corpus()) {
    for (int k = 0; k < 500;) {
      const Word w = corpus::random_word(rng, s.rank(), 1 + k % 10);
      const Generator s0 = corpus::random_word(rng, s.rank(), 1).front();
      const GeneratorSet d = descent_set(s, w);
      if (d.contains(s0)) continue;
      ++k;
      ++cases;
      if (racg::descent_update(s, d, s0) != braid_descents(s, concat(w, Word{s0}))) {
        return {false, "w=[" + format_word(s, w) + "] s0=" + s.label(s0)};
      }
    }
  }
  return {true, std::to_string(cases) + " cases over 10 systems"};
}

std::vector<CoxeterSystem> irreducible_right_angled(std::size_t max_rank) {
  std::vector<CoxeterSystem> out;
  for (std::size_t rank = 2; rank <= max_rank; ++rank) {
    for (CoxeterSystem& s : corpus::right_angled_up_to_iso(rank)) {
      if (racg::is_irreducible_racg(s)) out.push_back(std::move(s));
    }
  }
  return out;
}

Outcome push_lemma() {
  std::mt19937_64 rng(77);
  const std::vector<CoxeterSystem> systems = irreducible_right_angled(5);
  for (int k = 0; k < 200; ++k) {
    const CoxeterSystem& s = systems[static_cast<std::size_t>(k) % systems.size()];
    const racg::NormalForm w = racg::nf(s, corpus::random_word(rng, s.rank(), 2 + k % 8));
    if (w.descents() == s.all()) {
      --k;
      continue;
    }
    const Generator last = corpus::random_word(rng, s.rank(), 1).front();
    const racg::Chain chain = racg::build_chain(s, w.descents(), last);
    const racg::NormalForm pushed = racg::push_to_singleton(s, w, chain);
    if (braid_descents(s, concat(w.word(), chain.sequence)) != GeneratorSet::single(last) ||
        pushed.descents() != GeneratorSet::single(last)) {
      return {false, "w=[" + format_word(s, w.word()) + "]"};
    }
  }
  return {true, "200 cases over " + std::to_string(systems.size()) + " irreducible systems"};
}

Outcome common_normalizer_lemma() {
  std::size_t systems = 0;
  std::size_t pairs = 0;
  for (const CoxeterSystem& s : irreducible_right_angled(4)) {
    if (decision::boundary_size_class(s) != decision::BoundarySize::MoreThanTwo) continue;
    ++systems;
    const std::vector<racg::NormalForm> elements = ball_racg(s, 6);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        ++pairs;
        Word x;
        try {
          x = racg::common_normalizer_step(s, elements[i], elements[j]);
        } catch (const Error&) {
          return {false, "NoSuchX for [" + format_word(s, elements[i].word()) + "], [" +
                             format_word(s, elements[j].word()) + "]"};
        }
        const GeneratorSet covered =
            racg::nf_multiply(s, elements[i], x).descents() | racg::nf_multiply(s, elements[j], x).descents();
        if (x.size() > 1 || covered == s.all()) return {false, "bad x"};
      }
    }
  }
  return {true, std::to_string(systems) + " systems, " + std::to_string(pairs) + " ordered pairs, 0 NoSuchX"};
}

Outcome uniform_descent_condition() {
  std::size_t checked = 0;
  for (const CoxeterSystem& s : {corpus::free3(), corpus::pentagon()}) {
    for (Generator s0 = 0; s0 < static_cast<Generator>(s.rank()); ++s0) {
      for (Generator t0 : s.free_with(s0)) {
        ++checked;
        if (!decision::check_uniform_descent(s, s0, t0, 2 * s.rank() + 1, 4).holds) {
          return {false, "fails for (" + s.label(s0) + "," + s.label(t0) + ")"};
        }
      }
    }
  }
  return {true, std::to_string(checked) + " ordered infinite-order pairs, K = 2 rank + 1, L = 4"};
}

// Independent check: S̃ splits into two mutually commuting non-empty parts.
bool splits(const CoxeterSystem& s, GeneratorSet tilde) {
  const std::vector<Generator> g(tilde.begin(), tilde.end());
  for (std::uint32_t mask = 1; mask + 1 < (1U << g.size()); ++mask) {
    bool commuting = true;
    for (std::size_t i = 0; i < g.size() && commuting; ++i) {
      for (std::size_t j = 0; j < g.size() && commuting; ++j) {
        if (((mask >> i) & 1U) && !((mask >> j) & 1U)) commuting = s.m(g[i], g[j]) == 2;
      }
    }
    if (commuting) return true;
  }
  return false;
}

Outcome main_equivalence() {
  std::size_t count = 0;
  for (std::size_t rank = 1; rank <= 5; ++rank) {
    for (const CoxeterSystem& s : corpus::right_angled_up_to_iso(rank)) {
      if (decision::boundary_size_class(s) != decision::BoundarySize::MoreThanTwo) continue;
      ++count;
      const bool scrambled = decision::decide_scrambled_racg(s).outcome == decision::Outcome::Scrambled;
      const bool obstructed = decision::product_obstruction(s).has_value();
      if (scrambled == obstructed || obstructed != splits(s, tilde_S(s))) {
        return {false, "disagreement on " + format_set(s, s.all()) + " rank " + std::to_string(s.rank())};
      }
    }
  }
  return {true, std::to_string(count) + " systems up to isomorphism"};
}

Outcome liminf_simulation() {
  const CoxeterSystem s = corpus::free3();
  const sim::Ray ab = ray({}, {0, 1});
  const sim::Ray ac = ray({}, {0, 2});
  const std::size_t depth = 32;
  const sim::LiminfParameters p = sim::derive_liminf_parameters(s, ab, ac, 0, 8);
  const sim::MetricSeries series = sim::liminf_experiment(s, ab, ac, p.s0, p.t0, p.x, 40, depth);
  const Dyadic threshold = Dyadic::inverse_power_of_two(8);
  std::size_t reached = series.entries.size();
  for (std::size_t i = 0; i < series.entries.size(); ++i) {
    if (series.entries[i].second < threshold) {
      reached = i;
      break;
    }
  }
  if (reached == series.entries.size()) return {false, "never below 2^-8"};
  for (std::size_t i = reached + 1; i < series.entries.size(); ++i) {
    if (series.entries[i - 1].second < series.entries[i].second) return {false, "tail increases"};
  }
  // Oracle: the general reduction of g_k·(long prefix) agrees on both rays to depth >= 8.
  const std::size_t k = series.entries[reached].first;
  const Word g = sim::liminf_sequence(s, p.s0, p.t0, p.x, k).back();
  const Word a = reduce_braid(s, concat(g, sim::ray_word(ab, depth + 2 * g.size() + 2)));
  const Word b = reduce_braid(s, concat(g, sim::ray_word(ac, depth + 2 * g.size() + 2)));
  std::size_t agree = 0;
  while (agree < a.size() && agree < b.size() && a[agree] == b[agree]) ++agree;
  const auto u = sim::translate_ray(s, g, ab, depth);
  const bool matches = std::equal(u.back().word().begin(), u.back().word().end(), a.begin());
  if (agree < 8 || !matches) return {false, "oracle prefixes agree only to " + std::to_string(agree)};
  return {true, "x=[" + format_word(s, p.x) + "], below 2^-8 at k=" + std::to_string(k) + " (" +
                    series.entries[reached].second.to_decimal() + "), oracle prefixes agree to depth " +
                    std::to_string(agree)};
}

Outcome obstruction_simulation() {
  const CoxeterSystem s = corpus::dinf_x_dinf();
  const sim::Ray ab = ray({}, {0, 1});
  const sim::Ray cd = ray({}, {2, 3});
  const Dyadic at8 = sim::obstruction_scan(s, ab, cd, 8, 16).value;
  const Dyadic at4 = sim::obstruction_scan(s, ab, cd, 4, 16).value;
  const Dyadic pinned = Dyadic::of(65535, 16);
  const bool ok = Dyadic{} < at8 && at8 == at4 && at8 == pinned;
  return {ok, "min at L=8 " + at8.to_decimal() + ", at L=4 " + at4.to_decimal() + ", pinned 65535/65536"};
}

Outcome limsup_simulation() {
  const sim::ScanResult r = sim::limsup_scan(corpus::free3(), ray({}, {0, 1}), ray({}, {0, 2}), 6, 16);
  const bool ok = Dyadic{} < r.value && r.value == Dyadic::of(65535, 16);
  return {ok, "max " + r.value.to_decimal() + " at g=[" + format_word(corpus::free3(), r.witness) +
                  "], pinned 65535/65536"};
}

Outcome finite_type_example() {
  const CoxeterSystem f = corpus::figure1();
  const GeneratorSet centralizer = GeneratorSet::single(0) | GeneratorSet::single(1) | GeneratorSet::single(2);
  const GeneratorSet triangle = GeneratorSet::single(1) | GeneratorSet::single(2) | GeneratorSet::single(3);
  const bool classified = is_spherical(f, centralizer) && !is_spherical(f, triangle);
  // Cross-check by enumeration: 2 × 8 elements, and the triangle group exceeds any cap.
  const auto order = oracle::group_order(restrict_to(f, centralizer), 1000);
  const bool enumerated = order == 16u && !oracle::group_order(restrict_to(f, triangle), 5000).has_value();
  return {classified && enumerated, "{s,t1,t2} finite of order 16, {t1,t2,t3} infinite"};
}

Outcome hyperbolicity() {
  const bool ok = racg::is_hyperbolic_racg(corpus::pentagon()) && decision::expansiveness_racg(corpus::pentagon()) &&
                  !racg::is_hyperbolic_racg(corpus::dinf_x_dinf()) &&
                  !decision::expansiveness_racg(corpus::dinf_x_dinf());
  return {ok, "5-cycle hyperbolic and expansive, D∞×D∞ neither"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"word problem against Cayley graph BFS", word_problem_oracle},
      {"descent update", descent_update_lemma},
      {"push to a singleton descent", push_lemma},
      {"common normalizer step", common_normalizer_lemma},
      {"uniform descent condition at desk scale", uniform_descent_condition},
      {"scrambled iff no product obstruction", main_equivalence},
      {"liminf simulation", liminf_simulation},
      {"obstruction simulation", obstruction_simulation},
      {"limsup positivity", limsup_simulation},
      {"finite-type recognition", finite_type_example},
      {"hyperbolicity and expansiveness", hyperbolicity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
