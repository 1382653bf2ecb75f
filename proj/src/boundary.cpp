#include "coxbound/boundary.hpp"

#include <algorithm>

#include "coxbound/ball.hpp"
#include "coxbound/error.hpp"
#include "coxbound/scan.hpp"
#include "coxbound/word.hpp"

namespace coxbound::sim {

Word ray_word(const Ray& ray, std::size_t n) {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n && i < ray.head.size(); ++i) out.push_back(ray.head[i]);
  for (std::size_t i = 0; out.size() < n; ++i) out.push_back(ray.period[i % ray.period.size()]);
  return out;
}

std::size_t minimal_horizon(const Ray& ray) { return ray.head.size() + 2 * ray.period.size(); }

namespace {

void check_ray(const CoxeterSystem& system, const Ray& ray) {
  racg::require_right_angled(system);
  if (ray.period.empty()) throw Error(ErrorKind::InvalidRay, "ray period is empty");
  check_word(system, ray.head);
  check_word(system, ray.period);
}

void check_depth(std::size_t depth) {
  if (depth > Dyadic::kMaxExponent) {
    throw Error(ErrorKind::DepthTooLarge, "depth " + std::to_string(depth) + " exceeds 62");
  }
}

struct Occurrence {
  Generator letter;
  bool final_block;
};

// Recurrent part of g·(first n letters of the ray), as a reduced word in
// trace order (not yet normalised).
Word recurrent_part(const CoxeterSystem& system, std::span<const Generator> g, const Ray& ray, std::size_t n) {
  const Word raw = concat(g, ray_word(ray, n));
  const std::size_t final_from = raw.size() - ray.period.size();

  std::vector<Occurrence> reduced;
  reduced.reserve(raw.size());
  for (std::size_t p = 0; p < raw.size(); ++p) {
    const Generator s = raw[p];
    bool cancelled = false;
    for (std::size_t q = reduced.size(); q-- > 0;) {
      if (reduced[q].letter == s) {
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(q));
        cancelled = true;
        break;
      }
      if (!system.commuting(s).contains(reduced[q].letter)) break;
    }
    if (!cancelled) reduced.push_back({s, p >= final_from});
  }

  // Down-closure of the final block: an occurrence is kept when some kept
  // occurrence after it does not commute with it.
  std::vector<bool> keep(reduced.size(), false);
  GeneratorSet kept_after;
  for (std::size_t q = reduced.size(); q-- > 0;) {
    const Generator t = reduced[q].letter;
    const GeneratorSet dependent = system.free_with(t) | GeneratorSet::single(t);
    if (reduced[q].final_block || kept_after.intersects(dependent)) {
      keep[q] = true;
      kept_after.insert(t);
    }
  }
  Word out;
  for (std::size_t q = 0; q < reduced.size(); ++q) {
    if (keep[q]) out.push_back(reduced[q].letter);
  }
  return out;
}

}  // namespace

bool validate_ray(const CoxeterSystem& system, const Ray& ray, std::size_t horizon) {
  check_ray(system, ray);
  if (horizon < minimal_horizon(ray)) {
    throw Error(ErrorKind::HorizonTooSmall, "horizon " + std::to_string(horizon) + " is below " +
                                                std::to_string(minimal_horizon(ray)));
  }
  // Prefixes of a reduced word are reduced, so the longest prefix decides.
  const Word prefix = ray_word(ray, horizon);
  return racg::cancel(system, prefix).size() == horizon;
}

racg::NormalForm ray_prefix(const CoxeterSystem& system, const Ray& ray, std::size_t n) {
  check_ray(system, ray);
  return racg::nf(system, ray_word(ray, n));
}

Ray act(const CoxeterSystem& system, std::span<const Generator> g, const Ray& ray) {
  check_ray(system, ray);
  // Cancellation against g reaches at most ℓ(g) + 1 period blocks past the head.
  const std::size_t n = ray.head.size() + (g.size() + 1) * ray.period.size();
  return Ray{racg::nf(system, concat(g, ray_word(ray, n))).word(), ray.period};
}

std::vector<racg::NormalForm> translate_ray(const CoxeterSystem& system, std::span<const Generator> g,
                                            const Ray& ray, std::size_t depth) {
  check_ray(system, ray);
  check_word(system, g);
  const std::size_t n = depth + 2 * g.size() + ray.head.size() + ray.period.size();
  const Word first = racg::lex_normalize(system, recurrent_part(system, g, ray, n));
  const Word second = racg::lex_normalize(system, recurrent_part(system, g, ray, n + ray.period.size()));
  if (first.size() < depth || second.size() < depth ||
      !std::equal(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(depth), second.begin())) {
    throw Error(ErrorKind::Unstable, "prefixes of g·ray did not stabilise at N=" + std::to_string(n) +
                                         " for g = [" + format_word(system, g) + "]");
  }
  // Prefixes of a lexicographic normal form are themselves normal forms.
  std::vector<racg::NormalForm> out;
  out.reserve(depth);
  for (std::size_t i = 1; i <= depth; ++i) {
    out.push_back(racg::make_normal_form(system, Word(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(i))));
  }
  return out;
}

Dyadic proxy_distance_of_prefixes(const CoxeterSystem& system, const std::vector<racg::NormalForm>& u,
                                  const std::vector<racg::NormalForm>& v) {
  const std::size_t depth = std::min(u.size(), v.size());
  check_depth(depth);
  Dyadic total;
  for (std::size_t i = 1; i <= depth; ++i) {
    const Word between = concat(inverse(u[i - 1].word()), v[i - 1].word());
    const Dyadic d = Dyadic::integer(racg::nf(system, between).length());
    total += std::min(d, Dyadic::inverse_power_of_two(static_cast<unsigned>(i)));
  }
  return total;
}

Dyadic proxy_distance(const CoxeterSystem& system, std::span<const Generator> g, const Ray& ray_a,
                      const Ray& ray_b, std::size_t depth) {
  check_depth(depth);
  return proxy_distance_of_prefixes(system, translate_ray(system, g, ray_a, depth),
                                    translate_ray(system, g, ray_b, depth));
}

std::vector<Word> liminf_sequence(const CoxeterSystem& system, Generator s0, Generator t0,
                                  std::span<const Generator> x, std::size_t k_max) {
  if (!is_infinite(system.m(s0, t0))) {
    throw Error(ErrorKind::OrderNotInfinite,
                "m(" + system.label(s0) + "," + system.label(t0) + ") = " + format_order(system.m(s0, t0)));
  }
  check_word(system, x);
  const Word x_inv = inverse(x);
  std::vector<Word> out;
  Word power;
  for (std::size_t k = 1; k <= k_max; ++k) {
    power.push_back(s0);
    power.push_back(t0);
    out.push_back(concat(power, x_inv));
  }
  return out;
}

namespace {

std::vector<Dyadic> distances(const CoxeterSystem& system, const std::vector<Word>& elements, const Ray& a,
                              const Ray& b, std::size_t depth, Execution exec) {
  check_ray(system, a);
  check_ray(system, b);
  check_depth(depth);
  return exec == Execution::Serial ? scan::proxy_distances_serial(system, elements, a, b, depth)
                                   : scan::proxy_distances_parallel(system, elements, a, b, depth);
}

}  // namespace

MetricSeries liminf_experiment(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b, Generator s0,
                               Generator t0, std::span<const Generator> x, std::size_t k_max,
                               std::size_t depth, Execution exec) {
  const std::vector<Word> sequence = liminf_sequence(system, s0, t0, x, k_max);
  const std::vector<Dyadic> values = distances(system, sequence, ray_a, ray_b, depth, exec);
  MetricSeries series;
  for (std::size_t k = 0; k < values.size(); ++k) series.entries.emplace_back(k + 1, values[k]);
  return series;
}

LiminfParameters derive_liminf_parameters(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b,
                                          Generator s0, std::size_t prefix_length) {
  check_ray(system, ray_a);
  check_ray(system, ray_b);
  const GeneratorSet partners = system.free_with(s0);
  if (partners.empty()) {
    throw Error(ErrorKind::OrderNotInfinite, "no generator has infinite order product with " + system.label(s0));
  }
  const racg::NormalForm w = racg::nf(system, inverse(ray_word(ray_a, prefix_length)));
  const racg::NormalForm v = racg::nf(system, inverse(ray_word(ray_b, prefix_length)));
  return LiminfParameters{s0, partners.min(), racg::joint_push(system, w, v, s0)};
}

namespace {

ScanResult extreme(const std::vector<Word>& elements, const std::vector<Dyadic>& values, ScanKind kind) {
  ScanResult result;
  result.elements = elements.size();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool better = i == 0 || (kind == ScanKind::Max ? values[i] > result.value : values[i] < result.value);
    if (better) {
      result.value = values[i];
      result.witness = elements[i];
    }
  }
  return result;
}

}  // namespace

ScanResult limsup_scan(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b, std::size_t radius,
                       std::size_t depth, Execution exec) {
  const std::vector<Word> elements = ball(system, radius);
  return extreme(elements, distances(system, elements, ray_a, ray_b, depth, exec), ScanKind::Max);
}

ScanResult obstruction_scan(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b, std::size_t radius,
                            std::size_t depth, Execution exec) {
  const std::vector<Word> elements = ball(system, radius);
  return extreme(elements, distances(system, elements, ray_a, ray_b, depth, exec), ScanKind::Min);
}

MetricSeries scan_profile(const CoxeterSystem& system, const Ray& ray_a, const Ray& ray_b, std::size_t radius,
                          std::size_t depth, ScanKind kind, Execution exec) {
  const std::vector<Word> elements = ball(system, radius);
  const std::vector<Dyadic> values = distances(system, elements, ray_a, ray_b, depth, exec);
  MetricSeries series;
  // Elements come in shortlex order, so each radius extends the previous prefix.
  std::size_t i = 0;
  Dyadic running;
  for (std::size_t r = 0; r <= radius; ++r) {
    for (; i < elements.size() && elements[i].size() <= r; ++i) {
      const bool better = i == 0 || (kind == ScanKind::Max ? values[i] > running : values[i] < running);
      if (better) running = values[i];
    }
    series.entries.emplace_back(r, running);
  }
  return series;
}

}  // namespace coxbound::sim
