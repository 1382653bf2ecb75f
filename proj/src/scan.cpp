#include "coxbound/scan.hpp"

#include <exception>
#include <mutex>


#include "coxbound/word.hpp"

namespace coxbound::scan {

namespace {

// Holds the first exception thrown inside a parallel region.
class ErrorSlot {
 public:
  void capture() {
    std::lock_guard lock(mutex_);
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

// Descent sets of w·x for a fixed w; right-angled systems keep w in normal form.
class ProductDescents {
 public:
  ProductDescents(const CoxeterSystem& system, const Word& w) : system_(system), w_(w) {
    if (system.right_angled()) w_nf_ = racg::nf(system, w);
  }
  GeneratorSet operator()(const Word& x) const {
    if (system_.right_angled()) return racg::nf_multiply(system_, w_nf_, x).descents();
    return descent_set(system_, concat(w_, x));
  }

 private:
  const CoxeterSystem& system_;
  const Word& w_;
  racg::NormalForm w_nf_;
};

std::int64_t first_witness(const ProductDescents& left, const ProductDescents& right,
                           const std::vector<Word>& candidates, GeneratorSet target) {
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (left(candidates[c]) == target && right(candidates[c]) == target) return static_cast<std::int64_t>(c);
  }
  return kNoWitness;
}

}  // namespace

std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index) {
  std::size_t i = 0;
  while (index >= n - i) {
    index -= n - i;
    ++i;
  }
  return {i, i + index};
}

std::vector<Dyadic> proxy_distances_serial(const CoxeterSystem& system, const std::vector<Word>& elements,
                                           const sim::Ray& a, const sim::Ray& b, std::size_t depth) {
  std::vector<Dyadic> out;
  out.reserve(elements.size());
  for (const Word& g : elements) out.push_back(sim::proxy_distance(system, g, a, b, depth));
  return out;
}

std::vector<Dyadic> proxy_distances_parallel(const CoxeterSystem& system, const std::vector<Word>& elements,
                                             const sim::Ray& a, const sim::Ray& b, std::size_t depth) {
  std::vector<Dyadic> out(elements.size());
  ErrorSlot error;
  const auto n = static_cast<std::int64_t>(elements.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] =
          sim::proxy_distance(system, elements[static_cast<std::size_t>(i)], a, b, depth);
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return out;
}

std::vector<std::int64_t> descent_witnesses_serial(const CoxeterSystem& system, const std::vector<Word>& elements,
                                                   const std::vector<Word>& candidates, Generator s0) {
  const GeneratorSet target = GeneratorSet::single(s0);
  std::vector<ProductDescents> descents;
  descents.reserve(elements.size());
  for (const Word& w : elements) descents.emplace_back(system, w);
  std::vector<std::int64_t> out;
  out.reserve(pair_count(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i; j < elements.size(); ++j) {
      out.push_back(first_witness(descents[i], descents[j], candidates, target));
    }
  }
  return out;
}

std::vector<std::int64_t> descent_witnesses_parallel(const CoxeterSystem& system,
                                                     const std::vector<Word>& elements,
                                                     const std::vector<Word>& candidates, Generator s0) {
  const GeneratorSet target = GeneratorSet::single(s0);
  std::vector<ProductDescents> descents;
  descents.reserve(elements.size());
  for (const Word& w : elements) descents.emplace_back(system, w);
  const std::size_t n = elements.size();
  std::vector<std::int64_t> out(pair_count(n), kNoWitness);
  ErrorSlot error;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < rows; ++i) {
    try {
      const auto row = static_cast<std::size_t>(i);
      // Row i starts after rows 0..i-1, which hold n, n-1, ..., n-i+1 pairs.
      std::size_t slot = row * n - row * (row - 1) / 2;
      for (std::size_t j = row; j < n; ++j) out[slot++] = first_witness(descents[row], descents[j], candidates, target);
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return out;
}

}  // namespace coxbound::scan
