#pragma once

// Coxeter matrices, Coxeter systems, words and generator subsets.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coxbound {

using Generator = int;
using Word = std::vector<Generator>;

/// Entry of a Coxeter matrix. `kInfinite` stands for m(s,t) = ∞.
using Order = std::uint32_t;
inline constexpr Order kInfinite = 0;

inline constexpr bool is_infinite(Order m) noexcept { return m == kInfinite; }

inline constexpr std::size_t kMaxRank = 64;

/// A subset of {0, ..., rank-1} stored as a bitmask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<Generator> members) {
    for (Generator g : members) insert(g);
  }

  static constexpr GeneratorSet full(std::size_t rank) {
    return GeneratorSet(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }
  static constexpr GeneratorSet single(Generator g) { return GeneratorSet(std::uint64_t{1} << g); }

  constexpr bool contains(Generator g) const { return (bits_ >> g) & 1U; }
  constexpr void insert(Generator g) { bits_ |= std::uint64_t{1} << g; }
  constexpr void erase(Generator g) { bits_ &= ~(std::uint64_t{1} << g); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Smallest member; undefined on the empty set.
  constexpr Generator min() const { return std::countr_zero(bits_); }

  constexpr bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(GeneratorSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ | b.bits_); }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr GeneratorSet operator-(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GeneratorSet a, GeneratorSet b) = default;
  friend constexpr auto operator<=>(GeneratorSet a, GeneratorSet b) = default;

  class iterator {
   public:
    using value_type = Generator;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Generator operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Square table of orders m(s,t). Construction does not validate; see `make_system`.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Identity diagonal, every off-diagonal entry ∞.
  explicit CoxeterMatrix(std::size_t rank);
  /// Rows given as nested lists; rows must all have `rows.size()` entries.
  CoxeterMatrix(std::initializer_list<std::initializer_list<Order>> rows);

  std::size_t rank() const noexcept { return rank_; }
  Order operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  Order& operator()(std::size_t i, std::size_t j) { return entries_[i * rank_ + j]; }
  /// Sets both (i,j) and (j,i).
  void set_symmetric(std::size_t i, std::size_t j, Order m);

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Order> entries_;
};

/// A validated Coxeter system: generator labels plus a Coxeter matrix.
/// Immutable after construction; cheap per-generator masks are precomputed.
class CoxeterSystem {
 public:
  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Generator g) const { return labels_.at(static_cast<std::size_t>(g)); }
  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  Order m(Generator s, Generator t) const {
    return matrix_(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
  }
  bool right_angled() const noexcept { return right_angled_; }

  GeneratorSet all() const noexcept { return GeneratorSet::full(rank()); }
  /// {t != s : m(s,t) = 2}
  GeneratorSet commuting(Generator s) const { return commuting_[static_cast<std::size_t>(s)]; }
  /// {t : m(s,t) = ∞}
  GeneratorSet free_with(Generator s) const { return free_[static_cast<std::size_t>(s)]; }
  /// {t : m(s,t) >= 3 or ∞}, i.e. the Coxeter-diagram neighbours of s.
  GeneratorSet diagram_neighbours(Generator s) const { return neighbours_[static_cast<std::size_t>(s)]; }
  bool commute(Generator s, Generator t) const { return s == t || commuting(s).contains(t); }

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
  }

 private:
  friend CoxeterSystem make_system(CoxeterMatrix matrix, std::vector<std::string> labels);
  CoxeterSystem(CoxeterMatrix matrix, std::vector<std::string> labels);

  CoxeterMatrix matrix_;
  std::vector<std::string> labels_;
  bool right_angled_ = false;
  std::vector<GeneratorSet> commuting_;
  std::vector<GeneratorSet> free_;
  std::vector<GeneratorSet> neighbours_;
};

/// Validates the matrix and the labels. Throws Error with kind
/// BadDiagonal / EntryBelowTwo / AsymmetricMatrix (naming the first offending
/// pair in row-major order), DuplicateLabel, BadLabel, RankMismatch or RankTooLarge.
CoxeterSystem make_system(CoxeterMatrix matrix, std::vector<std::string> labels);

/// Labels "a", "b", ... (or "s0", "s1", ... past 26 generators).
std::vector<std::string> default_labels(std::size_t rank);

/// Throws GeneratorOutOfRange if some letter is not a generator index.
void check_word(const CoxeterSystem& system, std::span<const Generator> word);

Word inverse(std::span<const Generator> word);
Word concat(std::span<const Generator> a, std::span<const Generator> b);

std::string format_word(const CoxeterSystem& system, std::span<const Generator> word);
std::string format_set(const CoxeterSystem& system, GeneratorSet set);
std::string format_order(Order m);

}  // namespace coxbound
