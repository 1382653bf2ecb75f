#include "coxbound/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coxbound/error.hpp"

namespace coxbound {

CoxeterMatrix::CoxeterMatrix(std::size_t rank) : rank_(rank), entries_(rank * rank, kInfinite) {
  for (std::size_t i = 0; i < rank; ++i) (*this)(i, i) = 1;
}

CoxeterMatrix::CoxeterMatrix(std::initializer_list<std::initializer_list<Order>> rows)
    : rank_(rows.size()) {
  entries_.reserve(rank_ * rank_);
  for (const auto& row : rows) {
    if (row.size() != rank_) {
      throw Error(ErrorKind::RankMismatch, "matrix rows must have " + std::to_string(rank_) + " entries");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

void CoxeterMatrix::set_symmetric(std::size_t i, std::size_t j, Order m) {
  (*this)(i, j) = m;
  (*this)(j, i) = m;
}

namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool label_ok(const std::string& label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](unsigned char c) {
    return c <= ' ' || c == '|' || c == '=' || c == '#' || c == ':' || c == 0x7f;
  });
}

}  // namespace

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::vector<std::string> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  commuting_.resize(n);
  free_.resize(n);
  neighbours_.resize(n);
  right_angled_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Order m = matrix_(i, j);
      const auto t = static_cast<Generator>(j);
      if (m == 2) {
        commuting_[i].insert(t);
      } else {
        neighbours_[i].insert(t);
        if (is_infinite(m)) {
          free_[i].insert(t);
        } else {
          right_angled_ = false;
        }
      }
    }
  }
}

CoxeterSystem make_system(CoxeterMatrix matrix, std::vector<std::string> labels) {
  const std::size_t n = matrix.rank();
  if (n == 0) throw Error(ErrorKind::RankMismatch, "a Coxeter system needs at least one generator");
  if (n > kMaxRank) throw Error(ErrorKind::RankTooLarge, "rank " + std::to_string(n) + " exceeds 64");
  if (labels.size() != n) {
    throw Error(ErrorKind::RankMismatch, std::to_string(labels.size()) + " labels for a rank " +
                                             std::to_string(n) + " matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Order m = matrix(i, j);
      if (i == j) {
        if (m != 1) throw Error(ErrorKind::BadDiagonal, "entry " + pair_name(i, j) + " must be 1");
        continue;
      }
      if (!is_infinite(m) && m < 2) {
        throw Error(ErrorKind::EntryBelowTwo, "entry " + pair_name(i, j) + " is " + std::to_string(m));
      }
      if (m != matrix(j, i)) {
        throw Error(ErrorKind::AsymmetricMatrix,
                    "entries " + pair_name(i, j) + " and " + pair_name(j, i) + " differ");
      }
    }
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!label_ok(labels[i])) throw Error(ErrorKind::BadLabel, "label " + std::to_string(i) + " '" + labels[i] + "'");
    if (!seen.insert(labels[i]).second) {
      const auto first = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), labels[i]) - labels.begin());
      throw Error(ErrorKind::DuplicateLabel, "'" + labels[i] + "' at " + pair_name(first, i));
    }
  }
  return CoxeterSystem(std::move(matrix), std::move(labels));
}

std::vector<std::string> default_labels(std::size_t rank) {
  std::vector<std::string> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    out.push_back(rank <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
  }
  return out;
}

void check_word(const CoxeterSystem& system, std::span<const Generator> word) {
  const auto rank = static_cast<Generator>(system.rank());
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= rank) {
      throw Error(ErrorKind::GeneratorOutOfRange,
                  "letter " + std::to_string(i) + " is " + std::to_string(word[i]));
    }
  }
}

Word inverse(std::span<const Generator> word) { return Word(word.rbegin(), word.rend()); }

Word concat(std::span<const Generator> a, std::span<const Generator> b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string format_word(const CoxeterSystem& system, std::span<const Generator> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += system.label(word[i]);
  }
  return out;
}

std::string format_set(const CoxeterSystem& system, GeneratorSet set) {
  std::string out = "{";
  bool first = true;
  for (Generator g : set) {
    if (!first) out += ',';
    out += system.label(g);
    first = false;
  }
  return out + "}";
}

std::string format_order(Order m) { return is_infinite(m) ? "inf" : std::to_string(m); }

}  // namespace coxbound
