#pragma once

// Plain-text description of a Coxeter system with optional named rays:
//
//   # free product of three involutions
//   generators: a b c
//   matrix:
//   1   inf inf
//   inf 1   inf
//   inf inf 1
//   rays:
//   alpha = | a b
//   beta  = c | a b
//
// Matrix entries are positive integers or `inf`. A ray is `name = head | period`
// with the head possibly empty. Words are whitespace-separated labels; when
// every label is a single character, a token may also run letters together
// ("ab"). `#` starts a comment.

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxbound/boundary.hpp"
#include "coxbound/error.hpp"
#include "coxbound/system.hpp"

namespace coxbound {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedRay {
  std::string name;
  sim::Ray ray;
};

struct SystemFile {
  CoxeterSystem system;
  std::vector<NamedRay> rays;

  /// Throws UnknownRay.
  const sim::Ray& ray(std::string_view name) const;
};

SystemFile parse_system_file(std::string_view text);
SystemFile read_system_file(const std::string& path);

std::string format_system_file(const SystemFile& file);
std::string format_system_file(const CoxeterSystem& system);

/// Parses a word written with the system's labels. Throws UnknownGenerator.
Word parse_word(const CoxeterSystem& system, std::string_view text);

/// Parses a single generator label. Throws UnknownGenerator.
Generator parse_generator(const CoxeterSystem& system, std::string_view label);

}  // namespace coxbound
