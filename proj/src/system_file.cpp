#include "coxbound/system_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace coxbound {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start + 1});
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

std::optional<Order> parse_order(std::string_view token) {
  if (token == "inf") return kInfinite;
  Order value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) return std::nullopt;
  return value;
}

std::optional<Generator> find_label(const std::vector<std::string>& labels, std::string_view token) {
  const auto it = std::find(labels.begin(), labels.end(), token);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Generator>(it - labels.begin());
}

// Word parsing shared by rays and the command line; reports the offending token.
struct WordParse {
  Word word;
  std::optional<Token> unknown;
};

WordParse parse_word_tokens(const CoxeterSystem& system, std::string_view text, std::size_t offset) {
  const auto& labels = system.labels();
  const bool single_chars = std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.size() == 1; });
  WordParse out;
  for (const Token& token : tokenize(text, offset)) {
    if (auto g = find_label(labels, token.text)) {
      out.word.push_back(*g);
      continue;
    }
    bool ok = single_chars;
    Word letters;
    for (std::size_t k = 0; ok && k < token.text.size(); ++k) {
      if (auto g = find_label(labels, token.text.substr(k, 1))) {
        letters.push_back(*g);
      } else {
        ok = false;
      }
    }
    if (!ok) {
      out.unknown = token;
      return out;
    }
    out.word.insert(out.word.end(), letters.begin(), letters.end());
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = text.find('\n', start);
      lines_.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  }

  SystemFile parse() {
    const std::vector<std::string> labels = parse_generators();
    CoxeterMatrix matrix = parse_matrix(labels.size());
    CoxeterSystem system = make_system(std::move(matrix), labels);
    std::vector<NamedRay> rays;
    if (auto header = next_content_line()) {
      if (trimmed(*header) != "rays:") fail(cursor_, 1, "expected 'rays:' section");
      rays = parse_rays(system);
    }
    return SystemFile{std::move(system), std::move(rays)};
  }

 private:
  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) const {
    throw ParseError(line, column, message);
  }

  static std::string_view trimmed(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  }

  // Advances to the next non-blank line (comments removed); cursor_ is its 1-based number.
  std::optional<std::string_view> next_content_line() {
    while (next_ < lines_.size()) {
      const std::string_view line = strip_comment(lines_[next_++]);
      if (!blank(line)) {
        cursor_ = next_;
        return line;
      }
    }
    cursor_ = lines_.size();
    return std::nullopt;
  }

  std::vector<std::string> parse_generators() {
    const auto line = next_content_line();
    if (!line) fail(cursor_ + 1, 1, "missing 'generators:' section");
    const auto colon = line->find(':');
    if (colon == std::string_view::npos || trimmed(line->substr(0, colon)) != "generators") {
      fail(cursor_, 1, "expected 'generators:'");
    }
    std::vector<std::string> labels;
    for (const Token& token : tokenize(line->substr(colon + 1), colon + 1)) {
      const std::string label(token.text);
      if (label.find_first_of("|=:") != std::string::npos) fail(cursor_, token.column, "bad label '" + label + "'");
      if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
        fail(cursor_, token.column, "duplicate label '" + label + "'");
      }
      labels.push_back(label);
    }
    if (labels.empty()) fail(cursor_, colon + 2, "no generators listed");
    if (labels.size() > kMaxRank) fail(cursor_, 1, "more than 64 generators");
    return labels;
  }

  CoxeterMatrix parse_matrix(std::size_t rank) {
    const auto header = next_content_line();
    if (!header || trimmed(*header) != "matrix:") fail(cursor_ + (header ? 0 : 1), 1, "expected 'matrix:'");
    CoxeterMatrix matrix(rank);
    std::vector<std::vector<Token>> rows;
    std::vector<std::size_t> row_lines;
    for (std::size_t i = 0; i < rank; ++i) {
      const auto line = next_content_line();
      if (!line) fail(cursor_ + 1, 1, "matrix has " + std::to_string(i) + " rows, expected " + std::to_string(rank));
      std::vector<Token> tokens = tokenize(*line);
      if (tokens.size() != rank) {
        fail(cursor_, tokens.empty() ? 1 : tokens.back().column,
             "matrix row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(rank));
      }
      for (std::size_t j = 0; j < rank; ++j) {
        const auto m = parse_order(tokens[j].text);
        if (!m) fail(cursor_, tokens[j].column, "entry '" + std::string(tokens[j].text) + "' is not a positive integer or inf");
        matrix(i, j) = *m;
      }
      rows.push_back(std::move(tokens));
      row_lines.push_back(cursor_);
    }
    // Same checks as make_system, but reported at the offending token.
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        const Order m = matrix(i, j);
        const std::size_t line = row_lines[i];
        const std::size_t column = rows[i][j].column;
        if (i == j && m != 1) fail(line, column, "diagonal entry must be 1");
        if (i != j && !is_infinite(m) && m < 2) fail(line, column, "off-diagonal entry must be at least 2");
        if (m != matrix(j, i)) fail(line, column, "matrix is not symmetric at this entry");
      }
    }
    return matrix;
  }

  std::vector<NamedRay> parse_rays(const CoxeterSystem& system) {
    std::vector<NamedRay> rays;
    while (auto line = next_content_line()) {
      const auto eq = line->find('=');
      const auto bar = line->find('|');
      if (eq == std::string_view::npos || bar == std::string_view::npos || bar < eq) {
        fail(cursor_, 1, "expected 'name = head | period'");
      }
      const std::string name(trimmed(line->substr(0, eq)));
      if (name.empty() || tokenize(name).size() != 1) fail(cursor_, 1, "bad ray name");
      if (std::any_of(rays.begin(), rays.end(), [&](const NamedRay& r) { return r.name == name; })) {
        fail(cursor_, 1, "duplicate ray '" + name + "'");
      }
      WordParse head = parse_word_tokens(system, line->substr(eq + 1, bar - eq - 1), eq + 1);
      if (head.unknown) fail(cursor_, head.unknown->column, "unknown generator '" + std::string(head.unknown->text) + "'");
      WordParse period = parse_word_tokens(system, line->substr(bar + 1), bar + 1);
      if (period.unknown) {
        fail(cursor_, period.unknown->column, "unknown generator '" + std::string(period.unknown->text) + "'");
      }
      if (period.word.empty()) fail(cursor_, bar + 1, "ray period is empty");
      if (!system.right_angled()) fail(cursor_, 1, "rays need a right-angled system");
      sim::Ray ray{std::move(head.word), std::move(period.word)};
      if (!sim::validate_ray(system, ray, sim::minimal_horizon(ray))) {
        fail(cursor_, eq + 2, "ray '" + name + "' is not a reduced infinite word");
      }
      rays.push_back({name, std::move(ray)});
    }
    return rays;
  }

  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
  std::size_t cursor_ = 0;
};

}  // namespace

const sim::Ray& SystemFile::ray(std::string_view name) const {
  for (const NamedRay& r : rays) {
    if (r.name == name) return r.ray;
  }
  throw Error(ErrorKind::UnknownRay, "no ray named '" + std::string(name) + "'");
}

SystemFile parse_system_file(std::string_view text) { return Parser(text).parse(); }

SystemFile read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system_file(buffer.str());
}

std::string format_system_file(const CoxeterSystem& system) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& label : system.labels()) out << ' ' << label;
  out << "\nmatrix:\n";
  for (std::size_t i = 0; i < system.rank(); ++i) {
    for (std::size_t j = 0; j < system.rank(); ++j) {
      if (j) out << ' ';
      out << format_order(system.matrix()(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::string format_system_file(const SystemFile& file) {
  std::string out = format_system_file(file.system);
  if (!file.rays.empty()) {
    out += "rays:\n";
    for (const NamedRay& r : file.rays) {
      out += r.name + " =" + (r.ray.head.empty() ? "" : " " + format_word(file.system, r.ray.head)) + " | " + format_word(file.system, r.ray.period) + "\n";
    }
  }
  return out;
}

Word parse_word(const CoxeterSystem& system, std::string_view text) {
  WordParse parsed = parse_word_tokens(system, text, 0);
  if (parsed.unknown) throw Error(ErrorKind::UnknownGenerator, std::string(parsed.unknown->text));
  return std::move(parsed.word);
}

Generator parse_generator(const CoxeterSystem& system, std::string_view label) {
  if (auto g = find_label(system.labels(), label)) return *g;
  throw Error(ErrorKind::UnknownGenerator, std::string(label));
}

}  // namespace coxbound
