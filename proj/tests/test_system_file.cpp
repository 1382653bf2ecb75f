#include <gtest/gtest.h>

#include "coxbound/error.hpp"
#include "coxbound/report.hpp"
#include "coxbound/system_file.hpp"
#include "support/systems.hpp"

using namespace coxbound;

namespace {

std::pair<std::size_t, std::size_t> parse_failure(std::string_view text) {
  try {
    parse_system_file(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "parsed: " << text;
  return {0, 0};
}

constexpr std::string_view kFree3 = R"(# comment line
generators: a b c
matrix:
1   inf inf   # trailing comment
inf 1   inf

inf inf 1
rays:
ab = | a b
cab = c | ab
)";

}  // namespace

TEST(SystemFile, Parses) {
  const SystemFile f = parse_system_file(kFree3);
  EXPECT_EQ(f.system, corpus::free3());
  ASSERT_EQ(f.rays.size(), 2u);
  EXPECT_EQ(f.ray("cab").head, (Word{2}));
  EXPECT_EQ(f.ray("cab").period, (Word{0, 1}));
  EXPECT_THROW(f.ray("zz"), Error);
}

TEST(SystemFile, RoundTrip) {
  for (const CoxeterSystem& s : {corpus::free3(), corpus::figure1(), corpus::pentagon(), corpus::dihedral(7)}) {
    const std::string text = format_system_file(s);
    const SystemFile back = parse_system_file(text);
    EXPECT_EQ(back.system, s);
    EXPECT_EQ(back.system.labels(), s.labels());
    EXPECT_EQ(format_system_file(back), text);
  }
  const SystemFile f = parse_system_file(kFree3);
  const SystemFile again = parse_system_file(format_system_file(f));
  EXPECT_EQ(again.system, f.system);
  ASSERT_EQ(again.rays.size(), f.rays.size());
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    EXPECT_EQ(again.rays[i].name, f.rays[i].name);
    EXPECT_EQ(again.rays[i].ray.head, f.rays[i].ray.head);
    EXPECT_EQ(again.rays[i].ray.period, f.rays[i].ray.period);
  }
}

TEST(SystemFile, Diagnostics) {
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 inf\ninf\n"), std::make_pair(std::size_t{4}, std::size_t{1}));
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 1\n1 1\n"), std::make_pair(std::size_t{3}, std::size_t{3}));
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 3\n4 1\n"), std::make_pair(std::size_t{3}, std::size_t{3}));
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 x\nx 1\n"), std::make_pair(std::size_t{3}, std::size_t{3}));
  EXPECT_EQ(parse_failure("generators: a a\nmatrix:\n1 2\n2 1\n").second, 15u);
  EXPECT_EQ(parse_failure("matrix:\n1\n").first, 1u);
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 inf\ninf 1\nrays:\nr = | a z\n"),
            std::make_pair(std::size_t{6}, std::size_t{9}));
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 inf\ninf 1\nrays:\nr = | a a\n").first, 6u);
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 inf\ninf 1\nrays:\nr = a |\n").first, 6u);
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 3\n3 1\nrays:\nr = | a b\n").first, 6u);
  EXPECT_EQ(parse_failure("generators: a b\nmatrix:\n1 inf\ninf 1\nextra\n").first, 5u);
}

TEST(SystemFile, Words) {
  const CoxeterSystem s = corpus::dihedral(4);
  EXPECT_EQ(parse_word(s, "t1 t2  t1"), (Word{0, 1, 0}));
  EXPECT_EQ(parse_word(s, ""), Word{});
  EXPECT_THROW(parse_word(s, "t1t2"), Error);
  EXPECT_EQ(parse_word(corpus::free3(), "ab c"), (Word{0, 1, 2}));
  try {
    parse_word(corpus::dinf(), "a z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownGenerator);
    EXPECT_NE(std::string(e.what()).find('z'), std::string::npos);
  }
}

TEST(Report, ExitCodesDependOnVerdictOnly) {
  using decision::Outcome;
  EXPECT_EQ(report::exit_code({Outcome::Scrambled, decision::IrreducibleTilde{}}), 0);
  EXPECT_EQ(report::exit_code({Outcome::Scrambled, decision::ReflectionCriterion{0}}), 0);
  EXPECT_EQ(report::exit_code({Outcome::NotScrambled, decision::ProductObstruction{}}), 1);
  EXPECT_EQ(report::exit_code({Outcome::NotScrambled, decision::BoundaryTooSmall{}}), 2);
  EXPECT_EQ(report::exit_code({Outcome::Unknown, decision::OutOfScope{"x"}}), 2);
}

TEST(Report, Csv) {
  sim::MetricSeries series;
  series.entries = {{1, Dyadic::of(1, 3)}, {2, Dyadic::of(65535, 16)}};
  std::ostringstream out;
  report::write_csv(out, series);
  EXPECT_EQ(out.str(), "k,distance\n1,0.125000000000\n2,0.999984741211\n");
}
