// Command-line front end.
//
//   coxbound analyze FILE
//   coxbound reduce FILE WORD
//   coxbound descent FILE WORD
//   coxbound simulate FILE RAY_A RAY_B --mode liminf|limsup|obstruction [...]
//   coxbound check-descent FILE --s0 S --t0 T --K K --L L     (alias: check71)
//   coxbound print FILE
//
// Exit codes: analyze reports its verdict (0/1/2); check-descent returns 1
// when the condition fails; 64 on malformed input or usage, 65 on any other
// domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coxbound/boundary.hpp"
#include "coxbound/decision.hpp"
#include "coxbound/error.hpp"
#include "coxbound/racg.hpp"
#include "coxbound/report.hpp"
#include "coxbound/system_file.hpp"
#include "coxbound/word.hpp"

namespace {

using namespace coxbound;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

int run_analyze(const std::string& path) {
  const SystemFile file = read_system_file(path);
  const decision::Verdict verdict = decision::decide(file.system);
  std::cout << report::analysis(file.system, verdict);
  return report::exit_code(verdict);
}

int run_reduce(const std::string& path, const std::string& text) {
  const SystemFile file = read_system_file(path);
  const Word reduced = reduce(file.system, parse_word(file.system, text));
  std::cout << '"' << format_word(file.system, reduced) << "\" length " << reduced.size() << '\n';
  return 0;
}

int run_descent(const std::string& path, const std::string& text) {
  const SystemFile file = read_system_file(path);
  std::cout << format_set(file.system, descent_set(file.system, parse_word(file.system, text))) << '\n';
  return 0;
}

struct SimulateOptions {
  std::string path;
  std::string ray_a;
  std::string ray_b;
  std::string mode;
  std::size_t depth = 16;
  std::size_t radius = 4;
  std::size_t k_max = 40;
  std::size_t prefix = 8;
  std::optional<std::string> s0;
  std::optional<std::string> t0;
  std::optional<std::string> x;
  std::string out;
  bool serial = false;
};

void emit(const SimulateOptions& opts, const sim::MetricSeries& series) {
  if (opts.out.empty()) {
    report::write_csv(std::cout, series);
    return;
  }
  std::ofstream csv(opts.out);
  if (!csv) throw Error(ErrorKind::Parse, "cannot write '" + opts.out + "'");
  report::write_csv(csv, series);
}

int run_simulate(const SimulateOptions& opts) {
  const SystemFile file = read_system_file(opts.path);
  const CoxeterSystem& system = file.system;
  const sim::Ray& a = file.ray(opts.ray_a);
  const sim::Ray& b = file.ray(opts.ray_b);
  const sim::Execution exec = opts.serial ? sim::Execution::Serial : sim::Execution::Parallel;
  std::cout << sim::kProxyDisclaimer << '\n';

  if (opts.mode == "liminf") {
    Generator s0 = 0;
    if (opts.s0) {
      s0 = parse_generator(system, *opts.s0);
    } else {
      // First generator with an infinite-order partner.
      while (s0 < static_cast<Generator>(system.rank()) && system.free_with(s0).empty()) ++s0;
      if (s0 == static_cast<Generator>(system.rank())) {
        throw Error(ErrorKind::OrderNotInfinite, "no pair of generators has infinite order product");
      }
    }
    sim::LiminfParameters params;
    if (opts.t0 && opts.x) {
      params = {s0, parse_generator(system, *opts.t0), parse_word(system, *opts.x)};
    } else {
      params = sim::derive_liminf_parameters(system, a, b, s0, opts.prefix);
      if (opts.t0) params.t0 = parse_generator(system, *opts.t0);
      if (opts.x) params.x = parse_word(system, *opts.x);
    }
    std::cout << "parameters: s0=" << system.label(params.s0) << " t0=" << system.label(params.t0) << " x=\""
              << format_word(system, params.x) << "\"\n";
    const sim::MetricSeries series =
        sim::liminf_experiment(system, a, b, params.s0, params.t0, params.x, opts.k_max, opts.depth, exec);
    emit(opts, series);
    const Dyadic threshold = Dyadic::inverse_power_of_two(8);
    std::optional<std::size_t> reached;
    Dyadic low = series.entries.empty() ? Dyadic{} : series.entries.front().second;
    for (std::size_t i = 0; i < series.entries.size(); ++i) {
      low = std::min(low, series.entries[i].second);
      if (!reached && series.entries[i].second < threshold) reached = i;
    }
    bool tail_monotone = reached.has_value();
    for (std::size_t i = reached.value_or(0) + 1; tail_monotone && i < series.entries.size(); ++i) {
      tail_monotone = !(series.entries[i - 1].second < series.entries[i].second);
    }
    std::cout << "summary: min=" << low.to_decimal() << " below 2^-8: "
              << (reached ? "yes at k=" + std::to_string(series.entries[*reached].first) : std::string("no"))
              << " tail non-increasing: " << (tail_monotone ? "yes" : "no") << '\n';
    return 0;
  }

  const bool maximise = opts.mode == "limsup";
  const sim::MetricSeries series = sim::scan_profile(system, a, b, opts.radius, opts.depth,
                                                     maximise ? sim::ScanKind::Max : sim::ScanKind::Min, exec);
  emit(opts, series);
  const Dyadic value = series.entries.back().second;
  std::cout << "summary: " << (maximise ? "max=" : "min=") << value.to_decimal() << " positive: "
            << (Dyadic{} < value ? "yes" : "no");
  if (!maximise && series.entries.size() > 1) {
    const std::size_t half = opts.radius / 2;
    std::cout << " equal to radius " << half << ": " << (series.entries[half].second == value ? "yes" : "no");
  }
  std::cout << '\n';
  return 0;
}

int run_check_descent(const std::string& path, const std::string& s0, const std::string& t0, std::size_t bound,
                      std::size_t radius) {
  const SystemFile file = read_system_file(path);
  const CoxeterSystem& system = file.system;
  const decision::UniformDescentCheck check = decision::check_uniform_descent(
      system, parse_generator(system, s0), parse_generator(system, t0), bound, radius);
  std::cout << "w\tv\tx\n";
  for (const decision::DescentWitness& row : check.witnesses) {
    std::cout << '"' << format_word(system, row.w) << "\"\t\"" << format_word(system, row.v) << "\"\t"
              << (row.found ? '"' + format_word(system, row.x) + '"' : std::string("none")) << '\n';
  }
  std::cout << "holds: " << (check.holds ? "true" : "false") << '\n';
  return check.holds ? 0 : 1;
}

int run_print(const std::string& path) {
  std::cout << format_system_file(read_system_file(path));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter group boundary toolkit"};
  app.require_subcommand(1);

  std::string path;
  std::string word;

  auto* analyze = app.add_subcommand("analyze", "decide whether the boundary is a scrambled set");
  analyze->add_option("file", path, "system file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "canonical reduced word and its length");
  reduce_cmd->add_option("file", path, "system file")->required();
  reduce_cmd->add_option("word", word, "word in the system's labels")->required();

  auto* descent = app.add_subcommand("descent", "right descent set of a word");
  descent->add_option("file", path, "system file")->required();
  descent->add_option("word", word, "word in the system's labels")->required();

  SimulateOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "proxy-metric boundary experiments");
  simulate->add_option("file", sim_opts.path, "system file")->required();
  simulate->add_option("ray_a", sim_opts.ray_a, "first ray name")->required();
  simulate->add_option("ray_b", sim_opts.ray_b, "second ray name")->required();
  simulate->add_option("--mode", sim_opts.mode, "experiment")
      ->required()
      ->check(CLI::IsMember({"liminf", "limsup", "obstruction"}));
  simulate->add_option("--depth", sim_opts.depth, "proxy metric depth (<= 62)")->capture_default_str();
  simulate->add_option("--L", sim_opts.radius, "ball radius for limsup/obstruction")->capture_default_str();
  simulate->add_option("--kmax", sim_opts.k_max, "sequence length for liminf")->capture_default_str();
  simulate->add_option("--prefix", sim_opts.prefix, "ray prefix used to derive x")->capture_default_str();
  simulate->add_option("--s0", sim_opts.s0, "generator s0 (liminf)");
  simulate->add_option("--t0", sim_opts.t0, "generator t0 with m(s0,t0)=inf (liminf)");
  simulate->add_option("--x", sim_opts.x, "word x (liminf)");
  simulate->add_option("--out", sim_opts.out, "CSV output path (default: stdout)");
  simulate->add_flag("--serial", sim_opts.serial, "use the serial reference kernels");

  std::string s0;
  std::string t0;
  std::size_t bound = 0;
  std::size_t radius = 0;
  auto* check = app.add_subcommand("check-descent", "bounded uniform descent-pushing check");
  check->alias("check71");
  check->add_option("file", path, "system file")->required();
  check->add_option("--s0", s0, "generator s0")->required();
  check->add_option("--t0", t0, "generator t0 with m(s0,t0)=inf")->required();
  check->add_option("--K", bound, "length bound for x")->required();
  check->add_option("--L", radius, "radius for w and v")->required();

  auto* print = app.add_subcommand("print", "re-emit the parsed system file");
  print->add_option("file", path, "system file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(path);
    if (reduce_cmd->parsed()) return run_reduce(path, word);
    if (descent->parsed()) return run_descent(path, word);
    if (simulate->parsed()) return run_simulate(sim_opts);
    if (check->parsed()) return run_check_descent(path, s0, t0, bound, radius);
    if (print->parsed()) return run_print(path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
