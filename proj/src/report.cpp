#include "coxbound/report.hpp"

#include <sstream>

#include "coxbound/parabolic.hpp"
#include "coxbound/racg.hpp"

namespace coxbound::report {

namespace {

struct CertificateText {
  const CoxeterSystem& system;

  std::string operator()(const decision::IrreducibleTilde& c) const {
    return "IrreducibleTilde " + format_set(system, c.tilde);
  }
  std::string operator()(const decision::ProductObstruction& c) const {
    return "ProductObstruction " + format_set(system, c.first) + " | " + format_set(system, c.second);
  }
  std::string operator()(const decision::ReflectionCriterion& c) const {
    return "ReflectionCriterion " + system.label(c.s);
  }
  std::string operator()(const decision::UniformDescentWitness& c) const {
    return "UniformDescentWitness s0=" + system.label(c.s0) + " t0=" + system.label(c.t0) +
           " K=" + std::to_string(c.bound) + " L=" + std::to_string(c.radius);
  }
  std::string operator()(const decision::BoundaryTooSmall&) const { return "BoundaryTooSmall"; }
  std::string operator()(const decision::OutOfScope& c) const { return "OutOfScope " + c.reason; }
};

}  // namespace

std::string format_certificate(const CoxeterSystem& system, const decision::Certificate& certificate) {
  return std::visit(CertificateText{system}, certificate);
}

int exit_code(const decision::Verdict& verdict) {
  if (std::holds_alternative<decision::BoundaryTooSmall>(verdict.certificate)) return 2;
  switch (verdict.outcome) {
    case decision::Outcome::Scrambled: return 0;
    case decision::Outcome::NotScrambled: return 1;
    case decision::Outcome::Unknown: return 2;
  }
  return 2;
}

std::string analysis(const CoxeterSystem& system, const decision::Verdict& verdict) {
  std::ostringstream out;
  out << "rank: " << system.rank() << '\n';
  out << "right-angled: " << (system.right_angled() ? "yes" : "no") << '\n';
  out << "components:";
  for (GeneratorSet component : irreducible_components(system)) {
    const auto type = finite_type(system, component);
    out << ' ' << format_set(system, component) << '[' << (type ? *type : "infinite") << ']';
  }
  out << '\n';
  out << "tilde-S: " << format_set(system, tilde_S(system)) << '\n';
  const decision::BoundarySize size = decision::boundary_size_class(system);
  out << "boundary: " << decision::to_string(size) << '\n';
  if (system.right_angled()) {
    out << "hyperbolic: " << (racg::is_hyperbolic_racg(system) ? "yes" : "no") << '\n';
    if (const auto s = decision::reflection_criterion(system)) {
      out << "finite-centralizer-generator: " << system.label(*s) << '\n';
    } else {
      out << "finite-centralizer-generator: none\n";
    }
  } else {
    out << "hyperbolic: not decided (not right-angled)\n";
  }
  out << "verdict: " << decision::to_string(verdict.outcome) << '\n';
  out << "certificate: " << format_certificate(system, verdict.certificate) << '\n';
  return out.str();
}

void write_csv(std::ostream& out, const sim::MetricSeries& series) {
  out << "k,distance\n";
  for (const auto& [k, d] : series.entries) out << k << ',' << d.to_decimal(12) << '\n';
}

}  // namespace coxbound::report
