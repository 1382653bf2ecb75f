#pragma once

#include <ostream>
#include <string>

#include "coxbound/boundary.hpp"
#include "coxbound/decision.hpp"
#include "coxbound/system.hpp"

namespace coxbound::report {

/// One-line rendering, e.g. "ProductObstruction {a,b} | {c,d}".
std::string format_certificate(const CoxeterSystem& system, const decision::Certificate& certificate);

/// Exit status of `analyze`: 0 Scrambled, 1 NotScrambled, 2 Unknown or a
/// boundary too small to be scrambled.
int exit_code(const decision::Verdict& verdict);

/// The full `analyze` report: rank, right-angledness, components, S̃,
/// boundary class, hyperbolicity, verdict and certificate.
std::string analysis(const CoxeterSystem& system, const decision::Verdict& verdict);

/// `k,distance` CSV with header; distances as 12-digit decimals.
void write_csv(std::ostream& out, const sim::MetricSeries& series);

}  // namespace coxbound::report
