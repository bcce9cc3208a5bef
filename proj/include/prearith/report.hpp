#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <prearith/clamp.hpp>
#include <prearith/expression.hpp>
#include <prearith/laws.hpp>
#include <prearith/series.hpp>

namespace prearith
{

// Machine format: one JSON object per line carrying at least
// class, M, input, output and status. Text format is for people.
// Every emitter throws Errc::io_error if the stream fails.

void emit_eval(std::ostream &os, const RunConfig &cfg, const std::string &input, const ClassValue &result);

struct SeriesResult {
    ConvergenceClass classification;
    std::optional<ClassValue> projection; // nullopt: no convergence
};

SeriesResult evaluate_series(const SeriesSpec &s, const RunConfig &cfg);
void emit_series(std::ostream &os, const RunConfig &cfg, const SeriesSpec &s, const SeriesResult &result);

// Comma-separated table with header n,term,partial_sum,projected_partial.
void emit_series_table(std::ostream &os, const RunConfig &cfg, const SeriesSpec &s, std::size_t rows);

void emit_laws(std::ostream &os, const RunConfig &cfg, std::span<const LawReport> reports);

void emit_expansion(std::ostream &os, const RunConfig &cfg, const Rational &z, const Rational &x,
                    const ExpansionResult &result);

void emit_demo(std::ostream &os, const RunConfig &cfg, const std::string &name, const std::string &report);

void emit_error(std::ostream &os, const RunConfig &cfg, const std::string &input, const Error &error);

// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_parse_error = 1,
    exit_domain_error = 2,
    exit_indeterminate = 3,
    exit_unknown_command = 4,
};

int exit_code_for(Errc code) noexcept;

// Full command line: prearith [global flags] <eval|series|laws|expand|demo> ...
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace prearith
