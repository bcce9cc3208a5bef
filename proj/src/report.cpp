#include <prearith/report.hpp>

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

namespace prearith
{

namespace
{

using nlohmann::json;

json base_record(const RunConfig &cfg, const std::string &input)
{
    return json{{"class", std::string(to_string(cfg.arithmetic))}, {"M", cfg.magnitude}, {"input", input}};
}

void finish(std::ostream &os)
{
    if (!os) {
        throw Error(Errc::io_error, "failed to write report");
    }
}

void write_record(std::ostream &os, const json &record)
{
    os << record.dump() << '\n';
    finish(os);
}

std::string tuple_string(const std::vector<Number> &inputs)
{
    std::string s = "(";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        s += (i == 0 ? "" : ", ") + to_string(inputs[i]);
    }
    return s + ")";
}

std::string decimal(double v)
{
    return ExtendedReal::finite(v).to_string();
}

} // namespace

void emit_eval(std::ostream &os, const RunConfig &cfg, const std::string &input, const ClassValue &result)
{
    if (cfg.format == OutputFormat::machine) {
        auto r = base_record(cfg, input);
        r["output"] = to_string(result);
        r["status"] = "ok";
        write_record(os, r);
        return;
    }
    os << input << " = " << to_string(result) << '\n';
    finish(os);
}

SeriesResult evaluate_series(const SeriesSpec &s, const RunConfig &cfg)
{
    SeriesResult r{classify_series(s), std::nullopt};
    switch (cfg.arithmetic) {
        case ArithmeticClass::am:
            r.projection = project_series_am(s, cfg.clamp_magnitude());
            break;
        case ArithmeticClass::amm:
            if (auto v = project_series_amm(s, cfg.clamp_magnitude())) {
                r.projection = *v;
            }
            break;
        case ArithmeticClass::bm:
            if (auto v = project_series_bm(s, cfg.projective_magnitude())) {
                r.projection = *v;
            }
            break;
    }
    return r;
}

void emit_series(std::ostream &os, const RunConfig &cfg, const SeriesSpec &s, const SeriesResult &result)
{
    std::string output = result.projection ? to_string(*result.projection) : "no-convergence";
    // Limits known only in binary64 are shown as decimals, not as their exact dyadic value.
    if (result.projection && result.classification.tag == Convergence::converges_to
        && !result.classification.exact_limit && cfg.arithmetic != ArithmeticClass::bm) {
        output = decimal(Rational::parse(output).to_double());
    }
    if (cfg.format == OutputFormat::machine) {
        auto r = base_record(cfg, describe(s));
        r["output"] = output;
        r["status"] = result.projection ? "ok" : "no-convergence";
        r["classification"] = result.classification.to_string();
        write_record(os, r);
        return;
    }
    os << "series:        " << describe(s) << '\n'
       << "behaviour:     " << result.classification.to_string() << '\n'
       << "projection in " << to_string(cfg.arithmetic) << " (M = " << cfg.magnitude << "): " << output << '\n';
    finish(os);
}

void emit_series_table(std::ostream &os, const RunConfig &cfg, const SeriesSpec &s, std::size_t rows)
{
    const bool exact = has_exact_terms(s);
    os << "n,term,partial_sum,projected_partial\n";
    Rational partial;
    for (std::size_t n = 1; n <= rows; ++n) {
        const Rational term = series_term(s, n);
        partial += term;
        std::string projected;
        switch (cfg.arithmetic) {
            case ArithmeticClass::am:
                if (term.sign() < 0) {
                    throw Error(Errc::negative_term, "A_M projection needs nonnegative terms");
                }
                projected = am_coproject(partial, cfg.clamp_magnitude()).value().to_string();
                break;
            case ArithmeticClass::amm:
                projected = amm_coproject(partial, cfg.clamp_magnitude()).value().to_string();
                if (!exact) {
                    projected = decimal(Rational::parse(projected).to_double());
                }
                break;
            case ArithmeticClass::bm:
                projected = decimal(bm_forward(ExtendedReal::finite(partial.to_double()), cfg.projective_magnitude()).value());
                break;
        }
        if (!exact && cfg.arithmetic == ArithmeticClass::am) {
            projected = decimal(Rational::parse(projected).to_double());
        }
        os << n << ',' << (exact ? term.to_string() : decimal(term.to_double())) << ','
           << (exact ? partial.to_string() : decimal(partial.to_double())) << ',' << projected << '\n';
    }
    finish(os);
}

void emit_laws(std::ostream &os, const RunConfig &cfg, std::span<const LawReport> reports)
{
    for (const auto &rep : reports) {
        if (cfg.format == OutputFormat::machine) {
            auto r = base_record(cfg, std::string(to_string(rep.law)));
            r["output"] = rep.held() ? "held" : "violated";
            r["status"] = "ok";
            r["samples"] = rep.samples_checked;
            r["violations"] = rep.violations.size();
            r["seed"] = rep.seed;
            if (!rep.held()) {
                const auto &v = rep.violations.front();
                json inputs = json::array();
                for (const auto &x : v.inputs) {
                    inputs.push_back(to_string(x));
                }
                r["counterexample"] = {{"inputs", inputs}, {"lhs", to_string(v.lhs)}, {"rhs", to_string(v.rhs)}};
            }
            write_record(os, r);
            continue;
        }
        os << to_string(rep.law) << ": ";
        if (rep.held()) {
            os << "held over " << rep.samples_checked << " samples\n";
        } else {
            const auto &v = rep.violations.front();
            os << "violated in " << rep.violations.size() << " of " << rep.samples_checked
               << " samples, counterexample " << tuple_string(v.inputs) << ": lhs " << to_string(v.lhs) << ", rhs "
               << to_string(v.rhs) << '\n';
        }
    }
    finish(os);
}

void emit_expansion(std::ostream &os, const RunConfig &cfg, const Rational &z, const Rational &x,
                    const ExpansionResult &result)
{
    const Rational gap = z - result.partial_sum;
    if (cfg.format == OutputFormat::machine) {
        auto r = base_record(cfg, "z=" + z.to_string() + ",x=" + x.to_string());
        json counts = json::array();
        for (const auto &k : result.counts) {
            counts.push_back(k.to_string());
        }
        r["output"] = result.partial_sum.to_string();
        r["counts"] = counts;
        r["error"] = gap.to_string();
        r["error_bound"] = result.error_bound.to_string();
        r["status"] = "ok";
        write_record(os, r);
        return;
    }
    os << "counts:      ";
    for (std::size_t i = 0; i < result.counts.size(); ++i) {
        os << (i == 0 ? "" : " ") << result.counts[i];
    }
    os << "\npartial sum: " << result.partial_sum << "\nerror:       " << gap << " <= " << result.error_bound
       << '\n';
    finish(os);
}

void emit_demo(std::ostream &os, const RunConfig &cfg, const std::string &name, const std::string &report)
{
    if (cfg.format == OutputFormat::machine) {
        auto r = base_record(cfg, name);
        // last line of the report is the identity
        auto text = report;
        while (!text.empty() && text.back() == '\n') {
            text.pop_back();
        }
        r["output"] = text.substr(text.rfind('\n') + 1);
        r["status"] = "ok";
        write_record(os, r);
        return;
    }
    os << report;
    finish(os);
}

void emit_error(std::ostream &os, const RunConfig &cfg, const std::string &input, const Error &error)
{
    if (cfg.format == OutputFormat::machine) {
        auto r = base_record(cfg, input);
        r["output"] = nullptr;
        r["status"] = "error";
        r["error"] = std::string(to_string(error.code()));
        r["message"] = error.what();
        if (const auto *pe = dynamic_cast<const ParseError *>(&error)) {
            r["offset"] = pe->offset();
            r["expected"] = pe->expected();
        }
        write_record(os, r);
        return;
    }
    os << "error: " << error.what() << '\n';
}

int exit_code_for(Errc code) noexcept
{
    switch (code) {
        case Errc::parse_error:
            return exit_parse_error;
        case Errc::indeterminate_form:
            return exit_indeterminate;
        default:
            return exit_domain_error;
    }
}

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Clamped and arctan-projective prearithmetics"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cls = "am";
    std::string mode = "total";
    std::string format = "text";
    RunConfig cfg;
    std::uint64_t seed = 0;
    std::size_t max_terms = 0;
    app.add_option("--class", cls, "Arithmetic class")->check(CLI::IsMember({"am", "amm", "bm"}));
    auto *mag_opt = app.add_option("--magnitude", cfg.magnitude, "M as a decimal or p/q");
    app.add_option("--mode", mode, "Indeterminate forms: total or strict")->check(CLI::IsMember({"total", "strict"}));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    auto *seed_opt = app.add_option("--seed", seed, "Random seed for law audits");
    auto *max_terms_opt = app.add_option("--max-terms", max_terms, "Terms used when classifying a series");

    std::string expr_text;
    auto *eval_cmd = app.add_subcommand("eval", "Evaluate an infix expression");
    eval_cmd->add_option("expression", expr_text, "Expression, e.g. \"-2 + (M + 1)\"")->required();

    std::string series_text;
    std::size_t table_rows = 0;
    auto *series_cmd = app.add_subcommand("series", "Classify and project a series");
    series_cmd->add_option("spec", series_text, "geom:a=1,r=0.5 | harmonic:+ | altharmonic | ...")->required();
    series_cmd->add_option("--table", table_rows, "Print the first N partial sums as CSV");

    std::vector<std::string> law_names;
    std::size_t budget = 10'000;
    auto *laws_cmd = app.add_subcommand("laws", "Audit algebraic laws");
    laws_cmd->add_option("--law", law_names, "Law to audit (repeatable, default all)");
    laws_cmd->add_option("--budget", budget, "Random tuples per law");

    std::string z_text;
    std::string x_text;
    unsigned stages = 20;
    auto *expand_cmd = app.add_subcommand("expand", "Greedy expansion of z in powers of x");
    expand_cmd->add_option("--z", z_text, "Target in (0, M]")->required();
    expand_cmd->add_option("--x", x_text, "Base in (0, 1)")->required();
    expand_cmd->add_option("--stages", stages, "Number of stages");

    std::string demo_name;
    auto *demo_cmd = app.add_subcommand("demo", "sorites | machine-infinity | raindrop | lion-rabbit");
    demo_cmd->add_option("name", demo_name)->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        const bool no_command = app.get_subcommands().empty();
        return no_command ? exit_unknown_command : exit_domain_error;
    }

    cfg.mode = mode == "strict" ? Mode::strict : Mode::total;
    cfg.format = format == "machine" ? OutputFormat::machine : OutputFormat::text;
    if (*seed_opt) {
        cfg.seed = seed;
    }
    if (*max_terms_opt) {
        cfg.max_terms = max_terms;
    }

    std::string input;
    try {
        cfg.arithmetic = parse_class(cls);
        if (eval_cmd->parsed()) {
            input = expr_text;
            cfg.validate();
            const auto e = parse_expression(expr_text);
            emit_eval(out, cfg, expr_text, eval_expression(e, cfg));
        } else if (series_cmd->parsed()) {
            input = series_text;
            cfg.validate();
            auto s = parse_series(series_text);
            if (cfg.max_terms) {
                s.max_terms = *cfg.max_terms;
            }
            if (table_rows > 0) {
                emit_series_table(out, cfg, s, table_rows);
            } else {
                emit_series(out, cfg, s, evaluate_series(s, cfg));
            }
        } else if (laws_cmd->parsed()) {
            cfg.validate();
            std::vector<Law> laws;
            for (const auto &name : law_names) {
                input = name;
                laws.push_back(parse_law(name));
            }
            if (laws.empty()) {
                laws.assign(std::begin(all_laws), std::end(all_laws));
            }
            AuditOptions opts;
            opts.budget = budget;
            opts.seed = cfg.seed.value_or(0);
            const auto reports = audit_laws(cfg.arithmetic, cfg.magnitude_value(), laws, opts);
            emit_laws(out, cfg, reports);
        } else if (expand_cmd->parsed()) {
            input = "z=" + z_text + ",x=" + x_text;
            if (cfg.arithmetic != ArithmeticClass::am) {
                throw Error(Errc::class_error, "greedy expansion is defined for class am");
            }
            const auto z = Rational::parse(z_text);
            const auto x = Rational::parse(x_text);
            emit_expansion(out, cfg, z, x, greedy_expansion(z, x, stages, cfg.clamp_magnitude()));
        } else if (demo_cmd->parsed()) {
            input = demo_name;
            std::optional<std::string> override;
            if (*mag_opt) {
                override = cfg.magnitude;
            }
            const auto report = run_demo(demo_name, override);
            cfg.arithmetic = ArithmeticClass::am;
            if (!override) {
                const auto first = report.find("M = ") + 4;
                cfg.magnitude = report.substr(first, report.find('\n', first) - first);
            }
            emit_demo(out, cfg, demo_name, report);
        }
    } catch (const Error &e) {
        if (cfg.format == OutputFormat::machine) {
            emit_error(out, cfg, input, e);
        } else {
            emit_error(err, cfg, input, e);
        }
        return exit_code_for(e.code());
    }
    return exit_ok;
}

} // namespace prearith
