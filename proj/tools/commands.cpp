#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "divisive/control.hpp"
#include "divisive/divisiveness.hpp"
#include "divisive/experiment.hpp"
#include "divisive/generators.hpp"
#include "divisive/stats.hpp"

namespace divisive::cli {

namespace {

using nlohmann::json;

enum class Format { Csv, Json };

struct Output {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        return buf;
    }
    if (v.is_array()) {
        std::string s;
        for (const auto& item : v) {
            if (!s.empty()) s += ';';
            s += csv_cell(item);
        }
        return s;
    }
    auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

json as_json(const Output& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    return rows;
}

void emit(std::ostream& out, const Output& table, Format format) {
    if (format == Format::Json) {
        out << as_json(table).dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
}

void emit_table(std::ostream& out, const Table& table, Format format) {
    if (format == Format::Csv) {
        table.write_csv(out);
        return;
    }
    Output o{table.columns, {}};
    for (const auto& row : table.rows) {
        std::vector<json> cells;
        for (const auto& cell : row) {
            double x = 0.0;
            std::size_t used = 0;
            bool numeric = false;
            if (!cell.empty()) {
                try {
                    x = std::stod(cell, &used);
                    numeric = used == cell.size();
                } catch (const std::exception&) {
                }
            }
            if (cell.empty()) {
                cells.emplace_back(nullptr);
            } else if (numeric) {
                cells.emplace_back(x);
            } else {
                cells.emplace_back(cell);
            }
        }
        o.rows.push_back(std::move(cells));
    }
    emit(out, o, format);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

ScoringRule rule_option(const std::string& name) { return parse_rule(name); }

json issue_cell(const Profile& p, Issue a) { return p.labels()[a]; }

enum class Measure { DivBorda, DivCopeland, Variance, Borda, Copeland };

const std::map<std::string, Measure> kMeasures{{"div-borda", Measure::DivBorda},
                                               {"div-copeland", Measure::DivCopeland},
                                               {"variance", Measure::Variance},
                                               {"borda", Measure::Borda},
                                               {"copeland", Measure::Copeland}};

std::vector<double> measure_values(Measure measure, const Profile& p, double alpha, double ell) {
    switch (measure) {
        case Measure::DivBorda: return divisiveness_scores(p, {alpha, ell, ScoringRule::Borda});
        case Measure::DivCopeland: return divisiveness_scores(p, {alpha, ell, ScoringRule::Copeland});
        case Measure::Variance: return rank_variances(p);
        case Measure::Borda: return scores(ScoringRule::Borda, p);
        case Measure::Copeland: return scores(ScoringRule::Copeland, p);
    }
    return {};
}

struct Globals {
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
    std::string format = "csv";
    CLI::Option* seed_option = nullptr;

    Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop) {
    CLI::App app{"Divisiveness and polarisation measures over profiles of strict rankings", "divisive"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    g.seed_option = app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--jobs", g.jobs, "Concurrent replicates")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

    std::string file;
    std::string rule_name = "borda";
    double alpha = 0.0;
    double ell = 4.0;
    std::string issue;

    auto* div_cmd = app.add_subcommand("divisiveness", "Score, divisiveness and rank variance of every issue");
    div_cmd->add_option("profile", file, "SOC profile file")->required();
    div_cmd->add_option("--rule", rule_name, "borda, copeland or winrate")->capture_default_str();
    div_cmd->add_option("--alpha", alpha, "Size sensitivity in [0, 1]")->capture_default_str();
    div_cmd->add_option("--ell", ell, "Size-factor normaliser")->capture_default_str();

    auto* var_cmd = app.add_subcommand("variance", "Rank variance of every issue");
    var_cmd->add_option("profile", file, "SOC profile file")->required();

    auto* split_cmd = app.add_subcommand("max-split", "Sub-population maximising an issue's Borda gap");
    split_cmd->add_option("profile", file, "SOC profile file")->required();
    split_cmd->add_option("issue", issue, "Issue label or 1-based id")->required();

    std::size_t max_rounds = 0;
    std::string final_out;
    auto* inject_cmd = app.add_subcommand("inject", "Add rankings until an issue is the most divisive");
    inject_cmd->add_option("profile", file, "SOC profile file")->required();
    inject_cmd->add_option("issue", issue, "Target issue label or 1-based id")->required();
    inject_cmd->add_option("--rule", rule_name, "borda, copeland or winrate")->capture_default_str();
    inject_cmd->add_option("--ell", ell, "Size-factor normaliser")->capture_default_str();
    inject_cmd->add_option("--max-rounds", max_rounds, "Addition budget (default max(10n, 2n+2))");
    inject_cmd->add_option("--output", final_out, "Write the final profile here (SOC)");

    double retain_percent = 100.0;
    std::string comparisons_out;
    auto* deplete_cmd = app.add_subcommand("deplete", "Drop pairwise comparisons and recompute divisiveness");
    deplete_cmd->add_option("profile", file, "SOC profile file")->required();
    deplete_cmd->add_option("--retain", retain_percent, "Percentage of comparisons kept, in (0, 100]")->required();
    deplete_cmd->add_option("--rule", rule_name, "borda, copeland or winrate")->capture_default_str();
    deplete_cmd->add_option("--comparisons", comparisons_out, "Write the kept comparisons here (CSV)");

    std::string culture_name = "ic";
    std::size_t m = 0;
    std::size_t n = 0;
    std::string soc_out;
    auto* gen_cmd = app.add_subcommand("generate", "Sample a synthetic profile (SOC output)");
    gen_cmd->add_option("--culture", culture_name, "ic, um10, um50 or urn:<correlation>")->capture_default_str();
    gen_cmd->add_option("--m", m, "Number of issues")->required();
    gen_cmd->add_option("--n", n, "Number of agents")->required();
    gen_cmd->add_option("--output", soc_out, "Output file (default stdout)");

    std::vector<std::string> measures;
    auto* corr_cmd = app.add_subcommand("correlate", "Kendall tau-b between per-issue measures");
    corr_cmd->add_option("profile", file, "SOC profile file")->required();
    corr_cmd->add_option("--measures", measures, "Two or more of div-borda, div-copeland, variance, borda, copeland")
        ->delimiter(',');
    corr_cmd->add_option("--alpha", alpha, "Size sensitivity in [0, 1]")->capture_default_str();
    corr_cmd->add_option("--ell", ell, "Size-factor normaliser")->capture_default_str();

    std::string out_dir;
    auto* exp_cmd = app.add_subcommand("experiment", "Run an experiment spec file");
    exp_cmd->add_option("spec", file, "Experiment spec file")->required();
    exp_cmd->add_option("--out", out_dir, "Directory for replicates.csv, summary.csv and plot.json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        const Format format = g.fmt();
        if (*div_cmd) {
            const auto rule = rule_option(rule_name);
            const DivisivenessParams params{alpha, ell, rule};
            params.validate();
            const Profile p = parse_profile_file(file);
            const auto s = scores(rule, p);
            const auto d = divisiveness_scores(p, params);
            const auto v = rank_variances(p);
            Output t{{"issue", "label", "score", "divisiveness", "rank_variance"}, {}};
            for (Issue a = 0; a < p.num_issues(); ++a) t.rows.push_back({a + 1, issue_cell(p, a), s[a], d[a], v[a]});
            emit(out, t, format);
        } else if (*var_cmd) {
            const Profile p = parse_profile_file(file);
            Output t{{"issue", "label", "rank_variance"}, {}};
            const auto v = rank_variances(p);
            for (Issue a = 0; a < p.num_issues(); ++a) t.rows.push_back({a + 1, issue_cell(p, a), v[a]});
            emit(out, t, format);
        } else if (*split_cmd) {
            const Profile p = parse_profile_file(file);
            const Issue a = find_issue(p, issue);
            const auto split = max_divided_subpopulation(a, p);
            json members = json::array();
            for (auto i : split.subpopulation.members()) members.push_back(i + 1);
            const double inside = borda(a, restrict(p, split.subpopulation));
            const double outside = borda(a, restrict(p, split.subpopulation.complement()));
            Output t{{"issue", "label", "members", "size", "borda_inside", "borda_outside", "value"},
                     {{a + 1, issue_cell(p, a), members, split.subpopulation.size(), inside, outside, split.value}}};
            emit(out, t, format);
        } else if (*inject_cmd) {
            const auto rule = rule_option(rule_name);
            const Profile p = parse_profile_file(file);
            const Issue target = find_issue(p, issue);
            const std::size_t np = p.num_agents();
            const std::size_t budget = max_rounds > 0 ? max_rounds : std::max(10 * np, 2 * np + 2);
            const auto outcome = inject(p, target, {0.0, ell, rule}, budget);
            Output t{{"round", "added", "target_position", "target_divisiveness", "most_divisive"}, {}};
            for (std::size_t r = 0; r < outcome.trace.size(); ++r) {
                const auto& ranking = outcome.trace[r];
                double target_div = 0.0;
                for (const auto& item : ranking.items()) {
                    if (item.issue == target) target_div = item.score;
                }
                const json added = r == 0 ? json("") : json(r % 2 == 1 ? "odd" : "even");
                t.rows.push_back({r, added, ranking.position_of(target), target_div, issue_cell(p, ranking.top())});
            }
            if (!final_out.empty()) {
                auto f = open_output(final_out);
                write_profile(f, outcome.final_profile);
            }
            if (format == Format::Json) {
                json doc{{"target", p.labels()[target]},
                         {"rounds", outcome.rounds},
                         {"succeeded", outcome.succeeded},
                         {"added_percent", 100.0 * static_cast<double>(outcome.rounds) / static_cast<double>(np)},
                         {"trace", as_json(t)}};
                out << doc.dump(2) << '\n';
            } else {
                emit(out, t, format);
                err << (outcome.succeeded ? "target is most divisive after " : "target not most divisive after ")
                    << outcome.rounds << " added rankings\n";
            }
        } else if (*deplete_cmd) {
            const auto rule = rule_option(rule_name);
            if (!(retain_percent > 0.0 && retain_percent <= 100.0)) {
                throw std::invalid_argument("--retain must lie in (0, 100]");
            }
            const Profile p = parse_profile_file(file);
            const auto q = remove_comparisons(p, retain_percent / 100.0, g.seed);
            const auto complete = divisiveness_scores(p, {0.0, 4.0, rule});
            const auto partial = incomplete_divisiveness_scores(q, rule);
            Output t{{"issue", "label", "divisiveness_complete", "divisiveness_retained"}, {}};
            for (Issue a = 0; a < p.num_issues(); ++a) t.rows.push_back({a + 1, issue_cell(p, a), complete[a], partial[a]});
            emit(out, t, format);
            if (!comparisons_out.empty()) {
                auto f = open_output(comparisons_out);
                f << "agent,preferred,dispreferred\n";
                for (std::size_t i = 0; i < q.num_agents(); ++i) {
                    for (const auto& [a, b] : q.comparisons(i)) f << i + 1 << ',' << a + 1 << ',' << b + 1 << '\n';
                }
            }
            err << "kept " << q.num_comparisons() << " of " << p.num_agents() * p.num_issues() * (p.num_issues() - 1) / 2
                << " comparisons\n";
        } else if (*gen_cmd) {
            const auto culture = parse_culture(culture_name);
            if (m < 2 || n < 1) throw std::invalid_argument("generate needs --m >= 2 and --n >= 1");
            const Profile p = generate(Culture{culture.kind, culture.correlation, m, n, g.seed});
            if (soc_out.empty()) {
                write_profile(out, p);
            } else {
                auto f = open_output(soc_out);
                write_profile(f, p);
            }
        } else if (*corr_cmd) {
            DivisivenessParams{alpha, ell, ScoringRule::Borda}.validate();
            if (measures.empty()) measures = {"div-borda", "div-copeland", "variance"};
            if (measures.size() < 2) throw std::invalid_argument("--measures needs at least two names");
            std::vector<Measure> chosen;
            for (const auto& name : measures) {
                const auto it = kMeasures.find(name);
                if (it == kMeasures.end()) throw std::invalid_argument("unknown measure '" + name + "'");
                chosen.push_back(it->second);
            }
            const Profile p = parse_profile_file(file);
            std::vector<std::vector<double>> values;
            for (auto measure : chosen) values.push_back(measure_values(measure, p, alpha, ell));
            Output t{{"x", "y", "tau", "concordant", "discordant"}, {}};
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                for (std::size_t j = i + 1; j < chosen.size(); ++j) {
                    const auto report = kendall_tau(values[i], values[j]);
                    t.rows.push_back({measures[i], measures[j], report.tau, report.pairs_concordant, report.pairs_discordant});
                }
            }
            emit(out, t, format);
        } else if (*exp_cmd) {
            std::ifstream in(file);
            if (!in) throw ParseError(0, "cannot open file", file);
            ExperimentSpec spec;
            try {
                spec = parse_experiment_spec(in);
            } catch (const ParseError& e) {
                throw ParseError(e.line(), e.message(), file);
            }
            if (g.seed_option->count() > 0) spec.seed = g.seed;
            const auto result = run_experiment(spec, {g.jobs, stop});
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                const std::filesystem::path dir(out_dir);
                auto replicates = open_output((dir / "replicates.csv").string());
                result.replicate_table().write_csv(replicates);
                auto summary = open_output((dir / "summary.csv").string());
                result.summary_table().write_csv(summary);
                auto plot = open_output((dir / "plot.json").string());
                plot << result.plot_json();
            }
            emit_table(out, result.summary_table(), format);
            if (result.interrupted()) {
                err << "interrupted: " << result.completed << " of " << result.scheduled
                    << " replicates finished; partial results written\n";
                return kRuntimeError;
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UndefinedTauError& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    } catch (const UndefinedScoreError& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kOk;
}

}  // namespace divisive::cli
