#include "divisive/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "divisive/control.hpp"
#include "divisive/divisiveness.hpp"
#include "divisive/stats.hpp"

namespace divisive {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(',', start);
        const auto item = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (!item.empty()) out.push_back(item);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <class T>
bool parse_number(std::string_view s, T& value) {
    s = trim(s);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_optional(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool constant(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return std::abs(x - v.front()) <= kTauTieTolerance; });
}

}  // namespace

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Correlation: return "correlation";
        case ExperimentKind::Robustness: return "robustness";
        case ExperimentKind::InjectTrace: return "inject-trace";
        case ExperimentKind::InjectCost: return "inject-cost";
    }
    return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    const auto s = lowercase(trim(name));
    if (s == "correlation") return ExperimentKind::Correlation;
    if (s == "robustness") return ExperimentKind::Robustness;
    if (s == "inject-trace") return ExperimentKind::InjectTrace;
    if (s == "inject-cost") return ExperimentKind::InjectCost;
    throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

CultureSpec parse_culture(std::string_view name) {
    const auto s = lowercase(trim(name));
    if (s == "ic") return {"ic", CultureKind::ImpartialCulture, 0.0};
    if (s == "um10") return {"um10", CultureKind::Urn, 0.1};
    if (s == "um50") return {"um50", CultureKind::Urn, 0.5};
    if (s.rfind("urn:", 0) == 0) {
        double corr = 0.0;
        if (parse_number(std::string_view(s).substr(4), corr) && corr >= 0.0 && corr < 1.0) {
            return {s, CultureKind::Urn, corr};
        }
    }
    throw std::invalid_argument("unknown culture '" + std::string(name) + "' (expected ic, um10, um50 or urn:<corr>)");
}

std::string to_string(TargetPosition position) {
    switch (position) {
        case TargetPosition::Second: return "second";
        case TargetPosition::Middle: return "middle";
        case TargetPosition::Last: return "last";
    }
    return "unknown";
}

TargetPosition parse_target_position(std::string_view name) {
    const auto s = lowercase(trim(name));
    if (s == "second") return TargetPosition::Second;
    if (s == "middle") return TargetPosition::Middle;
    if (s == "last") return TargetPosition::Last;
    throw std::invalid_argument("unknown target position '" + std::string(name) + "'");
}

std::size_t target_rank(TargetPosition position, std::size_t m) {
    switch (position) {
        case TargetPosition::Second: return 2;
        case TargetPosition::Middle: return (m + 1) / 2;
        case TargetPosition::Last: return m;
    }
    return m;
}

void ExperimentSpec::validate() const {
    if (cultures.empty()) throw std::invalid_argument("cultures: at least one culture is required");
    if (m_values.empty()) throw std::invalid_argument("m: at least one issue count is required");
    if (n_values.empty()) throw std::invalid_argument("n: at least one agent count is required");
    if (replicates < 1) throw std::invalid_argument("replicates: must be at least 1");
    if (rules.empty()) throw std::invalid_argument("rules: at least one rule is required");
    for (auto m : m_values) {
        if (m < 2) throw std::invalid_argument("m: every issue count must be at least 2");
    }
    for (auto n : n_values) {
        if (n < 1) throw std::invalid_argument("n: every agent count must be at least 1");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha: must lie in [0, 1]");
    if (!(ell > 0.0)) throw std::invalid_argument("ell: must be positive");
    if (kind == ExperimentKind::Robustness) {
        if (retain.empty()) throw std::invalid_argument("retain: at least one percentage is required");
        for (auto r : retain) {
            if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("retain: percentages must lie in (0, 100]");
        }
    }
    if (kind == ExperimentKind::InjectTrace || kind == ExperimentKind::InjectCost) {
        if (targets.empty()) throw std::invalid_argument("targets: at least one target position is required");
        if (alpha != 0.0) throw std::invalid_argument("alpha: inject experiments require alpha = 0");
        if (!(max_rounds_factor > 0.0)) throw std::invalid_argument("max_rounds_factor: must be positive");
        for (auto m : m_values) {
            if (m < 3) throw std::invalid_argument("m: inject experiments need at least 3 issues");
        }
    }
}

ExperimentSpec parse_experiment_spec(std::istream& in) {
    ExperimentSpec spec;
    bool have_kind = false;
    std::string raw;
    std::size_t line = 0;
    std::size_t last_line = 0;

    auto integers = [&](std::string_view value) {
        std::vector<std::size_t> out;
        for (auto item : split_list(value)) {
            std::size_t lo = 0;
            std::size_t hi = 0;
            std::size_t step = 1;
            auto range = item;
            if (const auto colon = item.find(':'); colon != std::string_view::npos) {
                if (!parse_number(item.substr(colon + 1), step) || step == 0) {
                    throw ParseError(line, "bad range step in '" + std::string(item) + "'");
                }
                range = item.substr(0, colon);
            }
            if (const auto dash = range.find('-'); dash != std::string_view::npos) {
                if (!parse_number(range.substr(0, dash), lo) || !parse_number(range.substr(dash + 1), hi) || hi < lo) {
                    throw ParseError(line, "bad range '" + std::string(item) + "'");
                }
            } else {
                if (!parse_number(range, lo)) throw ParseError(line, "expected an integer, got '" + std::string(item) + "'");
                hi = lo;
            }
            for (std::size_t v = lo; v <= hi; v += step) out.push_back(v);
        }
        return out;
    };
    auto real = [&](std::string_view value) {
        double x = 0.0;
        if (!parse_number(value, x)) throw ParseError(line, "expected a number, got '" + std::string(trim(value)) + "'");
        return x;
    };
    auto wrap = [&](auto&& fn) {
        try {
            fn();
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
        }
    };

    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        last_line = line;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ParseError(line, "expected 'key = value'");
        const auto key = lowercase(trim(text.substr(0, eq)));
        const auto value = trim(text.substr(eq + 1));
        if (key == "experiment" || key == "name") {
            wrap([&] { spec.kind = parse_experiment_kind(value); });
            have_kind = true;
        } else if (key == "cultures" || key == "culture") {
            spec.cultures.clear();
            wrap([&] {
                for (auto item : split_list(value)) spec.cultures.push_back(parse_culture(item));
            });
        } else if (key == "m") {
            spec.m_values = integers(value);
        } else if (key == "n") {
            spec.n_values = integers(value);
        } else if (key == "replicates") {
            if (!parse_number(value, spec.replicates)) throw ParseError(line, "expected a replicate count");
        } else if (key == "seed") {
            if (!parse_number(value, spec.seed)) throw ParseError(line, "expected an integer seed");
        } else if (key == "rules" || key == "rule") {
            spec.rules.clear();
            wrap([&] {
                for (auto item : split_list(value)) spec.rules.push_back(parse_rule(item));
            });
        } else if (key == "alpha") {
            spec.alpha = real(value);
        } else if (key == "ell") {
            spec.ell = real(value);
        } else if (key == "retain") {
            spec.retain.clear();
            for (auto percent : integers(value)) spec.retain.push_back(static_cast<double>(percent) / 100.0);
        } else if (key == "targets" || key == "target") {
            spec.targets.clear();
            wrap([&] {
                for (auto item : split_list(value)) spec.targets.push_back(parse_target_position(item));
            });
        } else if (key == "max_rounds_factor") {
            spec.max_rounds_factor = real(value);
        } else {
            throw ParseError(line, "unknown key '" + key + "'");
        }
    }
    if (!have_kind) throw ParseError(last_line + 1, "missing 'experiment' key");
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(last_line + 1, e.what());
    }
    return spec;
}

std::uint64_t replicate_seed(std::uint64_t base, std::size_t culture, std::size_t m, std::size_t n, std::size_t replicate) {
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t part : {std::uint64_t(culture), std::uint64_t(m), std::uint64_t(n), std::uint64_t(replicate)}) {
        h = splitmix64(h ^ part);
    }
    return h;
}

std::optional<double> ranking_agreement(const std::vector<double>& x, const std::vector<double>& y) {
    try {
        return kendall_tau(x, y).tau;
    } catch (const UndefinedTauError&) {
        if (constant(x) && constant(y)) return 1.0;
        return std::nullopt;
    }
}

namespace {

struct Task {
    std::size_t culture;
    std::size_t n;
    std::size_t m;
    std::size_t replicate;
};

struct TaskOutput {
    std::vector<CorrelationRecord> correlation;
    std::vector<RobustnessRecord> robustness;
    std::vector<InjectRecord> inject;
};

Profile task_profile(const ExperimentSpec& spec, const Task& t, std::uint64_t seed) {
    const auto& c = spec.cultures[t.culture];
    return generate(Culture{c.kind, c.correlation, t.m, t.n, seed});
}

TaskOutput run_task(const ExperimentSpec& spec, const Task& t) {
    TaskOutput out;
    const std::uint64_t seed = replicate_seed(spec.seed, t.culture, t.m, t.n, t.replicate);
    const Profile p = task_profile(spec, t, seed);
    switch (spec.kind) {
        case ExperimentKind::Correlation: {
            const auto borda = divisiveness_scores(p, {spec.alpha, spec.ell, ScoringRule::Borda});
            const auto cop = divisiveness_scores(p, {spec.alpha, spec.ell, ScoringRule::Copeland});
            const auto var = rank_variances(p);
            out.correlation.push_back({t.culture, t.m, t.n, t.replicate, seed, ranking_agreement(borda, cop),
                                       ranking_agreement(borda, var), ranking_agreement(cop, var)});
            break;
        }
        case ExperimentKind::Robustness: {
            // One deletion mask per retain level, shared by every rule.
            std::vector<PairwiseProfile> depleted;
            for (double r : spec.retain) {
                depleted.push_back(remove_comparisons(p, r, splitmix64(seed ^ static_cast<std::uint64_t>(std::llround(r * 1e6)))));
            }
            for (auto rule : spec.rules) {
                const auto complete = divisiveness_scores(p, {0.0, spec.ell, rule});
                for (std::size_t k = 0; k < spec.retain.size(); ++k) {
                    const auto partial = incomplete_divisiveness_scores(depleted[k], rule);
                    out.robustness.push_back(
                        {t.culture, t.m, t.n, rule, spec.retain[k], t.replicate, seed, ranking_agreement(complete, partial)});
                }
            }
            break;
        }
        case ExperimentKind::InjectTrace:
        case ExperimentKind::InjectCost: {
            const auto max_rounds = std::max<std::size_t>(
                static_cast<std::size_t>(std::ceil(spec.max_rounds_factor * static_cast<double>(t.n))), 2 * t.n + 2);
            for (auto rule : spec.rules) {
                const DivisivenessParams params{0.0, spec.ell, rule};
                const auto initial = divisiveness_ranking(p, params);
                for (auto position : spec.targets) {
                    InjectRecord rec;
                    rec.culture = t.culture;
                    rec.m = t.m;
                    rec.n = t.n;
                    rec.rule = rule;
                    rec.target_position = position;
                    rec.replicate = t.replicate;
                    rec.seed = seed;
                    rec.target = initial[target_rank(position, t.m) - 1].issue;
                    const auto outcome = inject(p, rec.target, params, max_rounds);
                    rec.rounds = outcome.rounds;
                    rec.succeeded = outcome.succeeded;
                    if (spec.kind == ExperimentKind::InjectTrace) {
                        for (const auto& ranking : outcome.trace) {
                            std::vector<std::size_t> row(t.m);
                            for (std::size_t j = 0; j < t.m; ++j) row[j] = ranking.position_of(initial[j].issue);
                            rec.positions.push_back(std::move(row));
                        }
                    }
                    out.inject.push_back(std::move(rec));
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
    spec.validate();
    std::vector<Task> tasks;
    for (std::size_t c = 0; c < spec.cultures.size(); ++c) {
        for (auto n : spec.n_values) {
            for (auto m : spec.m_values) {
                for (std::size_t r = 0; r < spec.replicates; ++r) tasks.push_back({c, n, m, r});
            }
        }
    }

    std::vector<std::optional<TaskOutput>> outputs(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            if (options.stop != nullptr && options.stop->load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            outputs[i] = run_task(spec, tasks[i]);
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    ExperimentResult result;
    result.spec = spec;
    result.scheduled = tasks.size();
    for (auto& o : outputs) {
        if (!o) continue;
        ++result.completed;
        std::move(o->correlation.begin(), o->correlation.end(), std::back_inserter(result.correlation));
        std::move(o->robustness.begin(), o->robustness.end(), std::back_inserter(result.robustness));
        std::move(o->inject.begin(), o->inject.end(), std::back_inserter(result.inject));
    }
    return result;
}

void Table::write_csv(std::ostream& out) const {
    auto write_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << row[i];
        }
        out << '\n';
    };
    write_row(columns);
    for (const auto& row : rows) write_row(row);
}

namespace {

std::vector<double> defined(const std::vector<std::optional<double>>& values) {
    std::vector<double> out;
    for (const auto& v : values) {
        if (v) out.push_back(*v);
    }
    return out;
}

std::vector<std::string> summary_cells(const std::vector<double>& values) {
    if (values.empty()) return {"", "", "", ""};
    const auto s = aggregate_runs(values);
    return {format_double(s.mean), format_double(s.median), format_double(s.q10), format_double(s.q90)};
}

// Mean position per round and starting position, holding each replicate at
// its final ranking once it has stopped.
std::vector<std::vector<double>> mean_trace(const std::vector<const InjectRecord*>& group) {
    std::size_t rounds = 0;
    for (auto* rec : group) rounds = std::max(rounds, rec->positions.size());
    if (rounds == 0) return {};
    const std::size_t m = group.front()->m;
    std::vector<std::vector<double>> mean(rounds, std::vector<double>(m, 0.0));
    for (auto* rec : group) {
        for (std::size_t r = 0; r < rounds; ++r) {
            const auto& row = rec->positions[std::min(r, rec->positions.size() - 1)];
            for (std::size_t j = 0; j < m; ++j) mean[r][j] += static_cast<double>(row[j]);
        }
    }
    for (auto& row : mean) {
        for (auto& x : row) x /= static_cast<double>(group.size());
    }
    return mean;
}

}  // namespace

Table ExperimentResult::replicate_table() const {
    Table t;
    const auto kind = to_string(spec.kind);
    auto culture = [&](std::size_t c) { return spec.cultures[c].name; };
    switch (spec.kind) {
        case ExperimentKind::Correlation:
            t.columns = {"experiment", "culture", "m", "n", "replicate", "seed",
                         "tau_borda_copeland", "tau_borda_variance", "tau_copeland_variance"};
            for (const auto& r : correlation) {
                t.rows.push_back({kind, culture(r.culture), std::to_string(r.m), std::to_string(r.n), std::to_string(r.replicate),
                                  std::to_string(r.seed), format_optional(r.borda_copeland), format_optional(r.borda_variance),
                                  format_optional(r.copeland_variance)});
            }
            break;
        case ExperimentKind::Robustness:
            t.columns = {"experiment", "culture", "m", "n", "rule", "retain_percent", "replicate", "seed", "tau"};
            for (const auto& r : robustness) {
                t.rows.push_back({kind, culture(r.culture), std::to_string(r.m), std::to_string(r.n), to_string(r.rule),
                                  format_double(100.0 * r.retain), std::to_string(r.replicate), std::to_string(r.seed),
                                  format_optional(r.tau)});
            }
            break;
        case ExperimentKind::InjectCost:
            t.columns = {"experiment", "culture", "m", "n", "rule", "target_position", "replicate", "seed",
                         "target_issue", "rounds", "added_percent", "succeeded"};
            for (const auto& r : inject) {
                t.rows.push_back({kind, culture(r.culture), std::to_string(r.m), std::to_string(r.n), to_string(r.rule),
                                  to_string(r.target_position), std::to_string(r.replicate), std::to_string(r.seed),
                                  std::to_string(r.target + 1), std::to_string(r.rounds), format_double(r.added_percent()),
                                  r.succeeded ? "1" : "0"});
            }
            break;
        case ExperimentKind::InjectTrace:
            t.columns = {"experiment", "culture", "m", "n", "rule", "target_position", "replicate", "seed",
                         "round", "added_percent", "initial_position", "position"};
            for (const auto& r : inject) {
                for (std::size_t round = 0; round < r.positions.size(); ++round) {
                    for (std::size_t j = 0; j < r.m; ++j) {
                        t.rows.push_back({kind, culture(r.culture), std::to_string(r.m), std::to_string(r.n), to_string(r.rule),
                                          to_string(r.target_position), std::to_string(r.replicate), std::to_string(r.seed),
                                          std::to_string(round),
                                          format_double(100.0 * static_cast<double>(round) / static_cast<double>(r.n)),
                                          std::to_string(j + 1), std::to_string(r.positions[round][j])});
                    }
                }
            }
            break;
    }
    return t;
}

Table ExperimentResult::summary_table() const {
    Table t;
    const auto kind = to_string(spec.kind);
    auto culture = [&](std::size_t c) { return spec.cultures[c].name; };
    switch (spec.kind) {
        case ExperimentKind::Correlation: {
            t.columns = {"experiment", "culture", "m", "n", "measure_pair", "replicates", "defined",
                         "mean_tau", "median_tau", "q10_tau", "q90_tau"};
            std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<const CorrelationRecord*>> groups;
            for (const auto& r : correlation) groups[{r.culture, r.n, r.m}].push_back(&r);
            for (const auto& [key, recs] : groups) {
                const auto& [c, n, m] = key;
                const std::pair<const char*, std::optional<double> CorrelationRecord::*> pairs[] = {
                    {"borda_copeland", &CorrelationRecord::borda_copeland},
                    {"borda_variance", &CorrelationRecord::borda_variance},
                    {"copeland_variance", &CorrelationRecord::copeland_variance}};
                for (const auto& [label, member] : pairs) {
                    std::vector<std::optional<double>> values;
                    for (auto* r : recs) values.push_back(r->*member);
                    const auto ok = defined(values);
                    std::vector<std::string> row{kind, culture(c), std::to_string(m), std::to_string(n), label,
                                                 std::to_string(recs.size()), std::to_string(ok.size())};
                    for (auto& cell : summary_cells(ok)) row.push_back(std::move(cell));
                    t.rows.push_back(std::move(row));
                }
            }
            break;
        }
        case ExperimentKind::Robustness: {
            t.columns = {"experiment", "culture", "m", "n", "rule", "retain_percent", "replicates", "defined",
                         "mean_tau", "median_tau", "q10_tau", "q90_tau"};
            std::map<std::tuple<std::size_t, std::size_t, std::size_t, int, long long>, std::vector<std::optional<double>>> groups;
            for (const auto& r : robustness) {
                groups[{r.culture, r.n, r.m, static_cast<int>(r.rule), std::llround(r.retain * 1e6)}].push_back(r.tau);
            }
            for (const auto& [key, values] : groups) {
                const auto& [c, n, m, rule, retain] = key;
                const auto ok = defined(values);
                std::vector<std::string> row{kind, culture(c), std::to_string(m), std::to_string(n),
                                             to_string(static_cast<ScoringRule>(rule)), format_double(static_cast<double>(retain) / 1e4),
                                             std::to_string(values.size()), std::to_string(ok.size())};
                for (auto& cell : summary_cells(ok)) row.push_back(std::move(cell));
                t.rows.push_back(std::move(row));
            }
            break;
        }
        case ExperimentKind::InjectCost:
        case ExperimentKind::InjectTrace: {
            std::map<std::tuple<std::size_t, std::size_t, std::size_t, int, int>, std::vector<const InjectRecord*>> groups;
            for (const auto& r : inject) {
                groups[{r.culture, r.n, r.m, static_cast<int>(r.rule), static_cast<int>(r.target_position)}].push_back(&r);
            }
            if (spec.kind == ExperimentKind::InjectCost) {
                t.columns = {"experiment", "culture", "m", "n", "rule", "target_position", "replicates", "succeeded",
                             "mean_added_percent", "median_added_percent", "q10_added_percent", "q90_added_percent"};
            } else {
                t.columns = {"experiment", "culture", "m", "n", "rule", "target_position", "round", "added_percent",
                             "initial_position", "mean_position"};
            }
            for (const auto& [key, recs] : groups) {
                const auto& [c, n, m, rule, target] = key;
                std::vector<std::string> head{kind, culture(c), std::to_string(m), std::to_string(n),
                                              to_string(static_cast<ScoringRule>(rule)),
                                              to_string(static_cast<TargetPosition>(target))};
                if (spec.kind == ExperimentKind::InjectCost) {
                    std::vector<double> added;
                    for (auto* r : recs) {
                        if (r->succeeded) added.push_back(r->added_percent());
                    }
                    auto row = head;
                    row.push_back(std::to_string(recs.size()));
                    row.push_back(std::to_string(added.size()));
                    for (auto& cell : summary_cells(added)) row.push_back(std::move(cell));
                    t.rows.push_back(std::move(row));
                } else {
                    const auto mean = mean_trace(recs);
                    for (std::size_t round = 0; round < mean.size(); ++round) {
                        for (std::size_t j = 0; j < mean[round].size(); ++j) {
                            auto row = head;
                            row.push_back(std::to_string(round));
                            row.push_back(format_double(100.0 * static_cast<double>(round) / static_cast<double>(n)));
                            row.push_back(std::to_string(j + 1));
                            row.push_back(format_double(mean[round][j]));
                            t.rows.push_back(std::move(row));
                        }
                    }
                }
            }
            break;
        }
    }
    return t;
}

std::string ExperimentResult::plot_json() const {
    using nlohmann::json;
    json series = json::array();
    const auto summary = summary_table();
    auto col = [&](const char* name) {
        return static_cast<std::size_t>(std::find(summary.columns.begin(), summary.columns.end(), name) - summary.columns.begin());
    };
    // Series label -> (x, y) points, in summary row order.
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> points;
    std::vector<std::string> order;
    auto add = [&](const std::string& label, const std::string& x, const std::string& y) {
        if (y.empty()) return;
        auto [it, inserted] = points.try_emplace(label);
        if (inserted) order.push_back(label);
        it->second.first.push_back(std::stod(x));
        it->second.second.push_back(std::stod(y));
    };
    for (const auto& row : summary.rows) {
        const std::string base = row[col("culture")] + " n=" + row[col("n")];
        switch (spec.kind) {
            case ExperimentKind::Correlation:
                add(base + " " + row[col("measure_pair")], row[col("m")], row[col("mean_tau")]);
                break;
            case ExperimentKind::Robustness:
                add(base + " m=" + row[col("m")] + " " + row[col("rule")], row[col("retain_percent")], row[col("mean_tau")]);
                break;
            case ExperimentKind::InjectCost:
                add(base + " " + row[col("rule")] + " " + row[col("target_position")], row[col("m")],
                    row[col("mean_added_percent")]);
                break;
            case ExperimentKind::InjectTrace:
                add(base + " m=" + row[col("m")] + " " + row[col("rule")] + " " + row[col("target_position")] + " start=" +
                        row[col("initial_position")],
                    row[col("added_percent")], row[col("mean_position")]);
                break;
        }
    }
    for (const auto& label : order) {
        const auto& [x, y] = points.at(label);
        series.push_back({{"label", label}, {"x", x}, {"y", y}});
    }
    json doc{{"experiment", to_string(spec.kind)},
             {"replicates", spec.replicates},
             {"completed", completed},
             {"scheduled", scheduled},
             {"series", series}};
    return doc.dump(2) + "\n";
}

}  // namespace divisive
