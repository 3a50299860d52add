#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "divisive/generators.hpp"
#include "divisive/scoring.hpp"

namespace divisive {

enum class ExperimentKind { Correlation, Robustness, InjectTrace, InjectCost };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

/// A named culture: "ic", "um10", "um50", or "urn:<correlation>".
struct CultureSpec {
    std::string name;
    CultureKind kind = CultureKind::ImpartialCulture;
    double correlation = 0.0;
};

CultureSpec parse_culture(std::string_view name);

/// Where the inject target starts in the divisiveness ranking.
enum class TargetPosition { Second, Middle, Last };

std::string to_string(TargetPosition position);
TargetPosition parse_target_position(std::string_view name);

/// 1-based rank: 2, (m + 1) / 2, or m.
std::size_t target_rank(TargetPosition position, std::size_t m);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Correlation;
    std::vector<CultureSpec> cultures;
    std::vector<std::size_t> m_values;
    std::vector<std::size_t> n_values;
    std::size_t replicates = 100;
    std::uint64_t seed = 1;
    std::vector<ScoringRule> rules{ScoringRule::Borda};
    double alpha = 0.0;
    double ell = 4.0;
    std::vector<double> retain;  ///< fractions in (0, 1]; robustness only
    std::vector<TargetPosition> targets{TargetPosition::Last};
    double max_rounds_factor = 10.0;  ///< inject stops after max(factor n, 2n + 2) additions

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Parses `key = value` lines; '#' starts a comment. Lists are comma
/// separated and integers also accept ranges "lo-hi" or "lo-hi:step".
/// Keys: experiment, cultures, m, n, replicates, seed, rules, alpha, ell,
/// retain (percent), targets, max_rounds_factor. Throws ParseError.
ExperimentSpec parse_experiment_spec(std::istream& in);

/// Seed for one replicate at one sweep point.
std::uint64_t replicate_seed(std::uint64_t base, std::size_t culture, std::size_t m, std::size_t n, std::size_t replicate);

/// Kendall tau-b, with two constant vectors counting as identical orders
/// (tau = 1) and a single constant vector as undefined.
std::optional<double> ranking_agreement(const std::vector<double>& x, const std::vector<double>& y);

struct CorrelationRecord {
    std::size_t culture = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
    std::optional<double> borda_copeland;
    std::optional<double> borda_variance;
    std::optional<double> copeland_variance;
};

struct RobustnessRecord {
    std::size_t culture = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    ScoringRule rule = ScoringRule::Borda;
    double retain = 1.0;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
    std::optional<double> tau;
};

struct InjectRecord {
    std::size_t culture = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    ScoringRule rule = ScoringRule::Borda;
    TargetPosition target_position = TargetPosition::Last;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
    Issue target = 0;
    std::size_t rounds = 0;
    bool succeeded = false;
    /// positions[r][j]: 1-based divisiveness position, after r additions, of
    /// the issue that started at position j + 1. Filled for inject-trace only.
    std::vector<std::vector<std::size_t>> positions;

    double added_percent() const { return 100.0 * static_cast<double>(rounds) / static_cast<double>(n); }
};

struct RunOptions {
    std::size_t jobs = 1;
    /// Checked before each replicate; once set no new replicate starts.
    const std::atomic<bool>* stop = nullptr;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void write_csv(std::ostream& out) const;
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<CorrelationRecord> correlation;
    std::vector<RobustnessRecord> robustness;
    std::vector<InjectRecord> inject;
    std::size_t completed = 0;  ///< replicates finished
    std::size_t scheduled = 0;  ///< replicates in the sweep

    bool interrupted() const { return completed < scheduled; }

    /// One row per (replicate, sweep point).
    Table replicate_table() const;
    /// One row per sweep point, aggregated over replicates in replicate order.
    Table summary_table() const;
    /// {"experiment": ..., "series": [{"label", "x": [...], "y": [...]}]}
    std::string plot_json() const;
};

/// Runs every replicate of the sweep, up to `options.jobs` at a time. The
/// records come back in sweep order whatever the completion order.
ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

}  // namespace divisive
