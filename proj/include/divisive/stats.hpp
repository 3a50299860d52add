#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

namespace divisive {

class UndefinedTauError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CorrelationReport {
    double tau = 0.0;
    std::size_t pairs_concordant = 0;
    std::size_t pairs_discordant = 0;
    std::size_t ties_x = 0;  ///< pairs tied in x only
    std::size_t ties_y = 0;  ///< pairs tied in y only
};

/// Values closer than this count as tied.
inline constexpr double kTauTieTolerance = 1e-12;

/// Kendall's tau-b between two score vectors over the same items.
///
/// tau_b = (C - D) / sqrt((C + D + T_x) (C + D + T_y)); pairs tied on both
/// sides count in neither. Throws UndefinedTauError when either vector is
/// constant, std::invalid_argument for mismatched or too-short input.
CorrelationReport kendall_tau(std::span<const double> x, std::span<const double> y);

struct RunSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double q10 = 0.0;
    double q90 = 0.0;
};

/// Throw std::domain_error on empty input.
double mean(std::span<const double> values);
double median(std::span<const double> values);

/// Linearly interpolated quantile at q in [0, 1] (the R type-7 rule).
double quantile(std::span<const double> values, double q);

/// Count, mean, median and the 10% / 90% quantiles.
RunSummary aggregate_runs(std::span<const double> values);

}  // namespace divisive
