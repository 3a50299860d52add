#include "divisive/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace divisive {

CorrelationReport kendall_tau(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("kendall_tau needs vectors of equal length");
    if (x.size() < 2) throw std::invalid_argument("kendall_tau needs at least two items");
    CorrelationReport report;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            const bool tied_x = std::abs(dx) <= kTauTieTolerance;
            const bool tied_y = std::abs(dy) <= kTauTieTolerance;
            if (tied_x && tied_y) continue;
            if (tied_x) {
                ++report.ties_x;
            } else if (tied_y) {
                ++report.ties_y;
            } else if ((dx > 0) == (dy > 0)) {
                ++report.pairs_concordant;
            } else {
                ++report.pairs_discordant;
            }
        }
    }
    const auto c = static_cast<double>(report.pairs_concordant);
    const auto d = static_cast<double>(report.pairs_discordant);
    const double untied_x = c + d + static_cast<double>(report.ties_y);
    const double untied_y = c + d + static_cast<double>(report.ties_x);
    if (untied_x == 0.0 || untied_y == 0.0) throw UndefinedTauError("kendall tau is undefined for a constant vector");
    report.tau = (c - d) / std::sqrt(untied_x * untied_y);
    return report;
}

double mean(std::span<const double> values) {
    if (values.empty()) throw std::domain_error("mean of an empty list");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double quantile(std::span<const double> values, double q) {
    if (values.empty()) throw std::domain_error("quantile of an empty list");
    if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("quantile level must lie in [0, 1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double median(std::span<const double> values) { return quantile(values, 0.5); }

RunSummary aggregate_runs(std::span<const double> values) {
    RunSummary s;
    s.count = values.size();
    s.mean = mean(values);
    s.median = median(values);
    s.q10 = quantile(values, 0.1);
    s.q90 = quantile(values, 0.9);
    return s;
}

}  // namespace divisive
