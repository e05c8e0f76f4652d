#pragma once

#include <string>
#include <vector>

#include "codeveil/language.hpp"

namespace codeveil {

/// Fork-count bands for intake thresholds.
enum class ForkBand { High, Mid, Low };

/// Quality thresholds applied to one fork band.  All comparisons are strict:
/// average and maximum line length must be below their bounds, the
/// alphanumeric fraction above its bound.
struct FilterRule {
    ForkBand fork_band = ForkBand::High;
    double max_avg_line_len = 140.0;
    std::size_t max_line_len = 500;
    double min_alnum_frac = 0.25;
};

/// The three default bands: forks > 25 -> (140, 500, 0.25),
/// 10..25 -> (120, 200, 0.35), < 10 -> (100, 200, 0.40).
std::vector<FilterRule> default_filter_rules();

/// Band for a document's fork count.
ForkBand fork_band_for(std::uint64_t fork_count);

/// Per-document line statistics used by the filter.
struct LineStats {
    std::size_t line_count = 0;
    std::size_t max_line_len = 0;
    double avg_line_len = 0.0;
    double alnum_frac = 0.0;
};

LineStats compute_line_stats(const std::string& content);

/// Outcome of the intake filter; `reason` names the first failing check and
/// is empty on a pass.
struct FilterDecision {
    bool passed = false;
    std::string reason;
};

/// Applies the line cap, the extension whitelist, and the band rule.
FilterDecision passes_filter(const SourceDocument& doc, const std::vector<FilterRule>& rules);

}  // namespace codeveil
