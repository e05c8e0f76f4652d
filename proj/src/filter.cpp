#include "codeveil/filter.hpp"

#include <algorithm>
#include <cctype>

namespace codeveil {

std::vector<FilterRule> default_filter_rules() {
    return {
        {ForkBand::High, 140.0, 500, 0.25},
        {ForkBand::Mid, 120.0, 200, 0.35},
        {ForkBand::Low, 100.0, 200, 0.40},
    };
}

ForkBand fork_band_for(std::uint64_t fork_count) {
    if (fork_count > 25) return ForkBand::High;
    if (fork_count >= 10) return ForkBand::Mid;
    return ForkBand::Low;
}

LineStats compute_line_stats(const std::string& content) {
    LineStats stats;
    std::size_t line_len = 0;
    std::size_t total_line_bytes = 0;
    std::size_t alnum = 0;
    for (char c : content) {
        if (std::isalnum(static_cast<unsigned char>(c))) ++alnum;
        if (c == '\n') {
            ++stats.line_count;
            stats.max_line_len = std::max(stats.max_line_len, line_len);
            total_line_bytes += line_len;
            line_len = 0;
        } else {
            ++line_len;
        }
    }
    if (line_len > 0) {  // final line without trailing newline
        ++stats.line_count;
        stats.max_line_len = std::max(stats.max_line_len, line_len);
        total_line_bytes += line_len;
    }
    if (stats.line_count > 0)
        stats.avg_line_len = static_cast<double>(total_line_bytes) /
                             static_cast<double>(stats.line_count);
    if (!content.empty())
        stats.alnum_frac = static_cast<double>(alnum) / static_cast<double>(content.size());
    return stats;
}

FilterDecision passes_filter(const SourceDocument& doc, const std::vector<FilterRule>& rules) {
    LineStats stats = compute_line_stats(doc.content);
    if (stats.line_count >= 2000) return {false, "line-cap"};

    auto dot = doc.path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : doc.path.substr(dot);
    const auto& allowed = language_extensions(doc.language);
    if (std::find(allowed.begin(), allowed.end(), ext) == allowed.end())
        return {false, "extension"};

    ForkBand band = fork_band_for(static_cast<std::uint64_t>(std::max(doc.fork_count, 0L)));
    const FilterRule* rule = nullptr;
    for (const auto& r : rules)
        if (r.fork_band == band) { rule = &r; break; }
    if (!rule) return {false, "no-rule-for-band"};

    if (!(stats.avg_line_len < rule->max_avg_line_len)) return {false, "avg-line-length"};
    if (!(stats.max_line_len < rule->max_line_len)) return {false, "max-line-length"};
    if (!(stats.alnum_frac > rule->min_alnum_frac)) return {false, "alnum-fraction"};
    return {true, ""};
}

}  // namespace codeveil
