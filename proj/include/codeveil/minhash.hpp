#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace codeveil {

/// Hashed k-token shingle set of a document.
using ShingleSet = std::unordered_set<std::uint64_t>;

/// All overlapping k-windows of whitespace tokens, each hashed to 64 bits.
/// Fewer than k tokens yields the empty set.
ShingleSet shingles(const std::string& content, std::size_t k = 20);

/// Exact Jaccard similarity of two shingle sets; 0 when both are empty.
double jaccard(const ShingleSet& a, const ShingleSet& b);

/// Per-permutation minima over a shingle set.  The fraction of equal
/// positions between two signatures estimates their Jaccard similarity.
class MinHashSignature {
public:
    static constexpr std::uint64_t kEmptySentinel = std::numeric_limits<std::uint64_t>::max();

    MinHashSignature() = default;
    MinHashSignature(const ShingleSet& set, std::size_t permutations = 128,
                     std::uint64_t seed = 0x5eed);

    const std::vector<std::uint64_t>& values() const { return values_; }
    std::size_t permutation_count() const { return values_.size(); }

    double estimate_similarity(const MinHashSignature& other) const;

    /// Elementwise minimum; equals the signature of the union of the sets.
    MinHashSignature merged_with(const MinHashSignature& other) const;

private:
    std::vector<std::uint64_t> values_;
};

/// Streaming LSH index: first-seen documents are retained, later documents
/// are dropped when some banding candidate's estimated similarity reaches
/// the threshold.
class DedupIndex {
public:
    DedupIndex(std::size_t permutations = 128, std::size_t bands = 16, double threshold = 0.75);

    /// Returns true when the document is retained (no near duplicate yet).
    bool insert(const MinHashSignature& signature);

    std::size_t retained_count() const { return retained_.size(); }
    std::size_t dropped_count() const { return dropped_; }

private:
    std::size_t bands_;
    std::size_t rows_;
    double threshold_;
    std::size_t dropped_ = 0;
    std::vector<MinHashSignature> retained_;
    std::vector<std::unordered_map<std::uint64_t, std::vector<std::size_t>>> tables_;

    std::uint64_t band_key(const MinHashSignature& sig, std::size_t band) const;
};

}  // namespace codeveil
