#include "codeveil/minhash.hpp"

#include <cctype>
#include <random>

#include "codeveil/errors.hpp"

namespace codeveil {
namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;
// Mersenne prime 2^61 - 1; permutations are (a*h + b) mod p.
constexpr std::uint64_t kMersenne = (1ull << 61) - 1;

std::uint64_t fnv1a(std::uint64_t h, const char* data, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kMersenne);
}

}  // namespace

ShingleSet shingles(const std::string& content, std::size_t k) {
    if (k == 0) throw ConfigError("shingle size must be positive");
    std::vector<std::pair<std::size_t, std::size_t>> tokens;  // (offset, length)
    std::size_t i = 0;
    while (i < content.size()) {
        while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
        std::size_t start = i;
        while (i < content.size() && !std::isspace(static_cast<unsigned char>(content[i]))) ++i;
        if (i > start) tokens.emplace_back(start, i - start);
    }
    ShingleSet out;
    if (tokens.size() < k) return out;
    for (std::size_t w = 0; w + k <= tokens.size(); ++w) {
        std::uint64_t h = kFnvOffset;
        for (std::size_t j = 0; j < k; ++j) {
            auto [off, len] = tokens[w + j];
            h = fnv1a(h, content.data() + off, len);
            h = fnv1a(h, "\x1f", 1);  // token separator
        }
        out.insert(h);
    }
    return out;
}

double jaccard(const ShingleSet& a, const ShingleSet& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::size_t inter = 0;
    const ShingleSet& small = a.size() <= b.size() ? a : b;
    const ShingleSet& large = a.size() <= b.size() ? b : a;
    for (std::uint64_t h : small)
        if (large.count(h)) ++inter;
    return static_cast<double>(inter) /
           static_cast<double>(a.size() + b.size() - inter);
}

MinHashSignature::MinHashSignature(const ShingleSet& set, std::size_t permutations,
                                   std::uint64_t seed) {
    values_.assign(permutations, kEmptySentinel);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(1, kMersenne - 1);
    for (std::size_t p = 0; p < permutations; ++p) {
        std::uint64_t a = coeff(rng);
        std::uint64_t b = coeff(rng);
        std::uint64_t best = kEmptySentinel;
        for (std::uint64_t h : set) {
            std::uint64_t v = (mulmod(a, h % kMersenne) + b) % kMersenne;
            if (v < best) best = v;
        }
        values_[p] = best;
    }
}

double MinHashSignature::estimate_similarity(const MinHashSignature& other) const {
    if (values_.size() != other.values_.size() || values_.empty())
        throw ConfigError("signatures have incompatible permutation counts");
    std::size_t equal = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] == other.values_[i]) ++equal;
    return static_cast<double>(equal) / static_cast<double>(values_.size());
}

MinHashSignature MinHashSignature::merged_with(const MinHashSignature& other) const {
    if (values_.size() != other.values_.size())
        throw ConfigError("signatures have incompatible permutation counts");
    MinHashSignature out;
    out.values_.resize(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = std::min(values_[i], other.values_[i]);
    return out;
}

DedupIndex::DedupIndex(std::size_t permutations, std::size_t bands, double threshold)
    : bands_(bands), rows_(bands == 0 ? 0 : permutations / bands), threshold_(threshold),
      tables_(bands) {
    if (bands == 0 || permutations % bands != 0)
        throw ConfigError("band count must divide the permutation count");
    if (threshold <= 0.0 || threshold >= 1.0)
        throw ConfigError("threshold must lie in (0, 1)");
}

std::uint64_t DedupIndex::band_key(const MinHashSignature& sig, std::size_t band) const {
    std::uint64_t h = kFnvOffset;
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t v = sig.values()[band * rows_ + r];
        h = fnv1a(h, reinterpret_cast<const char*>(&v), sizeof v);
    }
    return h;
}

bool DedupIndex::insert(const MinHashSignature& signature) {
    // Banding proposes candidates; the signature estimate makes the decision,
    // so the effective acceptance curve crosses at the threshold itself.
    std::vector<std::uint64_t> keys(bands_);
    std::unordered_set<std::size_t> candidates;
    for (std::size_t b = 0; b < bands_; ++b) {
        keys[b] = band_key(signature, b);
        auto it = tables_[b].find(keys[b]);
        if (it != tables_[b].end())
            candidates.insert(it->second.begin(), it->second.end());
    }
    for (std::size_t idx : candidates) {
        if (signature.estimate_similarity(retained_[idx]) >= threshold_) {
            ++dropped_;
            return false;
        }
    }
    std::size_t id = retained_.size();
    retained_.push_back(signature);
    for (std::size_t b = 0; b < bands_; ++b) tables_[b][keys[b]].push_back(id);
    return true;
}

}  // namespace codeveil
