#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace codeveil {

inline constexpr const char* kSrcToObf = "<src_to_obf>";
inline constexpr const char* kObfToSrc = "<obf_to_src>";
inline constexpr const char* kEos = "<|EOS|>";

/// The fixed special-token vocabulary: the two direction sentinels followed
/// by all placeholders (VAR_0.., FUNC_0.., CLASS_0.., ID_0.., IMPORT_0..,
/// 150 each).  752 tokens; the end-of-sequence marker is carried separately.
struct SpecialTokenInventory {
    std::vector<std::string> tokens;
    std::string eos = kEos;
};

SpecialTokenInventory special_token_inventory();

/// Text-to-id interface used by the packing stage.  Implementations must
/// encode inventory tokens atomically.
class TokenizerAdapter {
public:
    virtual ~TokenizerAdapter() = default;
    virtual std::vector<std::uint32_t> encode(const std::string& text) const = 0;
    virtual std::uint32_t eos_id() const = 0;
    virtual std::uint32_t pad_id() const = 0;
    virtual std::size_t vocab_size() const = 0;
    virtual std::string id_string() const = 0;
};

/// Deterministic desk-scale tokenizer: ids 0..255 are raw bytes, inventory
/// tokens and the end-of-sequence marker follow.  Identifier-shaped runs are
/// matched against the inventory as whole tokens, so VAR_01 never splits
/// into VAR_0 + '1'.
class ByteFallbackTokenizer : public TokenizerAdapter {
public:
    ByteFallbackTokenizer();

    std::vector<std::uint32_t> encode(const std::string& text) const override;
    std::uint32_t eos_id() const override { return eos_id_; }
    std::uint32_t pad_id() const override { return 0; }
    std::size_t vocab_size() const override { return 256 + specials_.size();  }
    std::string id_string() const override { return "byte-fallback-v1"; }

private:
    std::unordered_map<std::string, std::uint32_t> specials_;
    std::uint32_t eos_id_ = 0;
};

}  // namespace codeveil
