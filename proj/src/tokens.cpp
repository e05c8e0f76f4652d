#include "codeveil/tokens.hpp"

#include <cctype>

#include "codeveil/obfuscator.hpp"

namespace codeveil {

SpecialTokenInventory special_token_inventory() {
    SpecialTokenInventory inventory;
    inventory.tokens.reserve(752);
    inventory.tokens.push_back(kSrcToObf);
    inventory.tokens.push_back(kObfToSrc);
    for (SyntaxCategory category :
         {SyntaxCategory::Variable, SyntaxCategory::Function, SyntaxCategory::Class,
          SyntaxCategory::Ambiguous, SyntaxCategory::Import}) {
        for (std::uint32_t i = 0; i < 150; ++i)
            inventory.tokens.push_back(Placeholder{category, i}.render());
    }
    return inventory;
}

ByteFallbackTokenizer::ByteFallbackTokenizer() {
    SpecialTokenInventory inventory = special_token_inventory();
    std::uint32_t next = 256;
    for (const auto& token : inventory.tokens) specials_.emplace(token, next++);
    eos_id_ = next;
    specials_.emplace(inventory.eos, eos_id_);
}

std::vector<std::uint32_t> ByteFallbackTokenizer::encode(const std::string& text) const {
    std::vector<std::uint32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto emit_bytes = [&](std::size_t from, std::size_t to) {
        for (std::size_t j = from; j < to; ++j)
            out.push_back(static_cast<unsigned char>(text[j]));
    };
    while (i < n) {
        char c = text[i];
        if (c == '<') {
            // Sentinels and the end-of-sequence marker start with '<'.
            std::size_t close = text.find('>', i);
            if (close != std::string::npos) {
                auto it = specials_.find(text.substr(i, close - i + 1));
                if (it != specials_.end()) {
                    out.push_back(it->second);
                    i = close + 1;
                    continue;
                }
            }
            out.push_back(static_cast<unsigned char>(c));
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            auto it = specials_.find(text.substr(i, j - i));
            if (it != specials_.end())
                out.push_back(it->second);
            else
                emit_bytes(i, j);
            i = j;
        } else {
            out.push_back(static_cast<unsigned char>(c));
            ++i;
        }
    }
    return out;
}

}  // namespace codeveil
