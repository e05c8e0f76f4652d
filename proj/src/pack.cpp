#include "codeveil/pack.hpp"

#include <istream>
#include <ostream>

#include "codeveil/errors.hpp"

namespace codeveil {
namespace {

/// Token stream of one record with its per-token trainability.
struct EncodedRecord {
    std::vector<std::uint32_t> ids;
    std::vector<bool> trainable;
};

EncodedRecord encode_record(const TrainingRecord& record, const TokenizerAdapter& tokenizer) {
    EncodedRecord out;
    for (const auto& segment : record.segments) {
        auto ids = tokenizer.encode(segment.text);
        out.ids.insert(out.ids.end(), ids.begin(), ids.end());
        out.trainable.insert(out.trainable.end(), ids.size(), segment.trainable);
    }
    return out;
}

}  // namespace

std::vector<PackedSequence> pack(const std::vector<TrainingRecord>& records,
                                 const TokenizerAdapter& tokenizer, std::size_t window) {
    if (window == 0) throw ConfigError("window must be positive");
    std::vector<PackedSequence> out;
    PackedSequence current;
    auto flush = [&] {
        if (current.token_ids.empty()) return;
        current.token_ids.resize(window, tokenizer.pad_id());
        current.loss_mask.resize(window, false);
        out.push_back(std::move(current));
        current = {};
    };
    for (const auto& record : records) {
        EncodedRecord encoded = encode_record(record, tokenizer);
        if (window - current.token_ids.size() < encoded.ids.size() &&
            encoded.ids.size() <= window)
            flush();
        std::size_t offset = 0;
        while (offset < encoded.ids.size()) {
            if (current.token_ids.size() == window) flush();
            if (offset == 0) current.boundaries.push_back(current.token_ids.size());
            std::size_t room = window - current.token_ids.size();
            std::size_t take = std::min(room, encoded.ids.size() - offset);
            for (std::size_t i = 0; i < take; ++i) {
                current.token_ids.push_back(encoded.ids[offset + i]);
                current.loss_mask.push_back(encoded.trainable[offset + i]);
            }
            offset += take;
        }
    }
    flush();
    return out;
}

void write_shard(std::ostream& out, const std::vector<PackedSequence>& sequences) {
    for (const auto& seq : sequences) {
        for (std::uint32_t id : seq.token_ids) {
            unsigned char bytes[4] = {static_cast<unsigned char>(id & 0xff),
                                      static_cast<unsigned char>((id >> 8) & 0xff),
                                      static_cast<unsigned char>((id >> 16) & 0xff),
                                      static_cast<unsigned char>((id >> 24) & 0xff)};
            out.write(reinterpret_cast<const char*>(bytes), 4);
        }
        std::size_t mask_bytes = (seq.loss_mask.size() + 7) / 8;
        for (std::size_t b = 0; b < mask_bytes; ++b) {
            unsigned char byte = 0;
            for (std::size_t bit = 0; bit < 8; ++bit) {
                std::size_t i = b * 8 + bit;
                if (i < seq.loss_mask.size() && seq.loss_mask[i]) byte |= 1u << bit;
            }
            out.write(reinterpret_cast<const char*>(&byte), 1);
        }
    }
}

std::vector<PackedSequence> read_shard(std::istream& in, std::size_t window, std::size_t count) {
    std::vector<PackedSequence> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        PackedSequence seq;
        seq.token_ids.resize(window);
        for (std::size_t i = 0; i < window; ++i) {
            unsigned char bytes[4];
            in.read(reinterpret_cast<char*>(bytes), 4);
            seq.token_ids[i] = static_cast<std::uint32_t>(bytes[0]) |
                               (static_cast<std::uint32_t>(bytes[1]) << 8) |
                               (static_cast<std::uint32_t>(bytes[2]) << 16) |
                               (static_cast<std::uint32_t>(bytes[3]) << 24);
        }
        std::size_t mask_bytes = (window + 7) / 8;
        seq.loss_mask.resize(window);
        for (std::size_t b = 0; b < mask_bytes; ++b) {
            unsigned char byte = 0;
            in.read(reinterpret_cast<char*>(&byte), 1);
            for (std::size_t bit = 0; bit < 8 && b * 8 + bit < window; ++bit)
                seq.loss_mask[b * 8 + bit] = (byte >> bit) & 1u;
        }
        if (!in) throw ConfigError("shard truncated");
        out.push_back(std::move(seq));
    }
    return out;
}

}  // namespace codeveil
