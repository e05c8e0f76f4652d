#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "codeveil/records.hpp"
#include "codeveil/tokens.hpp"

namespace codeveil {

/// One fixed-length training window.
struct PackedSequence {
    std::vector<std::uint32_t> token_ids;
    std::vector<bool> loss_mask;
    /// Offsets where a new record starts inside this window.
    std::vector<std::size_t> boundaries;
};

/// Greedily packs records into fixed windows.  A record that does not fit in
/// the remaining space of the current window flushes it (padded, mask off);
/// records longer than a whole window are split at token boundaries with
/// their mask carried through.
std::vector<PackedSequence> pack(const std::vector<TrainingRecord>& records,
                                 const TokenizerAdapter& tokenizer, std::size_t window = 2048);

/// Binary shard format: for each sequence, `window` little-endian u32 ids
/// followed by ceil(window/8) bytes of LSB-first mask bits.  The JSON
/// sidecar {window, count, tokenizer_id} is written by the caller.
void write_shard(std::ostream& out, const std::vector<PackedSequence>& sequences);
std::vector<PackedSequence> read_shard(std::istream& in, std::size_t window, std::size_t count);

}  // namespace codeveil
