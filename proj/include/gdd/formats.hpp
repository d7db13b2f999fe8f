#pragma once

#include <optional>
#include <string>

#include "gdd/lspace.hpp"

namespace gdd {

// Flat-file grammars; see FORMATS.md at the repository root. Parsers are
// strict: unreduced coefficients, zero residues, duplicate or missing fields
// are ParseErrors with a line number. Serializers emit the canonical form,
// which re-parses to an equal object and round-trips byte-identically.

enum class DocKind { Datum, LSpace };

DocKind sniff_kind(const std::string& text);

CharacterizingDatum parse_datum(const std::string& text);
std::string serialize_datum(const CharacterizingDatum& d);

LSpaceCandidate parse_lspace(const std::string& text);
std::string serialize_lspace(const LSpaceCandidate& c);

/// Resumable search cursor: per-shard counts of completed outer work items.
struct Checkpoint {
    std::string command;
    std::string params;
    std::vector<int64_t> done; // indexed by shard
};

Checkpoint parse_checkpoint(const std::string& text);
std::string serialize_checkpoint(const Checkpoint& c);

} // namespace gdd
