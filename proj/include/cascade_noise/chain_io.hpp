#pragma once

#include <string>
#include <vector>

#include "cascade_noise/chain.hpp"

namespace cascade_noise {

// Parsed form of a chain description file. The document is JSON with exactly
// two top-level members:
//
//   {
//     "source": { "signal": <number >0>, "noise": <number >0> },
//     "stages": [
//       { "gain": 10, "added_noise": 5 },
//       { "gain_db": 10, "friis_figure_db": 1.76 },
//       { "gain": 10, "corrected_figure_db": 0.14 }
//     ]
//   }
//
// Each stage carries exactly one of {gain, gain_db} and exactly one of
// {added_noise, friis_figure_db, corrected_figure_db}. Unknown members are
// rejected anywhere in the document.
struct ChainDocument {
    SourceSpec source;
    std::vector<RawStageSpec> stages;
};

// Throws ParseError on malformed syntax or schema violations; messages name
// the offending stage (1-based) or "source" where that applies.
ChainDocument parse_chain_document(const std::string& text);

// Reads and parses a document file. Missing/unreadable file → ParseError
// naming the path.
ChainDocument load_chain_document(const std::string& path);

// Parse straight to a validated chain (resolve_chain + ensure_valid).
CascadeChain chain_from_document(const ChainDocument& document);

// Serialize a resolved chain back to document text with linear fields only.
// parse → emit → parse is lossless (values are rendered round-trip exact).
std::string emit_chain_document(const CascadeChain& chain);

}  // namespace cascade_noise
