#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sudotrans/grid.hpp"

namespace sudotrans {

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One embedded test puzzle with its oracle-generated golden data.
struct CorpusEntry {
  std::string id;
  std::string puzzle;  // 81-char line
  int clue_count = 0;
  long long oracle_solution_count = 0;
  std::vector<std::string> golden_solutions;  // sorted 81-char lines
};

/// The embedded corpus, parsed and checksum-verified once per process.
/// Golden fields were generated by the oracle at corpus-build time (see
/// tools/corpus_gen); regeneration is deterministic.
const std::vector<CorpusEntry>& load_corpus();

/// Corpus text: a header line carrying a checksum of the payload, then
/// one record per line: id, puzzle, count, semicolon-joined solutions
/// ('-' when there are none). Throws CorpusError on a bad header,
/// checksum mismatch, or malformed record.
std::vector<CorpusEntry> parse_corpus_text(std::string_view text);
std::string format_corpus_text(const std::vector<CorpusEntry>& entries);

/// FNV-1a 64-bit, used for the corpus payload checksum.
std::uint64_t fnv1a64(std::string_view data);

namespace detail {
extern const char* const kEmbeddedCorpusText;
}

}  // namespace sudotrans
