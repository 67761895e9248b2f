#include "sudotrans/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sudotrans {

namespace {

constexpr std::string_view kHeaderPrefix = "# sudotrans corpus v1 checksum=";

std::string checksum_hex(std::uint64_t value) {
  char buf[17];
  for (int k = 15; k >= 0; --k) {
    buf[k] = "0123456789abcdef"[value & 0xf];
    value >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

bool looks_like_puzzle_line(std::string_view s, bool allow_empties) {
  if (s.size() != 81) return false;
  return std::all_of(s.begin(), s.end(), [allow_empties](char ch) {
    if (ch >= '1' && ch <= '9') return true;
    return allow_empties && (ch == '.' || ch == '0');
  });
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::vector<CorpusEntry> parse_corpus_text(std::string_view text) {
  const std::size_t newline = text.find('\n');
  if (newline == std::string_view::npos || text.substr(0, kHeaderPrefix.size()) != kHeaderPrefix)
    throw CorpusError("corpus: missing or malformed header line");
  const std::string_view hex = text.substr(kHeaderPrefix.size(), newline - kHeaderPrefix.size());
  std::uint64_t expected = 0;
  auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), expected, 16);
  if (ec != std::errc{} || ptr != hex.data() + hex.size())
    throw CorpusError("corpus: unreadable checksum in header");

  const std::string_view payload = text.substr(newline + 1);
  const std::uint64_t actual = fnv1a64(payload);
  if (actual != expected)
    throw CorpusError("corpus checksum mismatch: header says " + checksum_hex(expected) +
                      ", payload hashes to " + checksum_hex(actual));

  std::vector<CorpusEntry> entries;
  std::istringstream lines{std::string(payload)};
  std::string line;
  int line_no = 1;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    CorpusEntry entry;
    std::string solutions_field;
    if (!(fields >> entry.id >> entry.puzzle >> entry.oracle_solution_count >> solutions_field))
      throw CorpusError("corpus line " + std::to_string(line_no) + ": expected 4 fields");
    if (!looks_like_puzzle_line(entry.puzzle, true))
      throw CorpusError("corpus line " + std::to_string(line_no) + ": bad puzzle field");
    if (solutions_field != "-") {
      std::istringstream sols(solutions_field);
      std::string sol;
      while (std::getline(sols, sol, ';')) {
        if (!looks_like_puzzle_line(sol, false))
          throw CorpusError("corpus line " + std::to_string(line_no) + ": bad solution field");
        entry.golden_solutions.push_back(sol);
      }
    }
    if (entry.oracle_solution_count < 0 ||
        (entry.oracle_solution_count <= 16 &&
         entry.oracle_solution_count != static_cast<long long>(entry.golden_solutions.size())))
      throw CorpusError("corpus line " + std::to_string(line_no) +
                        ": solution count does not match golden solutions");
    if (!std::is_sorted(entry.golden_solutions.begin(), entry.golden_solutions.end()))
      throw CorpusError("corpus line " + std::to_string(line_no) + ": solutions not sorted");
    entry.clue_count = static_cast<int>(
        std::count_if(entry.puzzle.begin(), entry.puzzle.end(),
                      [](char ch) { return ch >= '1' && ch <= '9'; }));
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string format_corpus_text(const std::vector<CorpusEntry>& entries) {
  std::ostringstream payload;
  for (const CorpusEntry& entry : entries) {
    payload << entry.id << ' ' << entry.puzzle << ' ' << entry.oracle_solution_count << ' ';
    if (entry.golden_solutions.empty()) {
      payload << '-';
    } else {
      for (std::size_t k = 0; k < entry.golden_solutions.size(); ++k) {
        if (k > 0) payload << ';';
        payload << entry.golden_solutions[k];
      }
    }
    payload << '\n';
  }
  const std::string body = payload.str();
  return std::string(kHeaderPrefix) + checksum_hex(fnv1a64(body)) + "\n" + body;
}

const std::vector<CorpusEntry>& load_corpus() {
  static const std::vector<CorpusEntry> entries = parse_corpus_text(detail::kEmbeddedCorpusText);
  return entries;
}

}  // namespace sudotrans
