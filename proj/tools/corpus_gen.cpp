// Deterministic corpus builder. Produces data/corpus.txt and the embedded
// copy in src/corpus_data.cpp; golden solutions come from the backtracking
// oracle, never from the transportation solver under test.
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sudotrans/corpus.hpp"
#include "sudotrans/oracle.hpp"
#include "sudotrans/solver.hpp"

namespace {

using namespace sudotrans;

// mt19937_64 output is part of the standard, so deriving values with plain
// arithmetic (instead of distribution objects) keeps runs bit-identical
// across standard libraries.
int rand_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
  for (int i = static_cast<int>(items.size()) - 1; i > 0; --i)
    std::swap(items[i], items[rand_below(rng, i + 1)]);
}

std::array<int, 9> random_digit_permutation(std::mt19937_64& rng) {
  std::vector<int> perm{0, 1, 2, 3, 4, 5, 6, 7, 8};
  shuffle_in_place(perm, rng);
  std::array<int, 9> out{};
  std::copy(perm.begin(), perm.end(), out.begin());
  return out;
}

// Index permutation of 0..8 built from a permutation of the three bands and
// a permutation of the three lines inside each band; preserves validity.
std::array<int, 9> random_line_permutation(std::mt19937_64& rng) {
  std::vector<int> bands{0, 1, 2};
  shuffle_in_place(bands, rng);
  std::array<int, 9> map{};
  for (int b = 0; b < 3; ++b) {
    std::vector<int> lines{0, 1, 2};
    shuffle_in_place(lines, rng);
    for (int l = 0; l < 3; ++l) map[b * 3 + l] = bands[b] * 3 + lines[l];
  }
  return map;
}

SolutionGrid random_full_grid(std::mt19937_64& rng) {
  const std::array<int, 9> relabel = random_digit_permutation(rng);
  const std::array<int, 9> row_map = random_line_permutation(rng);
  const std::array<int, 9> col_map = random_line_permutation(rng);
  const bool transpose = rand_below(rng, 2) == 1;

  std::string line(81, '0');
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      int rr = row_map[r], cc = col_map[c];
      if (transpose) std::swap(rr, cc);
      const int base = (rr * 3 + rr / 3 + cc) % 9;  // canonical valid grid
      line[r * 9 + c] = static_cast<char>('1' + relabel[base]);
    }
  }
  return SolutionGrid::parse(line);
}

bool is_unique(const PuzzleGrid& puzzle) { return oracle_count(puzzle, 2) == 1; }

std::vector<int> shuffled_cells(std::mt19937_64& rng) {
  std::vector<int> cells(81);
  for (int k = 0; k < 81; ++k) cells[k] = k;
  shuffle_in_place(cells, rng);
  return cells;
}

// Deletes clues in a seeded order while the puzzle stays unique, stopping
// once the clue count reaches `target` (target 0 = delete as far as possible).
PuzzleGrid unique_by_deletion(std::mt19937_64& rng, int target) {
  PuzzleGrid puzzle = random_full_grid(rng).as_puzzle();
  for (int cell : shuffled_cells(rng)) {
    if (puzzle.clue_count() <= target) break;
    const CellCoord coord = CellCoord::from_index(cell);
    const std::optional<Digit> saved = puzzle.at(coord);
    if (!saved) continue;
    puzzle.set(coord, std::nullopt);
    if (!is_unique(puzzle)) puzzle.set(coord, saved);
  }
  return puzzle;
}

// Deletes clues until the oracle count lands in [2, 16]; deletions that
// overshoot past 16 are undone and another cell is tried.
std::optional<PuzzleGrid> multi_by_deletion(std::mt19937_64& rng) {
  PuzzleGrid puzzle = unique_by_deletion(rng, 28);
  for (int cell : shuffled_cells(rng)) {
    const CellCoord coord = CellCoord::from_index(cell);
    const std::optional<Digit> saved = puzzle.at(coord);
    if (!saved) continue;
    puzzle.set(coord, std::nullopt);
    const long long count = oracle_count(puzzle, 17);
    if (count >= 2 && count <= 16) return puzzle;
    if (count >= 17) puzzle.set(coord, saved);
  }
  return std::nullopt;
}

// Plants one wrong-but-consistent clue in a unique puzzle. The clue
// contradicts the only completion, so the result has no solutions, yet it
// is gated to keep the relaxation objective at its clue-count floor.
std::optional<PuzzleGrid> unsat_by_wrong_clue(std::mt19937_64& rng) {
  const PuzzleGrid base = unique_by_deletion(rng, 26);
  const SolutionGrid solution = oracle_solve_all(base, 2).front();
  for (int cell : shuffled_cells(rng)) {
    const CellCoord coord = CellCoord::from_index(cell);
    if (base.at(coord)) continue;
    std::vector<int> digits{1, 2, 3, 4, 5, 6, 7, 8, 9};
    shuffle_in_place(digits, rng);
    for (int d : digits) {
      if (d == solution.at(coord).value()) continue;
      PuzzleGrid candidate = base;
      candidate.set(coord, Digit(d));
      if (!validate_puzzle(candidate).ok()) continue;
      const Cost floor = -static_cast<Cost>(candidate.clue_count());
      if (first_relaxation_objective(candidate, BigM(1)) != floor) continue;
      if (oracle_count(candidate, 1) != 0) continue;
      return candidate;
    }
  }
  return std::nullopt;
}

// Published 17-clue puzzles; each is admitted only if the oracle confirms
// a unique solution, so a wrong transcription just shrinks the pool.
const char* const kSeventeenClueCandidates[] = {
    "000000010400000000020000000000050407008000300001090000300400200050100000000806000",
    "000000012000035000000600070700000300000400800100000000000120000080000040050000600",
};

std::string two_digit_id(char prefix, int number) {
  std::string id(1, prefix);
  if (number < 10) id += '0';
  id += std::to_string(number);
  return id;
}

CorpusEntry make_entry(std::string id, const PuzzleGrid& puzzle) {
  CorpusEntry entry;
  entry.id = std::move(id);
  entry.puzzle = puzzle.to_line();
  entry.clue_count = static_cast<int>(puzzle.clue_count());
  const std::vector<SolutionGrid> solutions = oracle_solve_all(puzzle, 17);
  for (const SolutionGrid& g : solutions) entry.golden_solutions.push_back(g.to_line());
  entry.oracle_solution_count = static_cast<long long>(solutions.size());
  return entry;
}

void verify_entry(const CorpusEntry& entry) {
  const PuzzleGrid puzzle = PuzzleGrid::parse(entry.puzzle);
  if (!validate_puzzle(puzzle).ok()) throw CorpusError(entry.id + ": inconsistent puzzle");
  if (static_cast<int>(puzzle.clue_count()) != entry.clue_count)
    throw CorpusError(entry.id + ": clue count drifted");
  const std::vector<SolutionGrid> again = oracle_solve_all(puzzle, 17);
  std::vector<std::string> lines;
  for (const SolutionGrid& g : again) lines.push_back(g.to_line());
  if (lines != entry.golden_solutions) throw CorpusError(entry.id + ": oracle rerun disagrees");
  for (const std::string& sol : entry.golden_solutions)
    if (!validate_solution(SolutionGrid::parse(sol), puzzle).ok())
      throw CorpusError(entry.id + ": golden solution fails validation");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw CorpusError("failed writing " + path);
}

std::string embedded_source(const std::string& corpus_text) {
  std::string src;
  src += "// Generated by tools/corpus_gen. Do not edit by hand; regenerate with:\n";
  src += "//   corpus_gen --write-data data/corpus.txt --write-source src/corpus_data.cpp\n";
  src += "#include \"sudotrans/corpus.hpp\"\n\nnamespace sudotrans::detail {\n\n";
  src += "const char* const kEmbeddedCorpusText = R\"corpus(";
  src += corpus_text;
  src += ")corpus\";\n\n}  // namespace sudotrans::detail\n";
  return src;
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_path = "data/corpus.txt";
  std::string source_path = "src/corpus_data.cpp";
  std::uint64_t seed = 0x5eedc0de;

  CLI::App app{"Regenerates the embedded puzzle corpus"};
  app.add_option("--write-data", data_path, "corpus text output path");
  app.add_option("--write-source", source_path, "embedded C++ source output path");
  app.add_option("--seed", seed, "generator seed (changing it changes the corpus)");
  CLI11_PARSE(app, argc, argv);

  try {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> entries;
    std::set<std::string> seen;
    const auto admit = [&](char prefix, int& counter, const PuzzleGrid& puzzle) {
      if (!seen.insert(puzzle.to_line()).second) return false;
      entries.push_back(make_entry(two_digit_id(prefix, ++counter), puzzle));
      return true;
    };

    int unique_count = 0;
    for (const char* candidate : kSeventeenClueCandidates) {
      const PuzzleGrid puzzle = PuzzleGrid::parse(candidate);
      if (validate_puzzle(puzzle).ok() && is_unique(puzzle)) {
        admit('u', unique_count, puzzle);
        std::cout << "admitted 17-clue puzzle " << entries.back().id << "\n";
      } else {
        std::cout << "rejected 17-clue candidate (oracle says not unique)\n";
      }
    }

    std::vector<int> targets;
    for (int k = 0; k < 6; ++k) targets.push_back(0);
    for (int t = 22; t <= 40; ++t) {
      targets.push_back(t);
      targets.push_back(t);
    }
    for (int t = 24; t <= 38; t += 2) targets.push_back(t);
    for (int target : targets)
      while (!admit('u', unique_count, unique_by_deletion(rng, target))) {
      }

    int multi_count = 0;
    while (multi_count < 12) {
      const std::optional<PuzzleGrid> puzzle = multi_by_deletion(rng);
      if (puzzle && oracle_count(*puzzle, 17) >= 2) admit('m', multi_count, *puzzle);
    }

    int unsat_count = 0;
    while (unsat_count < 4) {
      const std::optional<PuzzleGrid> puzzle = unsat_by_wrong_clue(rng);
      if (puzzle) admit('x', unsat_count, *puzzle);
    }

    int min_clues = 81, max_clues = 0;
    long long uniques = 0, multis = 0, unsats = 0;
    for (const CorpusEntry& entry : entries) {
      verify_entry(entry);
      if (entry.id[0] == 'u') {
        ++uniques;
        min_clues = std::min(min_clues, entry.clue_count);
        max_clues = std::max(max_clues, entry.clue_count);
        if (entry.oracle_solution_count != 1) throw CorpusError(entry.id + ": not unique");
        if (entry.clue_count < 17 || entry.clue_count > 40)
          throw CorpusError(entry.id + ": clue count outside [17, 40]");
      } else if (entry.id[0] == 'm') {
        ++multis;
        if (entry.oracle_solution_count < 2 || entry.oracle_solution_count > 16)
          throw CorpusError(entry.id + ": solution count outside [2, 16]");
      } else {
        ++unsats;
        if (entry.oracle_solution_count != 0) throw CorpusError(entry.id + ": not unsatisfiable");
      }
    }
    if (uniques < 50 || multis < 10 || unsats < 3)
      throw CorpusError("corpus quota not met");

    const std::string corpus_text = format_corpus_text(entries);
    if (!(parse_corpus_text(corpus_text).size() == entries.size()))
      throw CorpusError("corpus text does not round-trip");

    write_file(data_path, corpus_text);
    write_file(source_path, embedded_source(corpus_text));
    std::cout << "wrote " << entries.size() << " entries (" << uniques << " unique, " << multis
              << " multi, " << unsats << " unsatisfiable)\n"
              << "unique clue counts span [" << min_clues << ", " << max_clues << "]\n"
              << "data: " << data_path << "\nsource: " << source_path << "\n";
  } catch (const std::exception& e) {
    std::cerr << "corpus_gen: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
