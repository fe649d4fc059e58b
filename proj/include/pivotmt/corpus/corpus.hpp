#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pivotmt/corpus/language.hpp"

namespace pivotmt::corpus {

enum class Provenance { original, pivot_synthetic, target_synthetic };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct CorpusRow {
  Sentence src;
  std::vector<Sentence> pivots;  // aligned with MultiwayCorpus::pivot_names
  Sentence tgt;

  bool operator==(const CorpusRow&) const = default;
};

struct MultiwayCorpus {
  std::vector<std::string> pivot_names;
  std::vector<CorpusRow> rows;
  Provenance provenance = Provenance::original;

  std::size_t pivot_index(const std::string& name) const;
  const Sentence& pivot(std::size_t row, const std::string& name) const;
  // Rows in the given order.
  MultiwayCorpus subset(const std::vector<std::size_t>& indices) const;
  // Nonempty src/tgt, full pivot columns.
  void validate() const;

  bool operator==(const MultiwayCorpus&) const = default;
};

// One interlingua sentence per row, rendered into source, every pivot and
// target. Pure function of (family, n_rows, pivot_names).
MultiwayCorpus generate_multiway_corpus(const FamilyConfig& family, std::size_t n_rows,
                                        const std::vector<std::string>& pivot_names);
MultiwayCorpus generate_multiway_corpus(const LanguageFamily& family, std::size_t n_rows);

// Keeps gold src/tgt; the named pivot column is machine-translated from src.
MultiwayCorpus make_pivot_synthetic(const MultiwayCorpus& corpus, const LanguageSpec& source_spec,
                                    const LanguageSpec& pivot_spec, double epsilon, std::uint64_t seed);
// Keeps gold src/pivots; tgt is machine-translated from src.
MultiwayCorpus make_target_synthetic(const MultiwayCorpus& corpus, const LanguageSpec& source_spec,
                                     const LanguageSpec& target_spec, double epsilon, std::uint64_t seed);

// Deterministic held-out split; dev receives round(dev_fraction·n) rows (at
// least one when n ≥ 2).
struct CorpusSplit {
  MultiwayCorpus train;
  MultiwayCorpus dev;
};
CorpusSplit split_corpus(const MultiwayCorpus& corpus, double dev_fraction, std::uint64_t seed);

// Tab-separated: `src<TAB>pivot:NAME…<TAB>tgt` header, one row per line,
// tokens space-separated. Synthetic provenance is kept in a leading
// `#provenance=...` line.
void write_tsv(const MultiwayCorpus& corpus, const std::filesystem::path& path);
MultiwayCorpus read_tsv(const std::filesystem::path& path);

}  // namespace pivotmt::corpus
