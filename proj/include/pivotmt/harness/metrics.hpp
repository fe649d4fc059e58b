#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "pivotmt/corpus/corpus.hpp"

namespace pivotmt::harness {

struct BleuStats {
  double score = 0.0;  // [0, 100]
  std::array<std::size_t, 4> matches{};
  std::array<std::size_t, 4> totals{};
  std::array<double, 4> precisions{};  // percent
  double brevity_penalty = 0.0;
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;
};

// Corpus BLEU over single references: clipped n-gram counts for n = 1..4
// summed over sentences, brevity penalty exp(1 − r/c) when c < r, and zero
// match counts floored at 1e-9 before the geometric mean.
BleuStats corpus_bleu_stats(const std::vector<corpus::Sentence>& hyps, const std::vector<corpus::Sentence>& refs);
double corpus_bleu(const std::vector<corpus::Sentence>& hyps, const std::vector<corpus::Sentence>& refs);

// Σ positional matches / Σ max(|hyp|, |ref|), in [0, 1]; 1 when every pair
// is empty.
double token_accuracy(const std::vector<corpus::Sentence>& hyps, const std::vector<corpus::Sentence>& refs);

// {bleu, token_accuracy, n}
nlohmann::json metrics_json(const std::vector<corpus::Sentence>& hyps, const std::vector<corpus::Sentence>& refs);

}  // namespace pivotmt::harness
