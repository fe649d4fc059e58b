#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "pivotmt/fusion/assembly.hpp"
#include "pivotmt/transformer/decoding.hpp"

namespace pivotmt::multipivot {

struct PivotHypothesis {
  std::string pivot_name;
  std::vector<int> pivot_ids;  // content ids, no tags or EOS
  double scorer_logprob = 0.0;
};

// A frozen src→pivot model plus the tag pair it was trained with.
struct Scorer {
  const fusion::Model* model = nullptr;
  int src_tag = -1;
  int pivot_tag = -1;
};

// Σ log P(token | prefix) over content and the closing EOS, teacher forced
// from `start`. Trailing PAD ids in `content` are ignored.
double score_sequence(const tf::StepFn& step, std::size_t sentence, const std::vector<int>& start,
                      const std::vector<int>& content);

// src_ids is the tagged encoding [src_tag, pivot_tag, BOS, …, EOS]; a tag
// pair other than the scorer's is a direction mismatch.
double score_pivot(const std::vector<int>& src_ids, const std::vector<int>& pivot_ids, const Scorer& scorer);

// Softmax over scores, each divided by (length + 1) when length_normalize.
std::vector<double> pivot_weights(const std::vector<PivotHypothesis>& hyps, bool length_normalize);

// Σ_i w_i · dist_i.
tf::Distribution msmp_step(const std::vector<tf::Distribution>& path_distributions, const std::vector<double>& weights);

struct MsmpConfig {
  bool length_normalize = true;
  std::size_t max_steps = 40;
};

void to_json(nlohmann::json& j, const MsmpConfig& c);
void from_json(const nlohmann::json& j, MsmpConfig& c);

struct MsmpPivot {
  std::string name;
  Scorer scorer;
  const fusion::Model* path = nullptr;  // 2E-1D over (src, this pivot)
};

struct MsmpResult {
  std::vector<std::vector<int>> outputs;                // target content ids per sentence
  std::vector<std::vector<PivotHypothesis>> hypotheses;  // [sentence][pivot]
  std::vector<std::vector<double>> weights;              // [sentence][pivot]
};

// Per sentence: greedy pivot hypotheses from every scorer, their scores, one
// weight vector, then greedy target decoding through the weighted mixture of
// the per-pivot path distributions.
MsmpResult msmp_decode(const std::vector<std::vector<int>>& src_content, int src_tag, int tgt_tag,
                       const std::vector<MsmpPivot>& pivots, const MsmpConfig& cfg);

// Source → pivot, then the pivot hypothesis re-tagged as the source side of
// pivot → target. The source sentence is not seen by the second stage.
std::vector<std::vector<int>> cascade_translate(const std::vector<std::vector<int>>& src_ids,
                                                const fusion::Model& src_to_pivot, const fusion::Model& pivot_to_tgt,
                                                int pivot_tag, int tgt_tag, std::size_t max_steps,
                                                std::vector<std::vector<int>>* pivot_out = nullptr);

// Greedy (beam 1) or beam decoding of every input with start [src[0], src[1], BOS].
std::vector<std::vector<int>> translate(const fusion::Model& model, const std::vector<fusion::EncodedExample>& inputs,
                                        std::size_t max_steps, std::size_t beam = 1, std::size_t chunk = 128);

}  // namespace pivotmt::multipivot
