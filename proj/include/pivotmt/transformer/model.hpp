#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pivotmt/numerics/parameters.hpp"
#include "pivotmt/transformer/layers.hpp"

namespace pivotmt::tf {

using Distribution = std::vector<double>;

// Label value excluded from the loss.
constexpr int kIgnoreLabel = -1;

// Teacher-forcing view of encoded targets [src_tag, tgt_tag, BOS, y…, EOS]:
// decoder input drops the last id, labels drop the first; the labels that
// would predict tgt_tag and BOS are ignored, as is padding.
struct TargetBatch {
  IdMatrix input;
  std::vector<int> labels;  // input.batch · input.length
};
TargetBatch make_target_batch(const std::vector<std::vector<int>>& encoded_targets);

// [src_tag, tgt_tag, BOS].
std::vector<int> decoder_start(int src_tag, int tgt_tag);

// Next-token distribution after each prefix. Prefixes may differ in length;
// memory holds one batch row per prefix.
std::vector<Distribution> next_distributions(const Decoder& decoder, const std::vector<std::vector<int>>& prefixes,
                                             const EncoderOutput& memory);
// Softmax of the logits row at (b, last[b]) for each batch row.
std::vector<Distribution> distributions_at(const num::Tensor& logits, std::size_t length,
                                           std::span<const std::size_t> last);

// Next-token distributions for prefixes belonging to the given input sentences.
using StepFn = std::function<std::vector<Distribution>(const std::vector<std::vector<int>>& prefixes,
                                                       const std::vector<std::size_t>& sentences)>;

// The single-source encoder-decoder (1E-1D).
class Seq2Seq {
 public:
  Seq2Seq(const ModelConfig& cfg, std::uint64_t seed, bool zero_head = false);
  Seq2Seq(const Seq2Seq&) = delete;
  Seq2Seq& operator=(const Seq2Seq&) = delete;

  const ModelConfig& config() const { return cfg_; }
  num::ParameterSet& parameters() { return params_; }
  const num::ParameterSet& parameters() const { return params_; }
  const Encoder& encoder() const { return encoder_; }
  const Decoder& decoder() const { return decoder_; }

  EncoderOutput encode(const IdMatrix& src, const Context& ctx) const { return encoder_.encode(src, ctx); }
  num::Tensor logits(const IdMatrix& prefix, const EncoderOutput& memory, const Context& ctx) const {
    return decoder_.logits(prefix, memory, ctx);
  }
  // Mean token cross-entropy.
  num::Tensor loss(const IdMatrix& src, const TargetBatch& tgt, const Context& ctx) const;

  // Stepper over a memory already computed for every input sentence.
  StepFn stepper(const EncoderOutput& memory) const;

 private:
  ModelConfig cfg_;
  num::ParameterSet params_;
  Encoder encoder_;
  Decoder decoder_;
};

}  // namespace pivotmt::tf
