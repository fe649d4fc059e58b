#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pivotmt/fusion/attention_module.hpp"
#include "pivotmt/fusion/lam.hpp"
#include "pivotmt/transformer/model.hpp"

namespace pivotmt::fusion {

// One training or inference example as encoded ids. src and pivot carry
// their own tag pair; tgt is [src_tag, tgt_tag, BOS, y…, EOS] and may be
// empty at inference.
struct EncodedExample {
  std::vector<int> src;
  std::vector<int> pivot;
  std::vector<int> tgt;
};

struct LossParts {
  num::Tensor total;
  double task = 0.0;
  double aux = 0.0;  // weighted alignment and constraint terms
};

// Common face of every trainable assembly.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string kind() const = 0;
  virtual bool uses_pivot() const = 0;
  virtual num::ParameterSet& parameters() = 0;
  virtual const num::ParameterSet& parameters() const = 0;
  virtual LossParts loss(std::span<const EncodedExample> batch, const tf::Context& ctx) const = 0;
  // Decoding stepper over the given inputs; targets are ignored.
  virtual tf::StepFn stepper(std::span<const EncodedExample> inputs) const = 0;
};

// 1E-1D: reads src only.
class SingleSourceModel : public Model {
 public:
  SingleSourceModel(const tf::ModelConfig& cfg, std::uint64_t seed) : model_(cfg, seed) {}

  std::string kind() const override { return "1E-1D"; }
  bool uses_pivot() const override { return false; }
  num::ParameterSet& parameters() override { return model_.parameters(); }
  const num::ParameterSet& parameters() const override { return model_.parameters(); }
  LossParts loss(std::span<const EncodedExample> batch, const tf::Context& ctx) const override;
  tf::StepFn stepper(std::span<const EncodedExample> inputs) const override;

  const tf::Seq2Seq& seq2seq() const { return model_; }

 private:
  tf::Seq2Seq model_;
};

// 2E-1D: source and pivot encoders merged by an attention module into one
// decoder memory. Parameters: src_enc.*, piv_enc.*, fusion.*, dec.*.
class TwoEncoderOneDecoder : public Model {
 public:
  // first_content_id bounds the ids eligible for token replacement.
  TwoEncoderOneDecoder(const tf::ModelConfig& cfg, const FusionConfig& fusion, std::uint64_t seed,
                       int first_content_id);

  std::string kind() const override { return "2E-1D"; }
  bool uses_pivot() const override { return true; }
  num::ParameterSet& parameters() override { return params_; }
  const num::ParameterSet& parameters() const override { return params_; }
  LossParts loss(std::span<const EncodedExample> batch, const tf::Context& ctx) const override;
  tf::StepFn stepper(std::span<const EncodedExample> inputs) const override;

  const FusionConfig& fusion() const { return fusion_; }
  // Fused memory for a batch; regularizers act only when ctx.training.
  tf::EncoderOutput memory(std::span<const EncodedExample> batch, const tf::Context& ctx) const;

 private:
  struct Streams {
    tf::EncoderOutput src, pivot;  // encoder outputs before late replacement
    tf::EncoderOutput fused;
  };
  Streams forward(std::span<const EncodedExample> batch, const tf::Context& ctx) const;
  tf::EncoderOutput encode_stream(const tf::Encoder& enc, const tf::IdMatrix& ids, const tf::Context& ctx) const;

  tf::ModelConfig cfg_;
  FusionConfig fusion_;
  int first_content_;
  num::ParameterSet params_;
  tf::Encoder src_enc_, piv_enc_;
  AttentionModule am_;
  num::Tensor ltr_mask_;
  tf::Decoder dec_;
};

// 2E-2D: a src→tgt and a pivot→tgt encoder-decoder whose per-step
// distributions are merged by the logits aggregation module. Trained on the
// NLL of the merged distribution. Parameters: src_path.*, piv_path.*,
// lam.alpha, lam.beta.
class TwoEncoderTwoDecoder : public Model {
 public:
  TwoEncoderTwoDecoder(const tf::ModelConfig& cfg, const LamConfig& lam, std::uint64_t seed);

  std::string kind() const override { return "2E-2D"; }
  bool uses_pivot() const override { return true; }
  num::ParameterSet& parameters() override { return params_; }
  const num::ParameterSet& parameters() const override { return params_; }
  LossParts loss(std::span<const EncodedExample> batch, const tf::Context& ctx) const override;
  tf::StepFn stepper(std::span<const EncodedExample> inputs) const override;

  const LamWeights& lam() const { return lam_; }
  double alpha() const { return lam_.alpha.item(); }
  double beta() const { return lam_.beta.item(); }

  // Per-path steppers, for inspection.
  tf::StepFn src_path_stepper(std::span<const EncodedExample> inputs) const;
  tf::StepFn pivot_path_stepper(std::span<const EncodedExample> inputs) const;

 private:
  tf::ModelConfig cfg_;
  num::ParameterSet params_;
  tf::Encoder src_enc_, piv_enc_;
  tf::Decoder src_dec_, piv_dec_;
  LamWeights lam_;
};

tf::IdMatrix src_matrix(std::span<const EncodedExample> batch);
tf::IdMatrix pivot_matrix(std::span<const EncodedExample> batch);
tf::TargetBatch target_batch(std::span<const EncodedExample> batch);

}  // namespace pivotmt::fusion
