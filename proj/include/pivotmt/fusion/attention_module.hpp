#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pivotmt/transformer/layers.hpp"

namespace pivotmt::fusion {

enum class AmVariant { single_source = 1, concat = 2, token_cross_only = 3, token_cross_concat = 4, all2all = 5 };

enum class RegularizerKind { etr, ltr_mask, ltr_gauss };

struct Regularizer {
  RegularizerKind kind = RegularizerKind::etr;
  double p = 20.0;     // percent of eligible positions
  double sigma = 1.0;  // ltr_gauss only
};

// Weights of the alignment losses; zero disables a loss.
struct AuxWeights {
  double cosine = 0.0;            // AM 6
  double contrastive = 0.0;       // AM 7
  double full_contrastive = 0.0;  // AM 8

  bool any() const { return cosine > 0.0 || contrastive > 0.0 || full_contrastive > 0.0; }
};

struct FusionConfig {
  AmVariant variant = AmVariant::concat;
  AuxWeights aux;
  std::optional<Regularizer> regularizer;
  double temperature = 0.1;

  void validate() const;
};

void to_json(nlohmann::json& j, const FusionConfig& c);
void from_json(const nlohmann::json& j, FusionConfig& c);

std::string variant_name(AmVariant v);
AmVariant variant_from_string(const std::string& s);

// Learned pieces of the attention module for one variant.
class AttentionModule {
 public:
  AttentionModule() = default;
  AttentionModule(num::ParamInit init, AmVariant variant, const tf::ModelConfig& cfg);

  AmVariant variant() const { return variant_; }
  // Fused memory for the decoder; both inputs must share batch and width.
  tf::EncoderOutput fuse(const tf::EncoderOutput& src, const tf::EncoderOutput& pivot, const tf::Context& ctx) const;

 private:
  AmVariant variant_ = AmVariant::concat;
  tf::MultiHeadAttention src_to_pivot_;  // queries from src
  tf::MultiHeadAttention pivot_to_src_;  // queries from pivot
  tf::Linear down_;                      // 2d -> d for variant 4
  tf::LayerNorm ln_;                     // variant 5
  tf::MultiHeadAttention self_;          // variant 5
};

std::vector<std::uint8_t> concat_masks(std::span<const std::uint8_t> a, std::size_t m, std::span<const std::uint8_t> b,
                                       std::size_t n, std::size_t batch);

// Masked mean over the real positions of each batch row: [batch × d].
num::Tensor sentence_repr(const tf::EncoderOutput& enc);

// Mean over rows of 1 − cos(src_i, pivot_i).
num::Tensor cosine_align_loss(const num::Tensor& src_repr, const num::Tensor& pivot_repr);
// Symmetric InfoNCE over cosine similarities / τ with the diagonal as match.
num::Tensor contrastive_loss(const num::Tensor& src_reprs, const num::Tensor& pivot_reprs, double temperature);
// Sum of the three pairwise contrastive losses.
num::Tensor full_contrastive_loss(const num::Tensor& src_reprs, const num::Tensor& pivot_reprs,
                                  const num::Tensor& tgt_reprs, double temperature);

// Exactly round(p·n/100) of each row's eligible positions, drawn uniformly.
// eligible is [batch × length].
std::vector<std::uint8_t> choose_positions(std::span<const std::uint8_t> eligible, std::size_t batch,
                                           std::size_t length, double p, num::Rng& rng);
// Positions holding content tokens (not PAD, tags, BOS, EOS).
std::vector<std::uint8_t> content_positions(const tf::IdMatrix& ids, int first_content_id);

// Replaces the chosen rows of embedded inputs with mask_embedding.
num::Tensor early_token_replace(const num::Tensor& embeddings, std::span<const std::uint8_t> eligible,
                                std::size_t batch, std::size_t length, double p, const num::Tensor& mask_embedding,
                                num::Rng& rng, std::vector<std::uint8_t>* chosen = nullptr);

enum class LtrMode { mask, gauss };

// Corrupts chosen encoder states in place (sequence length unchanged).
tf::EncoderOutput late_token_replace(const tf::EncoderOutput& states, std::span<const std::uint8_t> eligible, double p,
                                     LtrMode mode, const num::Tensor& mask_embedding, double sigma, num::Rng& rng,
                                     std::vector<std::uint8_t>* chosen = nullptr);

}  // namespace pivotmt::fusion
