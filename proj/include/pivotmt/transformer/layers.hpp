#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pivotmt/numerics/ops.hpp"
#include "pivotmt/numerics/parameters.hpp"
#include "pivotmt/transformer/config.hpp"

namespace pivotmt::tf {

// Padded batch of id sequences, row-major [batch × length].
struct IdMatrix {
  std::size_t batch = 0;
  std::size_t length = 0;
  std::vector<int> ids;

  static IdMatrix from_rows(const std::vector<std::vector<int>>& rows, int pad = 0);
  int at(std::size_t b, std::size_t t) const { return ids[b * length + t]; }
  std::span<const int> row(std::size_t b) const { return {ids.data() + b * length, length}; }
  // 1 where the id is not `pad`.
  std::vector<std::uint8_t> mask(int pad = 0) const;
};

// Per-token contextual states of one encoder, flattened [batch·length × d].
struct EncoderOutput {
  num::Tensor states;
  std::vector<std::uint8_t> mask;  // 1 = real token
  std::size_t batch = 0;
  std::size_t length = 0;
  int language = -1;  // tag id of the encoded language, −1 for fused memories

  // Constant copy holding the listed batch rows, in order.
  EncoderOutput select(std::span<const std::size_t> rows) const;
};

// Training switch and randomness for one forward pass.
struct Context {
  bool training = false;
  num::Rng* rng = nullptr;
  double dropout = 0.0;

  double rate() const { return training ? dropout : 0.0; }
  num::Tensor drop(const num::Tensor& x) const;
};

num::Tensor sinusoidal_positions(std::size_t max_len, std::size_t d_model);

struct Linear {
  num::Tensor w;  // in × out
  num::Tensor b;  // out, undefined when bias-free

  Linear() = default;
  Linear(num::ParamInit init, std::size_t in, std::size_t out, bool bias = true, bool zero = false);
  num::Tensor operator()(const num::Tensor& x) const;
};

struct LayerNorm {
  num::Tensor gain;
  num::Tensor bias;

  LayerNorm() = default;
  LayerNorm(num::ParamInit init, std::size_t d);
  num::Tensor operator()(const num::Tensor& x) const { return num::layer_norm(x, gain, bias); }
};

// Projected multi-head attention. Query rows are [batch·query_len × d], key
// rows [batch·key_len × d].
struct MultiHeadAttention {
  Linear q, k, v, o;
  std::size_t heads = 1;

  MultiHeadAttention() = default;
  MultiHeadAttention(num::ParamInit init, std::size_t d, std::size_t heads);

  num::Tensor operator()(const num::Tensor& queries, const num::Tensor& keys, std::size_t batch, std::size_t query_len,
                         std::size_t key_len, std::span<const std::uint8_t> key_mask, bool causal, const Context& ctx,
                         std::vector<double>* weights_out = nullptr) const;
};

struct FeedForward {
  Linear in, out;

  FeedForward() = default;
  FeedForward(num::ParamInit init, std::size_t d, std::size_t hidden);
  num::Tensor operator()(const num::Tensor& x) const { return out(num::gelu(in(x))); }
};

// Pre-norm block: x += drop(MHA(LN x)); x += drop(FFN(LN x)).
struct EncoderLayer {
  LayerNorm ln_attn, ln_ffn;
  MultiHeadAttention attn;
  FeedForward ffn;

  EncoderLayer() = default;
  EncoderLayer(num::ParamInit init, const ModelConfig& cfg);
  num::Tensor operator()(const num::Tensor& x, std::size_t batch, std::size_t length,
                         std::span<const std::uint8_t> mask, const Context& ctx) const;
};

// Pre-norm causal self-attention, cross-attention, feed-forward.
struct DecoderLayer {
  LayerNorm ln_self, ln_cross, ln_ffn;
  MultiHeadAttention self_attn, cross_attn;
  FeedForward ffn;

  DecoderLayer() = default;
  DecoderLayer(num::ParamInit init, const ModelConfig& cfg);
  num::Tensor operator()(const num::Tensor& x, std::size_t batch, std::size_t length,
                         std::span<const std::uint8_t> self_mask, const EncoderOutput& memory,
                         const Context& ctx) const;
};

// Token embedding scaled by √d plus sinusoidal positions.
struct Embedding {
  num::Tensor table;  // vocab × d
  num::Tensor positions;
  std::size_t d_model = 0;

  Embedding() = default;
  Embedding(num::ParamInit init, const ModelConfig& cfg);
  // Throws LengthError past max_len.
  num::Tensor operator()(const IdMatrix& ids) const;
};

class Encoder {
 public:
  Encoder() = default;
  Encoder(num::ParamInit init, const ModelConfig& cfg);

  const Embedding& embedding() const { return embedding_; }
  num::Tensor embed(const IdMatrix& ids) const { return embedding_(ids); }
  // Layers and final norm over already embedded rows.
  num::Tensor run(const num::Tensor& embedded, std::size_t batch, std::size_t length,
                  std::span<const std::uint8_t> mask, const Context& ctx) const;
  // The language is read from the leading tag column.
  EncoderOutput encode(const IdMatrix& ids, const Context& ctx) const;

 private:
  ModelConfig cfg_;
  Embedding embedding_;
  std::vector<EncoderLayer> layers_;
  LayerNorm final_;
};

class Decoder {
 public:
  Decoder() = default;
  // zero_head: output projection starts at zero (uniform first predictions).
  Decoder(num::ParamInit init, const ModelConfig& cfg, bool zero_head = false);

  // Final-normed states [batch·length × d] for the prefix rows.
  num::Tensor hidden(const IdMatrix& prefix, const EncoderOutput& memory, const Context& ctx) const;
  num::Tensor project(const num::Tensor& hidden) const { return head_(hidden); }
  num::Tensor logits(const IdMatrix& prefix, const EncoderOutput& memory, const Context& ctx) const {
    return project(hidden(prefix, memory, ctx));
  }

 private:
  ModelConfig cfg_;
  Embedding embedding_;
  std::vector<DecoderLayer> layers_;
  LayerNorm final_;
  Linear head_;
};

}  // namespace pivotmt::tf
