#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pivotmt/numerics/rng.hpp"
#include "pivotmt/numerics/tensor.hpp"

namespace pivotmt::num {

// Linear algebra (rank-2 operands).
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);

// Elementwise, equal shapes.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor square(const Tensor& x);
Tensor log(const Tensor& x);
Tensor scale(const Tensor& x, double factor);
Tensor add_scalar(const Tensor& x, double offset);

// x[m×n] + bias[n] broadcast over rows.
Tensor add_bias(const Tensor& x, const Tensor& bias);
// x * s and x / s for a one-element tensor s.
Tensor mul_scalar(const Tensor& x, const Tensor& s);
Tensor div_scalar(const Tensor& x, const Tensor& s);

// Reductions to a rank-0 tensor.
Tensor sum(const Tensor& x);
Tensor mean(const Tensor& x);

// Max-subtracted softmax along `axis` (negative counts from the back).
Tensor softmax(const Tensor& x, int axis = -1);
Tensor log_softmax(const Tensor& x);

Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias, double eps = 1e-5);

// tanh approximation: 0.5x(1 + tanh(√(2/π)(x + 0.044715x³))).
Tensor gelu(const Tensor& x);

// Mean NLL over rows whose target differs from ignore_id.
Tensor cross_entropy(const Tensor& logits, std::span<const int> targets, int ignore_id);
// Same objective when the rows already hold probabilities.
Tensor nll_from_probs(const Tensor& probs, std::span<const int> targets, int ignore_id);

// Sequence-axis concatenation of two batched [batch·m × d] and [batch·n × d]
// tensors into [batch·(m+n) × d]; per batch element rows of a precede rows of b.
Tensor concat_seq(const Tensor& a, const Tensor& b, std::size_t batch = 1);
// Feature-axis concatenation [m×p] ++ [m×q] -> [m×(p+q)].
Tensor concat_features(const Tensor& a, const Tensor& b);

// Rows of a rank-2 table by index; backward scatter-adds.
Tensor gather_rows(const Tensor& table, std::span<const int> indices);
// Rows flagged in `rows` are overwritten by `replacement` (length d).
Tensor replace_rows(const Tensor& x, std::span<const std::uint8_t> rows, const Tensor& replacement);

// u·v / (max(‖u‖,eps)·max(‖v‖,eps)), rank-0 result.
Tensor cosine_similarity(const Tensor& u, const Tensor& v, double eps = 1e-8);
// Each row divided by max(‖row‖, eps).
Tensor l2_normalize_rows(const Tensor& x, double eps = 1e-8);

// x + N(0, sigma²); the noise is a constant for backward.
Tensor add_gaussian_noise(const Tensor& x, double sigma, Rng& rng);
Tensor add_gaussian_noise(const Tensor& x, double sigma, std::uint64_t seed);
// Noise restricted to the flagged rows of a rank-2 tensor.
Tensor add_gaussian_noise_rows(const Tensor& x, std::span<const std::uint8_t> rows, double sigma, Rng& rng);

// Inverted dropout; identity when rate == 0.
Tensor dropout(const Tensor& x, double rate, Rng& rng);

struct AttentionSpec {
  std::size_t batch = 1;
  std::size_t query_len = 0;
  std::size_t key_len = 0;
  std::size_t heads = 1;
  bool causal = false;
  // batch·key_len flags, nonzero = attendable. Empty means all keys valid.
  std::span<const std::uint8_t> key_mask;
  double dropout = 0.0;
  Rng* rng = nullptr;
  // When set, receives the post-softmax weights laid out [batch][head][q][k].
  std::vector<double>* weights_out = nullptr;
};

// Scaled dot-product attention per head over already-projected q [batch·Tq × d],
// k, v [batch·Tk × d]. Returns the concatenated head outputs [batch·Tq × d].
Tensor attention(const Tensor& q, const Tensor& k, const Tensor& v, const AttentionSpec& spec);

}  // namespace pivotmt::num
