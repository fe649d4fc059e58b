#pragma once

#include <cstddef>

#include "json.hpp"

namespace pivotmt::tf {

struct ModelConfig {
  std::size_t d_model = 64;
  std::size_t n_heads = 4;
  std::size_t n_enc_layers = 2;
  std::size_t n_dec_layers = 2;
  std::size_t d_ffn = 256;
  std::size_t max_len = 64;
  std::size_t vocab_size = 0;
  double dropout_rate = 0.1;

  // Throws ConfigError on a violated invariant.
  void validate() const;
};

void to_json(nlohmann::json& j, const ModelConfig& c);
void from_json(const nlohmann::json& j, ModelConfig& c);

}  // namespace pivotmt::tf
