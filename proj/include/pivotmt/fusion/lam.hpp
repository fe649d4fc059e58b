#pragma once

#include "json.hpp"
#include "pivotmt/numerics/tensor.hpp"
#include "pivotmt/transformer/model.hpp"

namespace pivotmt::fusion {

enum class LamMode { uniform, learned };

struct LamConfig {
  LamMode mode = LamMode::uniform;
  double alpha = 0.5;  // initial value in learned mode
  double beta = 0.5;
  double lambda_reg = 1.0;

  void validate() const;
};

void to_json(nlohmann::json& j, const LamConfig& c);
void from_json(const nlohmann::json& j, LamConfig& c);

// α, β as live scalars (trainable in learned mode).
struct LamWeights {
  LamMode mode = LamMode::uniform;
  num::Tensor alpha;
  num::Tensor beta;
  double lambda_reg = 1.0;
};

// (α·p_src + β·p_pivot) / (α + β).
tf::Distribution lam_combine(const tf::Distribution& p_src, const tf::Distribution& p_pivot, double alpha,
                             double beta);
// Row-wise over probability matrices; differentiable in all four inputs.
num::Tensor lam_combine(const num::Tensor& p_src, const num::Tensor& p_pivot, const num::Tensor& alpha,
                        const num::Tensor& beta);

// λ_reg · (α + β − 1)². Contract error in uniform mode.
num::Tensor lam_constraint_loss(const LamWeights& lam);

}  // namespace pivotmt::fusion
