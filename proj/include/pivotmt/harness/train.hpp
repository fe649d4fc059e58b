#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pivotmt/fusion/assembly.hpp"

namespace pivotmt::harness {

struct TrainConfig {
  double peak_lr = 3e-4;
  std::size_t warmup_steps = 200;
  std::size_t max_steps = 3000;
  std::size_t batch_size = 32;
  std::uint64_t seed = 1;
  std::size_t eval_every = 250;
  double clip_norm = 0.0;  // global gradient norm clip; 0 disables
  std::string checkpoint_dir;

  void validate() const;
};

void to_json(nlohmann::json& j, const TrainConfig& c);
void from_json(const nlohmann::json& j, TrainConfig& c);

// peak_lr · min(step / warmup, sqrt(warmup / step)).
double lr_at(std::size_t step, const TrainConfig& cfg);

class Adam {
 public:
  explicit Adam(num::ParameterSet& params, double beta1 = 0.9, double beta2 = 0.98, double eps = 1e-9);

  // One update with the gradients currently held by the parameters.
  // Parameters without a gradient are left untouched.
  void step(double lr);
  std::size_t steps() const { return t_; }

 private:
  num::ParameterSet* params_;
  double beta1_, beta2_, eps_;
  std::size_t t_ = 0;
  std::vector<std::vector<double>> m_, v_;
};

struct CurvePoint {
  std::size_t step = 0;
  double loss = 0.0;  // total objective on the step's batch
  double task = 0.0;
  double lr = 0.0;
  std::optional<double> dev_bleu;
};

void to_json(nlohmann::json& j, const CurvePoint& p);

struct TrainResult {
  std::vector<CurvePoint> curve;
  std::size_t steps = 0;
  std::size_t best_step = 0;
  double best_dev_bleu = -1.0;
};

// Scores the model on held-out data; higher is better.
using DevEvaluator = std::function<double(const fusion::Model&)>;

// Adam on the model's full objective. Batches come from a per-epoch shuffle
// fixed by cfg.seed. Curve points are kept at step 1, every eval_every steps
// and the last step. With an evaluator the best-scoring parameters are
// restored at the end and, if checkpoint_dir is set, written to
// checkpoint_dir/best.bin.
TrainResult train(fusion::Model& model, std::span<const fusion::EncodedExample> data, const TrainConfig& cfg,
                  const DevEvaluator& dev = {}, const std::string& config_hash = {});

}  // namespace pivotmt::harness
