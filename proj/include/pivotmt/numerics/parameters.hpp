#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pivotmt/numerics/rng.hpp"
#include "pivotmt/numerics/tensor.hpp"

namespace pivotmt::num {

// Ordered, uniquely named collection of trainable leaves. Order is the
// registration order and fixes the checkpoint payload layout.
class ParameterSet {
 public:
  using Entry = std::pair<std::string, Tensor>;

  Tensor add(const std::string& name, Tensor tensor);
  bool contains(const std::string& name) const;
  const Tensor& get(const std::string& name) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t element_count() const;
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  void zero_grad();
  // Element-wise value copy from another set with identical names and shapes.
  void copy_values_from(const ParameterSet& other);
  std::vector<std::vector<double>> snapshot() const;
  void restore(const std::vector<std::vector<double>>& values);

 private:
  std::vector<Entry> entries_;
};

// Registers parameters with the pinned initialisation: uniform(−0.1, 0.1)
// for weights and embeddings, zeros for biases, ones for layer-norm gains.
class ParamInit {
 public:
  ParamInit(ParameterSet& set, Rng& rng, std::string prefix = {})
      : set_(&set), rng_(&rng), prefix_(std::move(prefix)) {}

  ParamInit scoped(const std::string& sub) const;
  Tensor uniform(const std::string& name, Shape shape, double range = 0.1);
  Tensor zeros(const std::string& name, Shape shape);
  Tensor ones(const std::string& name, Shape shape);
  Tensor constant(const std::string& name, Shape shape, double value);

 private:
  std::string full(const std::string& name) const { return prefix_.empty() ? name : prefix_ + "." + name; }
  ParameterSet* set_;
  Rng* rng_;
  std::string prefix_;
};

struct CheckpointData {
  std::uint64_t seed = 0;
  std::string config_hash;
  nlohmann::json meta;
  std::vector<std::pair<std::string, Tensor>> tensors;

  const Tensor* find(const std::string& name) const;
};

// Container: 8-byte magic, u64 little-endian header length, JSON header
// {format, seed, config_hash, meta, tensors:[{name, shape}]}, then each
// tensor's float64 payload little-endian in header order.
void write_checkpoint(const std::filesystem::path& path, const ParameterSet& params, std::uint64_t seed,
                      const std::string& config_hash, const nlohmann::json& meta);
CheckpointData read_checkpoint(const std::filesystem::path& path);
// Copies every tensor of `params` from the checkpoint; missing names or shape
// differences are data errors.
void load_parameters(ParameterSet& params, const CheckpointData& data);

}  // namespace pivotmt::num
