#pragma once

#include <cstddef>
#include <vector>

#include "pivotmt/transformer/model.hpp"

namespace pivotmt::tf {

// Argmax per step, lowest id on ties, until EOS or max_steps. Returns the
// generated ids without the start prefix and without EOS.
std::vector<std::vector<int>> greedy_decode(const StepFn& step, const std::vector<std::vector<int>>& starts,
                                            std::size_t max_steps);

// Keeps the beam_size best hypotheses by (Σ log P) / length, length counting
// EOS. beam_size 1 reproduces greedy_decode.
std::vector<int> beam_decode(const StepFn& step, const std::vector<int>& start, std::size_t sentence,
                             std::size_t beam_size, std::size_t max_steps);

}  // namespace pivotmt::tf
