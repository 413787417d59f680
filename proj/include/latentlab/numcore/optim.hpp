#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latentlab/numcore/tensor.hpp"

namespace latentlab {

struct AdamWHyper {
  double weight_decay = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct OptimizerState {
  AdamWHyper hyper;
  std::vector<Tensor> first_moment;
  std::vector<Tensor> second_moment;
  std::int64_t step = 0;
};

// Decoupled-weight-decay Adam update. Moment buffers are created on the first
// call. A non-finite gradient rejects the whole step (NumericError) before any
// parameter or moment is touched.
void adamw_step(std::span<Tensor* const> params, std::span<const Tensor* const> grads, OptimizerState& state,
                double lr);

// Scales grads in place so their joint L2 norm is at most max_norm; returns
// the norm before clipping.
double clip_global_norm(std::span<Tensor* const> grads, double max_norm);

struct LrSchedule {
  double base_lr = 5e-2;
  double min_lr = 5e-5;
  double warmup_ratio = 0.01;
  std::int64_t total_steps = 1;

  std::int64_t warmup_steps() const;
};

// Linear warmup from 0 to base, then cosine decay from base to min. Steps
// past the end return min.
double lr_at(std::int64_t step, const LrSchedule& sched);

}  // namespace latentlab
