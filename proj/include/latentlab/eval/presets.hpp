#pragma once

#include <string>
#include <vector>

#include "latentlab/latent/policy.hpp"
#include "latentlab/tasks/tasks.hpp"

namespace latentlab {

// Marker policy on ',' with m latents per run.
InsertionPolicy comma_policy(std::size_t m, const Tokenizer& tok);
// One group at the query start, another before every comma.
InsertionPolicy comma_fs_policy(std::size_t m, const Tokenizer& tok);

// Mean latent count per sample of `policy` over `samples`, rounded to the
// nearest integer (at least 1).
std::size_t matched_latent_count(const InsertionPolicy& policy, const std::vector<TaskSample>& samples);

// Freeze/Increase × Prepend/Append variants of `base`, in that order.
std::vector<InsertionPolicy> ablation_grid(const InsertionPolicy& base);

// Named experiment sets:
//   fig3    Generation: START(2), END(2), COMMA(2)
//   fig5    Summation: START(2), END(2), COMMA(2), FREQ(12,2)
//   fig6    Repetition: START(1), END(1), COMMA(1), COMMA(1) w/ FS
//   table1  the task's main policy against START/END with matched latent count
//   table3  ablation grid of COMMA(2) (Generation, Summation)
//   pause   END(16)+APPEND
// `train` is only read by table1. ConfigError if the preset does not cover
// the task.
std::vector<InsertionPolicy> preset_policies(const std::string& preset, Task task, const Tokenizer& tok,
                                             const std::vector<TaskSample>& train = {});
std::vector<std::string> preset_names();
// Main policy per task: COMMA(2) for Generation/Summation, COMMA(1) w/ FS for Repetition.
InsertionPolicy main_policy(Task task, const Tokenizer& tok);

}  // namespace latentlab
