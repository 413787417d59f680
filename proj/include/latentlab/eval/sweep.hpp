#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "latentlab/eval/evaluate.hpp"
#include "latentlab/train/train.hpp"

namespace latentlab {

// Phase-2 training plus evaluation of several policies over several seeds,
// all on one frozen base checkpoint.
struct SweepConfig {
  Task task = Task::kGeneration;
  std::filesystem::path data_dir;
  std::filesystem::path base_checkpoint;
  std::filesystem::path out_dir;
  std::vector<InsertionPolicy> policies;
  std::vector<std::uint64_t> seeds{0, 1, 2};
  TrainConfig train = TrainConfig::defaults_for_phase(2);  // policy, seed and paths are set per run
  std::vector<std::string> buckets;                         // empty = all
  EvalOptions eval;
  bool force = false;  // retrain and re-evaluate even when hashes match
};

nlohmann::json to_json(const SweepConfig& c);
// Inverse of to_json; the train section carries no paths or policy.
SweepConfig sweep_config_from_json(const nlohmann::json& j);

struct SweepCell {
  InsertionPolicy policy;
  std::filesystem::path dir;
  std::string hash;  // over the training runs and the evaluation settings
  bool cached = false;
  EvalReport report;
};

using ProgressFn = std::function<void(const std::string&)>;

// Layout: <out>/<policy slug>/seed<k>/{checkpoint.bin,train_log.jsonl,run.json}
// and <out>/<policy slug>/{report.json,report.csv,eval.json}; <out>/summary.json
// lists every cell. A run or report whose stored hash matches is reused.
std::vector<SweepCell> run_sweep(const SweepConfig& cfg, const ProgressFn& progress = {});

// Cells of a finished sweep without training or evaluating anything. StateError
// when a run or report is missing or its hash no longer matches the inputs.
std::vector<SweepCell> load_sweep(const SweepConfig& cfg);

std::string policy_slug(const InsertionPolicy& p);

}  // namespace latentlab
