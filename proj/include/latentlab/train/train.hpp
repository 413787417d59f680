#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "latentlab/latent/augment.hpp"
#include "latentlab/model/transformer.hpp"
#include "latentlab/numcore/optim.hpp"

namespace latentlab {

enum class LatentInit { kMeanNoise, kGaussian };

struct TrainConfig {
  int phase = 1;
  std::size_t epochs = 10;
  std::size_t batch_size = 16;
  double lr = 5e-3;  // phase 2 default is 5e-2, see defaults_for_phase
  double min_lr = 5e-5;
  double warmup_ratio = 0.01;
  AdamWHyper hyper;
  double clip_norm = 1.0;
  std::size_t patience = 3;
  std::uint64_t seed = 0;
  std::size_t max_steps = 0;          // 0: no cap
  std::size_t max_train_samples = 0;  // 0: whole file
  std::size_t max_val_samples = 0;
  std::size_t log_every = 10;
  LatentInit latent_init = LatentInit::kMeanNoise;
  float init_noise = 0.02f;
  std::optional<InsertionPolicy> policy;  // phase 2 only
  std::filesystem::path data_dir;
  std::filesystem::path base_checkpoint;  // phase 2 only
  std::filesystem::path out_dir;

  static TrainConfig defaults_for_phase(int phase);
  // ConfigError: phase 2 without policy or base checkpoint, phase 1 with a policy.
  void validate() const;
};

nlohmann::json to_json(const TrainConfig& c);
TrainConfig train_config_from_json(const nlohmann::json& j,
                                   const std::function<std::int32_t(const std::string&)>& resolve = {});

struct EpochRecord {
  std::size_t epoch = 0;
  double train_loss = 0;
  double val_loss = 0;
};

struct TrainResult {
  std::size_t steps = 0;
  double final_loss = 0;  // last step's batch loss
  double best_val_loss = 0;
  std::vector<EpochRecord> epochs;
  bool stopped_early = false;
};

using TrainLogger = std::function<void(const nlohmann::json&)>;

// Mean NLL over the mask of a set of sequences (no gradient).
double dataset_loss(const Model& model, const std::vector<AugmentedSequence>& data);

// Sum-reduced batch loss divided by the batch's scored-target count; sample
// contributions are added in ascending index order, so the permutation of
// `batch` does not matter. Gradients accumulate into every trainable leaf.
double batch_loss_and_grad(const Model& model, const std::vector<AugmentedSequence>& data,
                           std::vector<std::size_t> batch, bool with_grad = true);

// (group, slot) rows a policy can ever place.
std::set<std::pair<std::int32_t, std::int32_t>> policy_rows(const InsertionPolicy& policy);

// Resizes the bank to fit `policy` (keeping it if already large enough) and
// fills it: mean verbal embedding + N(0, noise) or pure N(0, noise).
void latent_init(Model& model, LatentInit mode, float noise, std::uint64_t seed);
void fit_bank(Model& model, const InsertionPolicy& policy);

// Phase 1: every model parameter trains on unaugmented sequences.
TrainResult train_full(Model& model, const std::vector<AugmentedSequence>& train,
                       const std::vector<AugmentedSequence>& val, const TrainConfig& cfg, const TrainLogger& log = {});

// Phase 2: model parameters frozen (bitwise, checked); only the bank rows in
// `rows` are updated.
TrainResult train_latents(Model& model, const std::vector<AugmentedSequence>& train,
                          const std::vector<AugmentedSequence>& val, const TrainConfig& cfg,
                          const std::set<std::pair<std::int32_t, std::int32_t>>& rows, const TrainLogger& log = {});

// File-level drivers: read data_dir, write checkpoint.bin and train_log.jsonl
// under out_dir; return the checkpoint path.
std::filesystem::path pretrain(const TrainConfig& cfg, const ModelConfig& model_cfg);
std::filesystem::path finetune_latents(const TrainConfig& cfg);

std::vector<AugmentedSequence> load_plain(const std::filesystem::path& path, std::size_t limit = 0);
// Writes the augmented form of a task-sample file as JSONL.
void augment_file(const std::filesystem::path& plain, const InsertionPolicy& policy,
                  const std::filesystem::path& out, std::size_t limit = 0);
// Reads an augmented JSONL file; DataError naming the line if any sample
// fails verification under `policy`.
std::vector<AugmentedSequence> read_augmented(const std::filesystem::path& path, const InsertionPolicy& policy);

}  // namespace latentlab
