#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "latentlab/latent/policy.hpp"
#include "latentlab/model/transformer.hpp"
#include "latentlab/tasks/tasks.hpp"

namespace latentlab {

struct BucketResult {
  Bucket bucket;
  std::size_t budget = 0;     // max new verbal tokens
  std::size_t samples = 0;    // per seed
  std::vector<double> per_seed;
  double mean = 0, stddev = 0;  // stddev over seeds, n-1 denominator (0 for one seed)
};

struct EvalReport {
  Task task = Task::kGeneration;
  std::string policy;  // label
  nlohmann::json policy_config;
  std::vector<std::uint64_t> seeds;
  std::string metric;  // "correct_equations" or "accuracy"
  std::vector<BucketResult> buckets;
  std::size_t trainable_params = 0;
  double latents_per_query = 0;       // mean latents placed in the query
  double latents_per_100_tokens = 0;  // response-side latents per 100 emitted verbal tokens
};

nlohmann::json to_json(const EvalReport& r);
EvalReport eval_report_from_json(const nlohmann::json& j);
// Flat rows: task,policy,bucket,ood,seed,metric.
std::string to_csv(const EvalReport& r);

// Generation: chars per equation × horizon + 10% slack. Summation 10,
// Repetition 200.
std::size_t decode_budget(Task task, const Bucket& bucket);

// Generation: leading correct equations, capped at the bucket horizon.
// Otherwise 1 for an exact match, else 0.
double score_sample(const TaskSample& sample, const Bucket& bucket, std::span<const std::int32_t> emitted,
                    const Tokenizer& tok);

// True once `emitted` can no longer improve any score for `sample`; decoding
// may stop there without changing the metric.
bool settled(const TaskSample& sample, std::span<const std::int32_t> emitted, const Tokenizer& tok);

struct EvalOptions {
  std::size_t max_samples = 0;  // per bucket file; 0 = all
  std::size_t threads = 0;      // 0 = LATENT_THREADS, else hardware concurrency
  bool stop_when_settled = true;
};

std::size_t worker_count(std::size_t requested);

struct DecodeOutcome {
  std::vector<std::int32_t> emitted;
  std::size_t query_latents = 0;
  std::size_t response_latents = 0;
};
// Produces a response for one sample under a verbal-token budget.
using SampleDecoder = std::function<DecodeOutcome(const TaskSample& sample, std::size_t budget)>;

struct BucketData {
  Bucket bucket;
  std::vector<TaskSample> samples;
};

// Buckets that share a sample list are decoded once at their largest budget
// and scored per bucket. One decoder per seed; aggregation runs in sample
// order, so the report does not depend on the thread count.
EvalReport evaluate_with(Task task, const std::vector<std::pair<std::uint64_t, SampleDecoder>>& decoders,
                         const std::vector<BucketData>& buckets, const Tokenizer& tok, const EvalOptions& options);

SampleDecoder greedy_decoder(const Model& model, const InsertionPolicy& policy, const Tokenizer& tok,
                             bool stop_when_settled);

struct SeededModel {
  std::uint64_t seed = 0;
  const Model* model = nullptr;
};

EvalReport evaluate(Task task, const std::vector<SeededModel>& models, const InsertionPolicy& policy,
                    const std::vector<BucketData>& buckets, const Tokenizer& tok, const EvalOptions& options = {});

// Reads the test files of `data_dir` (all default buckets, or those named)
// and one checkpoint per seed.
std::vector<BucketData> load_buckets(const std::filesystem::path& data_dir, const std::vector<std::string>& names = {},
                                     std::size_t max_samples = 0);
EvalReport evaluate_checkpoints(Task task, const std::vector<std::pair<std::uint64_t, std::filesystem::path>>& checkpoints,
                                const InsertionPolicy& policy, const std::filesystem::path& data_dir,
                                const std::vector<std::string>& bucket_names = {}, const EvalOptions& options = {});

void write_report(const EvalReport& report, const std::filesystem::path& dir);

}  // namespace latentlab
