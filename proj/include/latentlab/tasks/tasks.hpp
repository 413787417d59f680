#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "latentlab/tasks/tokenizer.hpp"

namespace latentlab {

enum class Task { kGeneration, kSummation, kRepetition };

const char* task_name(Task t);
Task task_from_name(const std::string& s);

struct TaskSample {
  Task task = Task::kGeneration;
  std::vector<std::int32_t> query;     // BOS first
  std::vector<std::int32_t> response;  // EOS-terminated except for Generation
  nlohmann::json meta;
};

using Rng = std::mt19937_64;

inline constexpr std::size_t kGenerationQueryEquations = 5;
inline constexpr std::size_t kGenerationCharsPerEquation = 9;  // "a1a2@b1b2=f1f2,"

// One chain step: (a1a2, b1b2) -> (|a1+b1| mod 9, |a2-b2| mod 9).
std::array<int, 2> generation_step(std::array<int, 2> a, std::array<int, 2> b);
// Equations of the chain started at (a, b), e.g. "44@47=83,".
std::vector<std::string> generation_chain(std::array<int, 2> a, std::array<int, 2> b, std::size_t count);
// Equations expected after the query of a Generation sample.
std::vector<std::string> generation_continuation(const TaskSample& sample, std::size_t count);

TaskSample gen_generation(Rng& rng, std::size_t n_response_eqs, const Tokenizer& tok);
TaskSample gen_summation(Rng& rng, std::size_t n_vars, const Tokenizer& tok);
// s1 drawn from [1,5] unless given.
TaskSample gen_repetition(Rng& rng, std::size_t s2, const Tokenizer& tok, std::optional<std::size_t> s1 = {});

// Leading run of generated equations that match the oracle chain.
std::size_t score_generation(const TaskSample& sample, std::span<const std::int32_t> generated,
                             const Tokenizer& tok);
// Exact match against the reference response, EOS included.
bool score_exact(const TaskSample& sample, std::span<const std::int32_t> generated);

nlohmann::json to_json(const TaskSample& s);
TaskSample sample_from_json(const nlohmann::json& j);

// Evaluation slice of a task's parameter space.
struct Bucket {
  std::string name;
  bool ood = false;
  std::size_t lo = 0, hi = 0;  // parameter range [lo, hi): n_vars, s2 or response equations
  std::size_t horizon = 0;     // Generation: equations scored
};

struct SplitSizes {
  std::size_t train = 4096;
  std::size_t val = 1024;
  std::size_t test = 1024;  // per bucket
};

std::vector<Bucket> default_buckets(Task task);
// Training-range sample with the parameter drawn from the task's ID range.
TaskSample gen_train_sample(Task task, Rng& rng, const Tokenizer& tok);
TaskSample gen_bucket_sample(Task task, const Bucket& bucket, Rng& rng, const Tokenizer& tok);

struct SplitFiles {
  std::filesystem::path train, val;
  std::vector<std::pair<Bucket, std::filesystem::path>> tests;
};

// Writes train.jsonl, val.jsonl, test_<bucket>.jsonl, tokenizer.json and
// manifest.json under `dir`. Byte-identical for equal arguments. With
// `train_range`, train and val draw their parameter from it instead of the
// task's in-distribution range.
SplitFiles make_split(Task task, const SplitSizes& sizes, std::uint64_t seed, const std::filesystem::path& dir,
                      const std::vector<Bucket>& buckets = {}, const std::optional<Bucket>& train_range = {});
SplitFiles split_files(const std::filesystem::path& dir);

std::vector<TaskSample> load_samples(const std::filesystem::path& path);

nlohmann::json to_json(const Bucket& b);
Bucket bucket_from_json(const nlohmann::json& j);

}  // namespace latentlab
