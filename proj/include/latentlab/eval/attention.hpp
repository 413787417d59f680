#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "latentlab/latent/augment.hpp"
#include "latentlab/model/transformer.hpp"
#include "latentlab/tasks/tasks.hpp"

namespace latentlab {

// Head-averaged attention of one layer over a full sequence. Row i holds the
// weights of query position i over keys 0..i.
struct AttentionMap {
  std::size_t layer = 0;
  std::vector<std::string> labels;
  Tensor weights;  // [T×T]
};

// Verbal tokens by text; group-0 latents as "<LATENT1>", "<LATENT2>", ...;
// other groups as "<LATENT1:G2>".
std::vector<std::string> token_labels(const AugmentedSequence& seq, const Tokenizer& tok);

std::vector<AttentionMap> attention_maps(const Model& model, const AugmentedSequence& seq,
                                         const std::vector<std::size_t>& layers, const Tokenizer& tok);

// Header row: empty corner cell then every label; each row: label then
// weights printed with 9 significant digits, which round-trips float.
std::string attention_csv(const AttentionMap& map);
AttentionMap parse_attention_csv(const std::string& text, std::size_t layer = 0);
AttentionMap read_attention_csv(const std::filesystem::path& path, std::size_t layer = 0);

// Descriptive block-structure numbers for one map (reported, never asserted):
// mean weight response rows put on latent keys and on keys within the same
// period as themselves.
nlohmann::json block_summary(const AttentionMap& map, const AugmentedSequence& seq, std::size_t period);

// Decodes `sample` greedily under `policy` (at most max_new_tokens) and writes
// attn_layer<L>.csv per requested layer plus trace.json and summary.json.
// Empty `layers` means first and last.
std::vector<std::filesystem::path> dump_attention(const Model& model, const InsertionPolicy& policy,
                                                  const TaskSample& sample, std::vector<std::size_t> layers,
                                                  const Tokenizer& tok, std::size_t max_new_tokens,
                                                  const std::filesystem::path& dir);

}  // namespace latentlab
