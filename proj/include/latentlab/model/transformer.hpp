#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latentlab/latent/token.hpp"
#include "latentlab/model/config.hpp"
#include "latentlab/model/kv_cache.hpp"
#include "latentlab/numcore/autograd.hpp"

namespace latentlab {

struct LayerWeights {
  Var attn_norm;  // [d]
  Var wq, wk, wv, wo;  // [d×d], stored out×in
  Var mlp_norm;   // [d]
  Var w_in;       // [d_ff×d]
  Var w_out;      // [d×d_ff]
};

struct ModelParams {
  Var embedding;  // [V×d]
  std::vector<LayerWeights> layers;
  Var final_norm;  // [d]
  Var lm_head;     // [V×d]; same node as embedding when tied

  // Stable order, names as written to checkpoints. The tied head is listed once.
  std::vector<std::pair<std::string, Var>> named() const;
  void set_requires_grad(bool on);
};

// Trainable latent embeddings addressed by (group, slot); same width as the
// verbal embeddings.
struct LatentBank {
  Var table;  // [G×M×d]
  std::size_t groups = 0;
  std::size_t slots = 0;

  bool contains(std::int32_t group, std::int32_t slot) const;
  std::size_t row(std::int32_t group, std::int32_t slot) const { return static_cast<std::size_t>(group) * slots + slot; }
};

struct Model {
  ModelConfig config;
  ModelParams params;
  LatentBank bank;

  // Weights ~ N(0, 0.02) (residual projections scaled by 1/sqrt(2L)), norm
  // gains 1, latent bank zero.
  static Model init(const ModelConfig& config, std::uint64_t seed);
  Model clone() const;
};

struct AttentionRecord {
  std::size_t layer = 0;
  std::size_t head = 0;
  Tensor weights;  // [T×S] row-stochastic over the visible prefix
  Tensor scores;   // [T×S] scaled logits, only when requested
};

struct ForwardOptions {
  bool record_attention = false;
  bool record_scores = false;
  std::vector<std::size_t> layers;  // empty = every layer
};

struct ForwardOutput {
  Var logits;  // [T×V]
  std::vector<AttentionRecord> attention;
};

Var embed(const Model& model, std::span<const Token> tokens);

// Causal forward over `tokens` with explicit position ids. With a cache, the
// tokens continue the cached prefix and are appended to it.
ForwardOutput forward(const Model& model, std::span<const Token> tokens, std::span<const std::int64_t> position_ids,
                      KvCache* cache = nullptr, const ForwardOptions& options = {});

// Same network applied to caller-provided input rows (no cache).
ForwardOutput forward_embedded(const Model& model, const Var& inputs, std::span<const std::int64_t> position_ids,
                               const ForwardOptions& options = {});

KvCache make_cache(const Model& model);

}  // namespace latentlab
