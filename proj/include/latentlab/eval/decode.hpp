#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "latentlab/latent/augment.hpp"
#include "latentlab/model/kv_cache.hpp"
#include "latentlab/model/transformer.hpp"
#include "latentlab/tasks/tokenizer.hpp"

namespace latentlab {

// One greedy generation. Owns its cache; the model is only read.
struct DecodeSession {
  const Model* model = nullptr;
  InsertionPolicy policy;
  std::vector<std::int32_t> query;  // BOS first
  std::size_t max_new_tokens = 0;   // verbal tokens only
  std::int32_t eos = Tokenizer::kEos;
  bool keep_logits = false;

  KvCache cache;
  std::vector<std::int32_t> emitted;
  AugmentedSequence trace;  // everything fed, latents included
  // predictors[i]: trace row whose logits chose emitted[i].
  std::vector<std::size_t> predictors;
  std::vector<std::vector<float>> logits;  // per emitted token, when keep_logits
  std::size_t forwarded = 0;  // tokens run through the model, re-feeds included
  std::size_t rollbacks = 0;

  DecodeSession(const Model& model, InsertionPolicy policy, std::vector<std::int32_t> query,
                std::size_t max_new_tokens);

  std::size_t latent_count() const;
  std::size_t latent_count(Region region) const;
};

// Called after each emitted token; returning true ends decoding.
using StopFn = std::function<bool(std::span<const std::int32_t> emitted)>;

// Greedy argmax decoding (ties to the lowest id) with online latent
// insertion. A marker that fires under Prepend is generated, rolled back,
// and re-fed behind its latent run. Every-k runs under Prepend are known in
// advance and go in before the prediction they precede. Returns the emitted
// verbal tokens; StateError if the finished trace fails verification.
std::vector<std::int32_t> greedy_decode(DecodeSession& session, const StopFn& stop = {});

// Cache-free check: one monolithic forward over the trace; the argmax at each
// predictor row must reproduce the emitted token. Returns the index of the
// first disagreement.
std::optional<std::size_t> replay_mismatch(const DecodeSession& session);

std::int32_t argmax_lowest(std::span<const float> row);

}  // namespace latentlab
