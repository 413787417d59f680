#pragma once

#include <cstddef>

#include "json.hpp"

namespace latentlab {

struct ModelConfig {
  std::size_t n_layers = 4;
  std::size_t n_heads = 4;
  std::size_t d_model = 128;
  std::size_t d_ff = 512;
  std::size_t vocab_size = 0;  // verbal entries incl. BOS/EOS; latent bank is separate
  std::size_t max_position = 4096;
  double rope_base = 10000.0;
  bool tie_embeddings = false;
  std::size_t latent_groups = 0;
  std::size_t latent_slots = 0;
  float norm_eps = 1e-5f;

  std::size_t head_dim() const { return d_model / n_heads; }
  // Throws ConfigError.
  void validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

nlohmann::json to_json(const ModelConfig& c);
// Rejects unknown keys; missing keys keep their defaults.
ModelConfig model_config_from_json(const nlohmann::json& j);

}  // namespace latentlab
