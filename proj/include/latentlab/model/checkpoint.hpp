#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "latentlab/model/transformer.hpp"

namespace latentlab {

// Layout (little-endian):
//   "LTNTCKPT" | u32 version | u64 n + n bytes of JSON {"model": ..., "meta": ...}
//   | u32 tensor count | per tensor: u32 name length, name, u32 rank, u64 extents, f32 data
inline constexpr char kCheckpointMagic[8] = {'L', 'T', 'N', 'T', 'C', 'K', 'P', 'T'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct Checkpoint {
  Model model;
  nlohmann::json meta = nlohmann::json::object();
};

std::string serialize_checkpoint(const Model& model, const nlohmann::json& meta = nlohmann::json::object());
Checkpoint deserialize_checkpoint(const std::string& bytes);

void save_checkpoint(const Model& model, const std::filesystem::path& path,
                     const nlohmann::json& meta = nlohmann::json::object());
Checkpoint load_checkpoint(const std::filesystem::path& path);

// Order-sensitive FNV-1a over every model parameter's bits (bank excluded).
std::uint64_t params_hash(const ModelParams& params);

}  // namespace latentlab
