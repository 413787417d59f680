#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace latentlab {

// One compact JSON document per line. DataError on I/O failure, FormatError
// (with the line number) on unparsable lines.
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path, const std::vector<nlohmann::json>& rows);
void append_jsonl(const std::filesystem::path& path, const nlohmann::json& row);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

// splitmix64 step: derives independent child seeds from one run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// FNV-1a over the compact dump; used to tag runs by resolved config.
std::string config_hash(const nlohmann::json& j);
// Same hash over a file's bytes; DataError if unreadable.
std::string file_digest(const std::filesystem::path& path);

}  // namespace latentlab
