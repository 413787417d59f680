#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "latentlab/latent/policy.hpp"
#include "latentlab/latent/token.hpp"

namespace latentlab {

struct AugmentedSequence {
  TokenSeq tokens;
  std::vector<std::int64_t> position_ids;
  std::vector<std::uint8_t> target_mask;  // [k] scores the prediction of token k+1
  std::vector<Region> regions;
  std::vector<std::size_t> insertion_sites;  // index of the first latent of each run

  std::size_t size() const noexcept { return tokens.size(); }
  std::vector<std::int32_t> query_ids() const;     // verbal, query region
  std::vector<std::int32_t> response_ids() const;  // verbal, response region
  // Next-token targets aligned with target_mask; -1 where the successor is latent or absent.
  std::vector<std::int32_t> targets() const;
};

struct LatentRun {
  Role role;
  std::int32_t group;
};

// Run fired by verbal token `id`, the `count`-th token after BOS (BOS is 0),
// sitting in `region`. Only Every/Marker triggers fire on tokens.
std::optional<LatentRun> token_trigger(const InsertionPolicy& policy, std::int32_t id, std::size_t count,
                                       Region region);
std::optional<LatentRun> start_run(const InsertionPolicy& policy);
std::optional<LatentRun> end_run(const InsertionPolicy& policy);
void push_run(TokenSeq& out, const LatentRun& run, std::size_t m);

// query[0] is BOS. An empty response is the inference-time case: a trailing
// Prepend run is then anchored to the first token still to be generated.
AugmentedSequence augment(std::span<const std::int32_t> query, std::span<const std::int32_t> response,
                          const InsertionPolicy& policy);
// StructureError if `tokens` already holds latents.
AugmentedSequence augment(std::span<const Token> tokens, std::size_t query_len, const InsertionPolicy& policy);
AugmentedSequence unaugmented(std::span<const std::int32_t> query, std::span<const std::int32_t> response);

// Freeze: verbal tokens are 1..n; latents copy the next (Prepend) or previous
// (Append) verbal id. Increase: 1..N. A run without its anchor is a
// StructureError unless open_tail admits a trailing Prepend run (id n+1).
std::vector<std::int64_t> assign_position_ids(std::span<const Token> tokens, Placement placement, PositionMode mode,
                                              bool open_tail = false);

std::vector<std::uint8_t> build_target_mask(std::span<const Token> tokens, std::span<const Region> regions);
std::vector<std::uint8_t> build_target_mask(const AugmentedSequence& aug);

struct Violation {
  std::size_t index = 0;
  std::string what;
};
std::optional<Violation> verify(const AugmentedSequence& aug, const InsertionPolicy& policy);

nlohmann::json to_json(const AugmentedSequence& aug);
AugmentedSequence augmented_from_json(const nlohmann::json& j);

}  // namespace latentlab
