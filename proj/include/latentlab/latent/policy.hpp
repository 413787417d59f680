#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace latentlab {

enum class TriggerKind { kStart, kEnd, kEvery, kMarker };
enum class Placement { kPrepend, kAppend };
enum class PositionMode { kFreeze, kIncrease };
enum class Region : std::uint8_t { kQuery, kResponse };

// Structural role of a latent run; function specialization maps roles to groups.
enum class Role { kQueryStart, kQueryMarker, kQueryEnd, kResponseMarker };

struct InsertionPolicy {
  TriggerKind trigger = TriggerKind::kStart;
  std::size_t m = 1;                  // latents per run
  std::size_t k = 1;                  // Every: period in verbal tokens
  std::vector<std::int32_t> markers;  // Marker: verbal ids that fire
  Placement placement = Placement::kPrepend;
  PositionMode position_mode = PositionMode::kFreeze;
  // Empty: every run uses group 0. Otherwise only listed roles get runs; a
  // listed query_start/query_end adds that run on top of the trigger's own.
  std::map<Role, std::int32_t> fs_map;
  std::string name;

  static InsertionPolicy start(std::size_t m);
  static InsertionPolicy end(std::size_t m);
  static InsertionPolicy every(std::size_t k, std::size_t m);
  static InsertionPolicy marker(std::vector<std::int32_t> ids, std::size_t m);

  bool fs_enabled() const noexcept { return !fs_map.empty(); }
  // Group for a run in this role, or nullopt when FS leaves the role out.
  std::optional<std::int32_t> group_for(Role role) const;
  bool is_marker(std::int32_t id) const;
  std::size_t groups_needed() const;

  // ConfigError on m/k/marker violations or groups/slots beyond the bank.
  void validate() const;
  void validate_against(std::size_t bank_groups, std::size_t bank_slots) const;

  std::string label() const;  // name if set, else e.g. "FREQ(8,2)"
};

const char* role_name(Role r);
Role role_from_name(const std::string& s);

nlohmann::json to_json(const InsertionPolicy& p);
// Marker entries may be ids or strings; strings go through `resolve`.
InsertionPolicy policy_from_json(const nlohmann::json& j,
                                 const std::function<std::int32_t(const std::string&)>& resolve = {});

}  // namespace latentlab
