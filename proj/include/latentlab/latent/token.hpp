#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latentlab {

// A verbal vocabulary entry (BOS/EOS included) or a latent-bank entry
// addressed by (group, slot).
struct Token {
  enum class Kind : std::uint8_t { kVerbal, kLatent };

  Kind kind = Kind::kVerbal;
  std::int32_t id = 0;     // verbal id
  std::int32_t group = 0;  // latent only
  std::int32_t slot = 0;   // latent only

  static constexpr Token verbal(std::int32_t id) { return Token{Kind::kVerbal, id, 0, 0}; }
  static constexpr Token latent(std::int32_t group, std::int32_t slot) { return Token{Kind::kLatent, 0, group, slot}; }

  constexpr bool is_verbal() const noexcept { return kind == Kind::kVerbal; }
  constexpr bool is_latent() const noexcept { return kind == Kind::kLatent; }

  friend constexpr bool operator==(const Token&, const Token&) = default;
};

using TokenSeq = std::vector<Token>;

TokenSeq verbal_tokens(const std::vector<std::int32_t>& ids);
// Drops latent tokens; verbal ids in order.
std::vector<std::int32_t> verbal_ids(const TokenSeq& tokens);
std::string debug_string(const Token& t);

}  // namespace latentlab
