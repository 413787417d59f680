#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace latentlab {

// Character-level vocabulary over the task alphabet. BOS and EOS take ids 0
// and 1; characters follow in sorted order.
class Tokenizer {
 public:
  static constexpr std::int32_t kBos = 0;
  static constexpr std::int32_t kEos = 1;

  Tokenizer();  // the shared task alphabet
  explicit Tokenizer(std::string alphabet);

  std::size_t vocab_size() const noexcept { return alphabet_.size() + 2; }
  const std::string& alphabet() const noexcept { return alphabet_; }

  // DomainError on characters outside the alphabet.
  std::vector<std::int32_t> encode(std::string_view text) const;
  std::int32_t id_of(char c) const;
  // BOS/EOS render as <BOS>/<EOS>; DomainError on unknown ids.
  std::string decode(std::span<const std::int32_t> ids) const;
  std::string token_text(std::int32_t id) const;

  nlohmann::json to_json() const;
  static Tokenizer from_json(const nlohmann::json& j);
  bool operator==(const Tokenizer& o) const { return alphabet_ == o.alphabet_; }

 private:
  std::string alphabet_;
  std::array<std::int32_t, 256> index_{};
};

}  // namespace latentlab
