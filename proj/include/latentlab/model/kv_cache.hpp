#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "latentlab/latent/token.hpp"
#include "latentlab/numcore/ops.hpp"
#include "latentlab/numcore/tensor.hpp"

namespace latentlab {

// Per-layer rotated keys and values for every token processed so far, plus
// the token identities and position ids they were computed with. Owned by a
// single decode session.
class KvCache {
 public:
  KvCache() = default;
  KvCache(std::size_t n_layers, std::size_t width);

  std::size_t n_layers() const noexcept { return keys_.size(); }
  std::size_t width() const noexcept { return width_; }
  std::size_t length() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  ops::RowsView keys(std::size_t layer) const;
  ops::RowsView values(std::size_t layer) const;
  const TokenSeq& tokens() const noexcept { return tokens_; }
  const std::vector<std::int64_t>& position_ids() const noexcept { return positions_; }

  // Layer rows are staged first; commit() records the tokens and makes the
  // new length visible. abort() drops anything staged since the last commit.
  void stage(std::size_t layer, const Tensor& k, const Tensor& v);
  void commit(std::span<const Token> tokens, std::span<const std::int64_t> positions);
  void abort();

  // Drops the last k entries from every layer and record. StateError if k
  // exceeds the length.
  void rollback(std::size_t k);
  void clear();

 private:
  std::size_t width_ = 0;
  std::vector<std::vector<float>> keys_;
  std::vector<std::vector<float>> values_;
  TokenSeq tokens_;
  std::vector<std::int64_t> positions_;
};

KvCache rollback(KvCache cache, std::size_t k);

}  // namespace latentlab
