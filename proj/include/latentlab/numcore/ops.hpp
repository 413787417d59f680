#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "latentlab/numcore/autograd.hpp"
#include "latentlab/numcore/tensor.hpp"

namespace latentlab::ops {

// ---- plain tensor functions ------------------------------------------------

// Row-wise softmax with max subtraction; the reductions run in double.
Tensor softmax_rows(const Tensor& x);

// Rotates each row of a [T×d] tensor (d even) pairwise: element i pairs with
// i + d/2 and is turned by position_ids[t]·base^(-2i/d). A tensor holding
// several heads side by side is handled with head_dim < cols.
Tensor rope(const Tensor& x, std::span<const std::int64_t> position_ids, std::size_t head_dim,
            double base = 10000.0, bool inverse = false);

// ---- differentiable ops ----------------------------------------------------

Var matmul(const Var& a, const Var& b);  // [m×k]·[k×n]
Var linear(const Var& x, const Var& w);  // x·wᵀ with w stored [out×in]
Var add(const Var& a, const Var& b);
Var scale(const Var& x, float s);
Var gelu(const Var& x);
Var rmsnorm(const Var& x, const Var& gain, float eps = 1e-5f);
Var softmax_rows(const Var& x);
Var rope(const Var& x, std::span<const std::int64_t> position_ids, std::size_t head_dim,
         double base = 10000.0);
// Σ x ⊙ weights, a scalar probe used by gradient checks.
Var weighted_sum(const Var& x, const Tensor& weights);

// Row selection from several tables: out row r = tables[refs[r].table].row(refs[r].row).
struct RowRef {
  std::size_t table;
  std::size_t row;
};
Var gather_rows(const std::vector<Var>& tables, std::span<const RowRef> refs);

// Rows of a matrix stored elsewhere (e.g. a KV cache), read in place.
struct RowsView {
  const float* data = nullptr;
  std::size_t rows = 0;
  std::size_t stride = 0;
  const float* row(std::size_t i) const { return data + i * stride; }
};

// Multi-head causal attention. q/k/v are [T×D] with D = n_heads·head_dim and
// keys already rotated. past_k/past_v ([P×D], may be empty) are constants that
// precede the new rows; new row i sits at absolute index P+i and sees keys
// 0..P+i.
struct AttentionTrace {
  bool want_weights = false;
  bool want_scores = false;
  std::vector<Tensor> weights;  // per head, [T×S], post-softmax
  std::vector<Tensor> scores;   // per head, [T×S], scaled pre-softmax logits (masked cells = 0)
};
Var causal_attention(const Var& q, const Var& k, const Var& v, std::size_t n_heads, RowsView past_k = {},
                     RowsView past_v = {}, AttentionTrace* trace = nullptr);

using Mask = std::vector<std::uint8_t>;

struct CrossEntropyResult {
  Var loss;
  std::size_t counted = 0;
  bool empty_mask = false;  // no unmasked position; loss defined as 0
};

// Mean of -log softmax(logits[t])[targets[t]] over positions with mask[t] != 0.
// Target ids at masked positions are never read.
CrossEntropyResult masked_cross_entropy(const Var& logits, std::span<const std::int32_t> targets,
                                        std::span<const std::uint8_t> mask);

// Sum over unmasked positions divided by `denominator`; used to accumulate a
// batch mean one sequence at a time.
Var masked_nll(const Var& logits, std::span<const std::int32_t> targets,
               std::span<const std::uint8_t> mask, double denominator);

}  // namespace latentlab::ops
