#pragma once

// Tape-free reverse-mode differentiation: every op result keeps pointers to
// its inputs and a closure that pushes its gradient back into them. The graph
// is dropped when the last handle to the result goes away.

#include <functional>
#include <initializer_list>
#include <memory>
#include <vector>

#include "latentlab/numcore/tensor.hpp"

namespace latentlab {

struct Node {
  Tensor value;
  Tensor grad;  // empty until something flows into it
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward;

  Tensor& ensure_grad();
};

class Var {
 public:
  Var() = default;
  explicit Var(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  static Var constant(Tensor value);
  static Var parameter(Tensor value);

  bool defined() const noexcept { return static_cast<bool>(node_); }
  const Tensor& value() const { return node_->value; }
  Tensor& mutable_value() { return node_->value; }
  const Tensor& grad() const { return node_->grad; }
  Tensor& mutable_grad() { return node_->ensure_grad(); }
  bool requires_grad() const noexcept { return node_ && node_->requires_grad; }
  void set_requires_grad(bool on) { node_->requires_grad = on; }
  void zero_grad();
  const Shape& shape() const { return node_->value.shape(); }

  Node* node() const noexcept { return node_.get(); }
  const std::shared_ptr<Node>& handle() const noexcept { return node_; }

 private:
  std::shared_ptr<Node> node_;
};

bool grad_enabled();

class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

// Builds an op result. The closure is kept only when grad mode is on and some
// input requires a gradient.
Var make_result(Tensor value, std::initializer_list<Var> inputs, std::function<void(Node&)> backward);
Var make_result(Tensor value, const std::vector<Var>& inputs, std::function<void(Node&)> backward);

// Seeds d(root)/d(root) = 1 and runs the closures in reverse topological order.
// The root must hold exactly one element.
void backward(const Var& root);

}  // namespace latentlab
