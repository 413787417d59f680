#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace latentlab {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

// Dense row-major float tensor with value semantics.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, float fill = 0.0f);
  Tensor(Shape shape, std::vector<float> data);

  static Tensor matrix(std::size_t rows, std::size_t cols, std::initializer_list<float> values);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
  std::size_t numel() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  // 2-D view helpers; a tensor of higher rank is viewed as [prod(leading)×last].
  std::size_t rows() const;
  std::size_t cols() const;

  float* data() noexcept { return data_.data(); }
  const float* data() const noexcept { return data_.data(); }
  std::span<float> span() noexcept { return data_; }
  std::span<const float> span() const noexcept { return data_; }
  std::vector<float>& values() noexcept { return data_; }
  const std::vector<float>& values() const noexcept { return data_; }

  float& operator[](std::size_t i) { return data_[i]; }
  float operator[](std::size_t i) const { return data_[i]; }
  float& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
  float at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }
  std::span<float> row(std::size_t r) { return std::span<float>(data_).subspan(r * cols(), cols()); }
  std::span<const float> row(std::size_t r) const {
    return std::span<const float>(data_).subspan(r * cols(), cols());
  }

  void fill(float v);
  void reshape(Shape shape);
  bool all_finite() const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Shape shape_;
  std::vector<float> data_;
};

Tensor transpose(const Tensor& m);
// Rows [begin, end) of a 2-D view.
Tensor slice_rows(const Tensor& m, std::size_t begin, std::size_t end);
Tensor concat_rows(const Tensor& a, const Tensor& b);
float max_abs_diff(const Tensor& a, const Tensor& b);

// Throws DimensionError unless the shapes are identical.
void require_same_shape(const Tensor& a, const Tensor& b, const char* op);

}  // namespace latentlab
