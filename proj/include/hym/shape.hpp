#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hym {

using Dims = std::vector<std::size_t>;

/// Dimension vector (n_1, ..., n_d) of a hypermatrix, d >= 1, every n_i >= 1.
/// Storage is lexicographic with the last index fastest.
class Shape {
 public:
  Shape() = default;
  explicit Shape(Dims dims);
  Shape(std::initializer_list<std::size_t> dims) : Shape(Dims(dims)) {}

  std::size_t order() const noexcept { return dims_.size(); }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t operator[](std::size_t axis) const { return dims_.at(axis); }
  std::size_t volume() const noexcept { return volume_; }

  std::size_t front() const noexcept { return dims_.front(); }
  std::size_t back() const noexcept { return dims_.back(); }
  /// (n_2, ..., n_{d-1}); empty for order <= 2.
  Dims mids() const;
  /// Product of the middle dimensions; 1 for order <= 2.
  std::size_t mid_volume() const noexcept;

  bool is_hypercubic() const noexcept;
  bool is_hypersquare() const noexcept { return front() == back(); }

  /// Row-major strides, stride[d-1] == 1.
  const std::vector<std::size_t>& strides() const noexcept { return strides_; }

  /// 0-based flat offset of a 1-based multi-index; throws on out-of-range.
  std::size_t offset(std::span<const std::size_t> index) const;

  std::string to_string() const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.dims_ == b.dims_; }

 private:
  Dims dims_;
  std::vector<std::size_t> strides_;
  std::size_t volume_ = 0;
};

/// Shape (front, mids..., back).
Shape make_shape(std::size_t front, std::span<const std::size_t> mids, std::size_t back);

std::size_t product(std::span<const std::size_t> xs) noexcept;

/// Advance a 0-based multi-index in lexicographic order (last index fastest).
/// Returns false after the last index, leaving `index` all zeros.
bool next_index(std::span<std::size_t> index, std::span<const std::size_t> dims) noexcept;

/// Bijection on [1, d] given by its images (1-based).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t degree);
  /// Transposition of the 1-based positions i and j.
  static Permutation transposition(std::size_t degree, std::size_t i, std::size_t j);

  std::size_t degree() const noexcept { return images_.size(); }
  /// 1-based image of 1-based point k.
  std::size_t operator()(std::size_t k) const { return images_.at(k - 1); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  int sign() const noexcept;
  Permutation inverse() const;

  /// (*this ∘ other)(k) = (*this)(other(k)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Partition of the index positions [1, d] into row set alpha and column set
/// beta, both strictly increasing.
class IndexPartition {
 public:
  /// alpha: strictly increasing 1-based positions in [1, d]; may be empty.
  IndexPartition(std::vector<std::size_t> alpha, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const std::vector<std::size_t>& alpha() const noexcept { return alpha_; }
  const std::vector<std::size_t>& beta() const noexcept { return beta_; }

 private:
  std::size_t order_;
  std::vector<std::size_t> alpha_;
  std::vector<std::size_t> beta_;
};

}  // namespace hym
