#include "hym/shape.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hym/error.hpp"

namespace hym {

std::size_t product(std::span<const std::size_t> xs) noexcept {
  return std::accumulate(xs.begin(), xs.end(), std::size_t{1},
                         std::multiplies<>{});
}

Shape::Shape(Dims dims) : dims_(std::move(dims)) {
  if (dims_.empty()) fail(Errc::BadShape, "shape must have order >= 1");
  volume_ = 1;
  for (std::size_t n : dims_) {
    if (n == 0) fail(Errc::BadShape, "shape dimensions must be >= 1");
    if (volume_ > std::numeric_limits<std::size_t>::max() / n)
      fail(Errc::BadShape, "shape volume overflows");
    volume_ *= n;
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size() - 1; k > 0; --k)
    strides_[k - 1] = strides_[k] * dims_[k];
}

Dims Shape::mids() const {
  if (dims_.size() <= 2) return {};
  return Dims(dims_.begin() + 1, dims_.end() - 1);
}

std::size_t Shape::mid_volume() const noexcept {
  if (dims_.size() <= 2) return 1;
  return product(std::span(dims_).subspan(1, dims_.size() - 2));
}

bool Shape::is_hypercubic() const noexcept {
  return std::all_of(dims_.begin(), dims_.end(),
                     [&](std::size_t n) { return n == dims_.front(); });
}

std::size_t Shape::offset(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size())
    fail(Errc::ArityMismatch, "multi-index arity differs from shape order");
  std::size_t off = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] < 1 || index[k] > dims_[k])
      fail(Errc::DimensionMismatch, "multi-index out of range");
    off += (index[k] - 1) * strides_[k];
  }
  return off;
}

std::string Shape::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) s += 'x';
    s += std::to_string(dims_[k]);
  }
  return s;
}

Shape make_shape(std::size_t front, std::span<const std::size_t> mids, std::size_t back) {
  Dims dims;
  dims.reserve(mids.size() + 2);
  dims.push_back(front);
  dims.insert(dims.end(), mids.begin(), mids.end());
  dims.push_back(back);
  return Shape(std::move(dims));
}

bool next_index(std::span<std::size_t> index, std::span<const std::size_t> dims) noexcept {
  for (std::size_t k = index.size(); k-- > 0;) {
    if (++index[k] < dims[k]) return true;
    index[k] = 0;
  }
  return false;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v < 1 || v > images_.size() || seen[v - 1])
      fail(Errc::BadPartition, "permutation images are not a bijection on [1, d]");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::size_t> im(degree);
  std::iota(im.begin(), im.end(), std::size_t{1});
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t degree, std::size_t i, std::size_t j) {
  std::vector<std::size_t> im(degree);
  std::iota(im.begin(), im.end(), std::size_t{1});
  std::swap(im.at(i - 1), im.at(j - 1));
  return Permutation(std::move(im));
}

int Permutation::sign() const noexcept {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = k + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.degree() != degree())
    fail(Errc::ArityMismatch, "composing permutations of different degree");
  std::vector<std::size_t> im(images_.size());
  for (std::size_t k = 0; k < im.size(); ++k) im[k] = images_[other.images_[k] - 1];
  return Permutation(std::move(im));
}

IndexPartition::IndexPartition(std::vector<std::size_t> alpha, std::size_t order)
    : order_(order), alpha_(std::move(alpha)) {
  for (std::size_t k = 0; k < alpha_.size(); ++k) {
    if (alpha_[k] < 1 || alpha_[k] > order_)
      fail(Errc::BadPartition, "partition position outside [1, d]");
    if (k > 0 && alpha_[k] <= alpha_[k - 1])
      fail(Errc::BadPartition, "partition row set must be strictly increasing");
  }
  for (std::size_t p = 1; p <= order_; ++p)
    if (!std::binary_search(alpha_.begin(), alpha_.end(), p)) beta_.push_back(p);
}

}  // namespace hym
