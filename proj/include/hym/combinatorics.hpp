#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hym {

std::size_t binomial(std::size_t n, std::size_t k) noexcept;

/// A k-subset of [1, n] stored as a strictly increasing 1-based tuple; an
/// element of Q(n, k). Ranks are 1-based in lexicographic order.
class CombIndex {
 public:
  CombIndex(std::size_t n, std::vector<std::size_t> members);

  /// The subset of lexicographic rank r in [1, C(n, k)].
  static CombIndex unrank(std::size_t n, std::size_t k, std::size_t r);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return members_.size(); }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t rank() const noexcept;

  friend bool operator==(const CombIndex&, const CombIndex&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> members_;
};

/// Every k-subset of {0, ..., n-1} (0-based) in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Walks S_n in lexicographic order, tracking the sign incrementally.
/// Points are 0-based.
class PermutationWalker {
 public:
  explicit PermutationWalker(std::size_t n);

  std::span<const std::size_t> current() const noexcept { return perm_; }
  int sign() const noexcept { return sign_; }
  /// Advances to the lexicographic successor; false once all n! are visited.
  bool next() noexcept;

 private:
  std::vector<std::size_t> perm_;
  int sign_ = 1;
};

std::size_t factorial(std::size_t n) noexcept;

}  // namespace hym
