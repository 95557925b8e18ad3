#include "hym/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "hym/error.hpp"

namespace hym {

std::size_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t factorial(std::size_t n) noexcept {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

CombIndex::CombIndex(std::size_t n, std::vector<std::size_t> members)
    : n_(n), members_(std::move(members)) {
  if (members_.empty() || members_.size() > n_)
    fail(Errc::BadK, "combination size must lie in [1, n]");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n_ || (i > 0 && members_[i] <= members_[i - 1]))
      fail(Errc::BadK, "combination members must be strictly increasing in [1, n]");
  }
}

std::size_t CombIndex::rank() const noexcept {
  // Count subsets that precede this one: at position i, every choice c with
  // prev < c < members[i] contributes C(n - c, k - i - 1) subsets.
  const std::size_t k = members_.size();
  std::size_t r = 0, prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = prev + 1; c < members_[i]; ++c) r += binomial(n_ - c, k - i - 1);
    prev = members_[i];
  }
  return r + 1;
}

CombIndex CombIndex::unrank(std::size_t n, std::size_t k, std::size_t r) {
  if (k == 0 || k > n) fail(Errc::BadK, "combination size must lie in [1, n]");
  if (r < 1 || r > binomial(n, k)) fail(Errc::BadK, "combination rank out of range");
  std::vector<std::size_t> m;
  m.reserve(k);
  std::size_t rest = r - 1, c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::size_t block = binomial(n - c, k - i - 1);
      if (rest < block) break;
      rest -= block;
      ++c;
    }
    m.push_back(c++);
  }
  return CombIndex(n, std::move(m));
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

PermutationWalker::PermutationWalker(std::size_t n) : perm_(n) {
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
}

bool PermutationWalker::next() noexcept {
  const std::size_t n = perm_.size();
  if (n < 2) return false;
  std::size_t i = n - 1;
  while (i > 0 && perm_[i - 1] >= perm_[i]) --i;
  if (i == 0) return false;
  std::size_t j = n - 1;
  while (perm_[j] <= perm_[i - 1]) --j;
  std::swap(perm_[i - 1], perm_[j]);
  // Reversing a run of length L is floor(L/2) transpositions.
  const std::size_t run = n - i;
  std::reverse(perm_.begin() + static_cast<std::ptrdiff_t>(i), perm_.end());
  if ((1 + run / 2) % 2 == 1) sign_ = -sign_;
  return true;
}

}  // namespace hym
