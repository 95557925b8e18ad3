#include "hym/stp.hpp"

#include <algorithm>

namespace hym {

Dims combine_mids(const Dims& left, const Dims& right) {
  const std::size_t sl = product(left), sr = product(right);
  if (sl == 1 && sr == 1) return Dims(std::max(left.size(), right.size()), 1);
  if (sl == 1) return right;
  if (sr == 1) return left;
  if (left == right) return left;
  return {std::lcm(sl, sr)};
}

}  // namespace hym
