#include "qrecip/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "qrecip/error.hpp"

namespace qrecip {

namespace {

std::vector<std::int64_t> small_primes(std::int64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  if (hi > (std::int64_t{1} << 40)) throw DomainError("sieve bound too large");
  lo = std::max<std::int64_t>(lo, 2);
  std::vector<std::int64_t> out;
  if (hi < lo) return out;

  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(hi)));
  while (root * root > hi) --root;
  while ((root + 1) * (root + 1) <= hi) ++root;
  const std::vector<std::int64_t> base = small_primes(root);

  constexpr std::int64_t kSegment = std::int64_t{1} << 18;
  std::vector<bool> composite;
  for (std::int64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    const std::int64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
    composite.assign(static_cast<std::size_t>(seg_hi - seg_lo + 1), false);
    for (std::int64_t sp : base) {
      if (sp * sp > seg_hi) break;
      std::int64_t start = std::max(sp * sp, (seg_lo + sp - 1) / sp * sp);
      for (std::int64_t j = start; j <= seg_hi; j += sp) {
        composite[static_cast<std::size_t>(j - seg_lo)] = true;
      }
    }
    for (std::int64_t i = seg_lo; i <= seg_hi; ++i) {
      if (!composite[static_cast<std::size_t>(i - seg_lo)]) out.push_back(i);
    }
  }
  return out;
}

}  // namespace qrecip
