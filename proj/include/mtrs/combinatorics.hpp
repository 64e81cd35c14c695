#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

namespace mtrs {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// C(n, k), saturating at kSaturated.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = saturating_mul(r, base);
  return r;
}

/// k-subsets of {0, ..., n-1} in lexicographic order.
class Combination {
 public:
  Combination(std::uint32_t n, std::uint32_t k) : n_(n), idx_(k) {
    for (std::uint32_t i = 0; i < k; ++i) idx_[i] = i;
    valid_ = k <= n;
  }

  /// Positions the iterator at the combination with the given lexicographic rank.
  static Combination unrank(std::uint32_t n, std::uint32_t k, std::uint64_t rank) {
    Combination c(n, k);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      for (;;) {
        const std::uint64_t block = binomial(n - next - 1, k - i - 1);
        if (rank < block) break;
        rank -= block;
        ++next;
      }
      c.idx_[i] = next++;
    }
    return c;
  }

  bool valid() const { return valid_; }
  std::span<const std::uint32_t> indices() const { return idx_; }

  bool next() {
    const auto k = static_cast<std::uint32_t>(idx_.size());
    std::uint32_t i = k;
    while (i > 0) {
      --i;
      if (idx_[i] < n_ - k + i) {
        ++idx_[i];
        for (std::uint32_t j = i + 1; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
        return true;
      }
    }
    valid_ = false;
    return false;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> idx_;
  bool valid_ = true;
};

/// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order
/// until fn returns false. Returns false iff stopped early.
template <class Fn>
bool for_each_combination(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  for (Combination c(n, k); c.valid(); c.next()) {
    if (!fn(c.indices())) return false;
  }
  return true;
}

/// Splits [0, total) into `workers` contiguous blocks and runs
/// fn(begin, end, worker) on each, one thread per non-empty block.
template <class Fn>
void parallel_blocks(std::uint64_t total, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || total < 2) {
    fn(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    if (begin == end) continue;
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
  }
}

/// Rank of the lexicographically first k-subset rejected by
/// accept(indices, worker), or kSaturated if every subset is accepted.
/// The result does not depend on the worker count.
template <class Accept>
std::uint64_t first_rejected_combination(std::uint32_t n, std::uint32_t k, unsigned workers, Accept&& accept) {
  const std::uint64_t total = binomial(n, k);
  std::atomic<std::uint64_t> best{kSaturated};
  parallel_blocks(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    Combination c = Combination::unrank(n, k, begin);
    for (std::uint64_t r = begin; r < end; ++r, c.next()) {
      if (r >= best.load(std::memory_order_relaxed)) return;
      if (!accept(c.indices(), worker)) {
        std::uint64_t cur = best.load();
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
        return;
      }
    }
  });
  return best.load();
}

}  // namespace mtrs
