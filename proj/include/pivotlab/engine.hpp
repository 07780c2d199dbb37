#pragma once

#include "pivotlab/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace pivotlab {

enum class Strategy { sequential, binary };

struct StageRecord {
  std::size_t size = 0;
  std::uint64_t comparisons = 0;
};

struct PartitionStats {
  std::uint64_t comparisons = 0;             // element-vs-pivot, partitioning only
  std::uint64_t pivot_sort_comparisons = 0;  // ordering the k pivots
  std::uint64_t insertion_comparisons = 0;   // small-segment insertion sort
  std::uint64_t swaps = 0;                   // pivot-selection swaps + bucket moves
  std::vector<StageRecord> stage_log;        // per stage, when logging enabled
};

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Trial i of a run seeded with `root` draws from
// mt19937_64(substream_seed(root, i)); substreams are independent of trial
// execution order, so aggregation is order-free.
std::uint64_t substream_seed(std::uint64_t root, std::uint64_t index);

// Unbiased draw in [0, bound) (Lemire); self-contained so that reports do not
// depend on the standard library's distribution implementations.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound);

// Order-independent pairwise summation.
double pairwise_sum(const std::vector<double>& xs);

namespace detail {

template <class T>
std::uint64_t insertion_sort_count(std::vector<T>& a, std::size_t lo, std::size_t hi) {
  std::uint64_t comps = 0;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    T v = std::move(a[i]);
    std::size_t j = i;
    while (j > lo) {
      ++comps;
      if (v < a[j - 1]) {
        a[j] = std::move(a[j - 1]);
        --j;
      } else {
        break;
      }
    }
    a[j] = std::move(v);
  }
  return comps;
}

template <class T>
struct SortContext {
  int k = 1;
  Strategy strategy = Strategy::sequential;
  bool log_stages = false;
  PartitionStats stats;
  std::vector<T> scratch;
  std::vector<int> bucket_of;
  std::vector<T> pivots;
  std::vector<std::size_t> cursor;
};

// One partitioning stage over [lo, hi); returns the final pivot positions so
// the caller can recurse into the k+1 gaps. Requires hi - lo > k.
template <class T>
void partition_stage(std::vector<T>& a, std::size_t lo, std::size_t hi,
                     SortContext<T>& ctx, std::mt19937_64& rng,
                     std::vector<std::size_t>& pivot_pos) {
  const int k = ctx.k;
  const std::size_t s = hi - lo;

  // k uniformly chosen pivots via partial Fisher-Yates, moved to the front.
  for (int i = 0; i < k; ++i) {
    const std::size_t j =
        lo + i + static_cast<std::size_t>(bounded_rand(rng, s - static_cast<std::size_t>(i)));
    std::swap(a[lo + static_cast<std::size_t>(i)], a[j]);
    ++ctx.stats.swaps;
  }
  ctx.stats.pivot_sort_comparisons +=
      insertion_sort_count(a, lo, lo + static_cast<std::size_t>(k));

  ctx.pivots.assign(a.begin() + static_cast<std::ptrdiff_t>(lo),
                    a.begin() + static_cast<std::ptrdiff_t>(lo) + k);

  const std::size_t m = s - static_cast<std::size_t>(k);
  ctx.scratch.assign(a.begin() + static_cast<std::ptrdiff_t>(lo) + k,
                     a.begin() + static_cast<std::ptrdiff_t>(hi));
  ctx.bucket_of.resize(m);

  std::vector<std::size_t> counts(static_cast<std::size_t>(k) + 1, 0);
  std::uint64_t stage_comps = 0;
  for (std::size_t idx = 0; idx < m; ++idx) {
    const T& x = ctx.scratch[idx];
    int bucket;
    if (ctx.strategy == Strategy::sequential) {
      bucket = k;
      for (int j = 0; j < k; ++j) {
        ++stage_comps;
        if (x < ctx.pivots[static_cast<std::size_t>(j)]) {
          bucket = j;
          break;
        }
      }
    } else {
      int blo = 0;
      int bhi = k;
      while (blo < bhi) {
        const int mid = (blo + bhi) / 2;
        ++stage_comps;
        if (x < ctx.pivots[static_cast<std::size_t>(mid)]) {
          bhi = mid;
        } else {
          blo = mid + 1;
        }
      }
      bucket = blo;
    }
    ctx.bucket_of[idx] = bucket;
    ++counts[static_cast<std::size_t>(bucket)];
  }

  // Layout: bucket 0, pivot 0, bucket 1, pivot 1, ..., pivot k-1, bucket k.
  ctx.cursor.assign(static_cast<std::size_t>(k) + 1, 0);
  ctx.cursor[0] = lo;
  for (int b = 1; b <= k; ++b) {
    ctx.cursor[static_cast<std::size_t>(b)] =
        ctx.cursor[static_cast<std::size_t>(b) - 1] + counts[static_cast<std::size_t>(b) - 1] + 1;
  }
  pivot_pos.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    pivot_pos[static_cast<std::size_t>(j)] =
        ctx.cursor[static_cast<std::size_t>(j)] + counts[static_cast<std::size_t>(j)];
    a[pivot_pos[static_cast<std::size_t>(j)]] = ctx.pivots[static_cast<std::size_t>(j)];
    ++ctx.stats.swaps;
  }
  for (std::size_t idx = 0; idx < m; ++idx) {
    const auto b = static_cast<std::size_t>(ctx.bucket_of[idx]);
    a[ctx.cursor[b]++] = std::move(ctx.scratch[idx]);
    ++ctx.stats.swaps;
  }

  ctx.stats.comparisons += stage_comps;
  if (ctx.log_stages) {
    ctx.stats.stage_log.push_back(StageRecord{s, stage_comps});
  }
}

template <class T>
void sort_recursive(std::vector<T>& a, SortContext<T>& ctx, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  stack.emplace_back(0, a.size());
  std::vector<std::size_t> pivot_pos;
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo <= static_cast<std::size_t>(ctx.k)) {
      ctx.stats.insertion_comparisons += insertion_sort_count(a, lo, hi);
      continue;
    }
    partition_stage(a, lo, hi, ctx, rng, pivot_pos);
    std::size_t start = lo;
    for (std::size_t p : pivot_pos) {
      if (p > start) {
        stack.emplace_back(start, p);
      }
      start = p + 1;
    }
    if (hi > start) {
      stack.emplace_back(start, hi);
    }
  }
}

template <class T>
void require_distinct(const std::vector<T>& keys) {
  std::vector<T> copy = keys;
  std::sort(copy.begin(), copy.end());
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) {
    throw std::invalid_argument("multipivot_sort: duplicate keys (model assumes distinct keys)");
  }
}

}  // namespace detail

// Sorts `keys` ascending with k uniformly chosen pivots per stage; segments
// of at most k keys go to insertion sort. Rejects duplicate keys.
template <class T>
PartitionStats multipivot_sort(std::vector<T>& keys, int k, Strategy strategy,
                               std::uint64_t seed, bool log_stages = false) {
  if (k < 1) {
    throw std::invalid_argument("multipivot_sort: k must be positive");
  }
  detail::require_distinct(keys);
  detail::SortContext<T> ctx;
  ctx.k = k;
  ctx.strategy = strategy;
  ctx.log_stages = log_stages;
  std::mt19937_64 rng(seed);
  detail::sort_recursive(keys, ctx, rng);
  return std::move(ctx.stats);
}

enum class SimMode { synthetic, comparisons };

struct SimulationReport {
  double mean = 0.0;
  double variance = 0.0;   // unbiased sample variance
  double std_error = 0.0;  // sqrt(variance / trials)
  long trials = 0;
  std::uint64_t seed = 0;
  SimMode mode = SimMode::synthetic;
  long n = 0;
  int k = 0;
  // comparisons mode only: companion counters averaged over trials
  double mean_pivot_sort_comparisons = 0.0;
  double mean_insertion_comparisons = 0.0;
};

// Source of the k sorted pivot positions (1-based) for a segment of size s;
// swappable so tests can force deterministic pivot choices.
struct PivotSource {
  virtual ~PivotSource() = default;
  virtual void pick(long s, int k, std::vector<long>& out) = 0;
};

// Uniform over all C(s, k) position subsets (Floyd sampling).
struct RandomPivotSource final : PivotSource {
  explicit RandomPivotSource(std::mt19937_64& rng_in) : rng(&rng_in) {}
  void pick(long s, int k, std::vector<long>& out) override;
  std::mt19937_64* rng;
};

// One recursive trial: any segment of size s is charged a_bar*s + b_bar when
// s >= k (paper) or s > k (algorithmic) and split into the k+1 gaps around
// the picked positions; smaller segments charge nothing.
double synthetic_trial_cost(long n, int k, double a_bar, double b_bar,
                            Convention convention, PivotSource& pivots);

SimulationReport mc_synthetic(long n, int k, const TollModel& toll, long trials,
                              std::uint64_t seed, Convention convention);

// Sorts a fresh uniform permutation of 1..n per trial and reports the
// partition comparisons; pivot-ordering and insertion-sort comparisons are
// averaged separately in the report.
SimulationReport mc_comparisons(long n, int k, long trials, std::uint64_t seed,
                                Strategy strategy);

struct FitPoint {
  long size = 0;
  double mean_stage_comparisons = 0.0;
  double residual = 0.0;
};

struct FittedToll {
  double a_bar = 0.0;
  double b_bar = 0.0;
  double max_abs_residual = 0.0;
  std::vector<FitPoint> points;

  TollModel to_toll() const;  // exact rationals from the fitted doubles
};

// Measures mean top-level-stage comparisons at each size and fits the linear
// toll by least squares. Needs at least two distinct sizes, each > k.
FittedToll fit_toll(int k, Strategy strategy, const std::vector<long>& sizes,
                    long trials, std::uint64_t seed);

}  // namespace pivotlab
