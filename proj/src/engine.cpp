#include "pivotlab/engine.hpp"

#include <cmath>
#include <numeric>

namespace pivotlab {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(root + 0x9E3779B97F4A7C15ull * (index + 1));
}

std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (-bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double pairwise_sum(const std::vector<double>& xs) {
  // Recursion bottoms out on runs of 8; summation order is a pure function
  // of the index range, never of thread or trial order.
  struct Impl {
    static double run(const double* data, std::size_t size) {
      if (size <= 8) {
        double acc = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
          acc += data[i];
        }
        return acc;
      }
      const std::size_t half = size / 2;
      return run(data, half) + run(data + half, size - half);
    }
  };
  return Impl::run(xs.data(), xs.size());
}

namespace {

SimulationReport summarize(std::vector<double> costs, SimMode mode, long n, int k,
                           std::uint64_t seed) {
  SimulationReport report;
  report.mode = mode;
  report.n = n;
  report.k = k;
  report.seed = seed;
  report.trials = static_cast<long>(costs.size());
  report.mean = pairwise_sum(costs) / static_cast<double>(costs.size());
  if (costs.size() > 1) {
    std::vector<double> sq(costs.size());
    for (std::size_t i = 0; i < costs.size(); ++i) {
      const double d = costs[i] - report.mean;
      sq[i] = d * d;
    }
    report.variance = pairwise_sum(sq) / static_cast<double>(costs.size() - 1);
  }
  report.std_error = std::sqrt(report.variance / static_cast<double>(costs.size()));
  return report;
}

}  // namespace

void RandomPivotSource::pick(long s, int k, std::vector<long>& out) {
  out.clear();
  for (long j = s - k + 1; j <= s; ++j) {
    const long t = 1 + static_cast<long>(bounded_rand(*rng, static_cast<std::uint64_t>(j)));
    if (std::find(out.begin(), out.end(), t) != out.end()) {
      out.push_back(j);
    } else {
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
}

double synthetic_trial_cost(long n, int k, double a_bar, double b_bar,
                            Convention convention, PivotSource& pivots) {
  double total = 0.0;
  std::vector<long> stack{n};
  std::vector<long> positions;
  while (!stack.empty()) {
    const long s = stack.back();
    stack.pop_back();
    const bool charged = convention == Convention::paper ? s >= k : s > k;
    if (!charged) {
      continue;
    }
    total += a_bar * static_cast<double>(s) + b_bar;
    pivots.pick(s, k, positions);
    long prev = 0;
    for (const long pos : positions) {
      if (pos - prev - 1 > 0) {
        stack.push_back(pos - prev - 1);
      }
      prev = pos;
    }
    if (s - prev > 0) {
      stack.push_back(s - prev);
    }
  }
  return total;
}

SimulationReport mc_synthetic(long n, int k, const TollModel& toll, long trials,
                              std::uint64_t seed, Convention convention) {
  if (n < 0 || k < 1 || trials < 1) {
    throw std::invalid_argument("mc_synthetic: need n >= 0, k >= 1, trials >= 1");
  }
  const double a = to_double(toll.a_bar);
  const double b = to_double(toll.b_bar);
  std::vector<double> costs(static_cast<std::size_t>(trials));
  for (long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(t)));
    RandomPivotSource source(rng);
    costs[static_cast<std::size_t>(t)] =
        synthetic_trial_cost(n, k, a, b, convention, source);
  }
  return summarize(std::move(costs), SimMode::synthetic, n, k, seed);
}

SimulationReport mc_comparisons(long n, int k, long trials, std::uint64_t seed,
                                Strategy strategy) {
  if (n < 1 || k < 1 || trials < 1) {
    throw std::invalid_argument("mc_comparisons: need n >= 1, k >= 1, trials >= 1");
  }
  std::vector<double> costs(static_cast<std::size_t>(trials));
  std::vector<double> pivot_costs(static_cast<std::size_t>(trials));
  std::vector<double> insertion_costs(static_cast<std::size_t>(trials));
  std::vector<int> keys(static_cast<std::size_t>(n));
  for (long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(t)));
    std::iota(keys.begin(), keys.end(), 1);
    for (std::size_t i = keys.size(); i > 1; --i) {
      std::swap(keys[i - 1], keys[bounded_rand(rng, i)]);
    }
    detail::SortContext<int> ctx;
    ctx.k = k;
    ctx.strategy = strategy;
    detail::sort_recursive(keys, ctx, rng);
    costs[static_cast<std::size_t>(t)] = static_cast<double>(ctx.stats.comparisons);
    pivot_costs[static_cast<std::size_t>(t)] =
        static_cast<double>(ctx.stats.pivot_sort_comparisons);
    insertion_costs[static_cast<std::size_t>(t)] =
        static_cast<double>(ctx.stats.insertion_comparisons);
  }
  auto report = summarize(std::move(costs), SimMode::comparisons, n, k, seed);
  report.mean_pivot_sort_comparisons =
      pairwise_sum(pivot_costs) / static_cast<double>(trials);
  report.mean_insertion_comparisons =
      pairwise_sum(insertion_costs) / static_cast<double>(trials);
  return report;
}

TollModel FittedToll::to_toll() const {
  return TollModel{Rational(a_bar), Rational(b_bar)};
}

FittedToll fit_toll(int k, Strategy strategy, const std::vector<long>& sizes,
                    long trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("fit_toll: trials must be positive");
  }
  std::vector<long> distinct = sizes;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) {
    throw std::invalid_argument("fit_toll: need at least two distinct sizes");
  }
  for (const long s : distinct) {
    if (s <= k) {
      throw std::invalid_argument("fit_toll: every size must exceed k");
    }
  }

  FittedToll fit;
  std::vector<int> keys;
  std::vector<std::size_t> pivot_pos;
  for (std::size_t si = 0; si < distinct.size(); ++si) {
    const long s = distinct[si];
    std::vector<double> stage(static_cast<std::size_t>(trials));
    for (long t = 0; t < trials; ++t) {
      std::mt19937_64 rng(substream_seed(
          seed, static_cast<std::uint64_t>(si) * static_cast<std::uint64_t>(trials) +
                    static_cast<std::uint64_t>(t)));
      keys.resize(static_cast<std::size_t>(s));
      std::iota(keys.begin(), keys.end(), 1);
      for (std::size_t i = keys.size(); i > 1; --i) {
        std::swap(keys[i - 1], keys[bounded_rand(rng, i)]);
      }
      detail::SortContext<int> ctx;
      ctx.k = k;
      ctx.strategy = strategy;
      detail::partition_stage(keys, 0, keys.size(), ctx, rng, pivot_pos);
      stage[static_cast<std::size_t>(t)] = static_cast<double>(ctx.stats.comparisons);
    }
    FitPoint point;
    point.size = s;
    point.mean_stage_comparisons = pairwise_sum(stage) / static_cast<double>(trials);
    fit.points.push_back(point);
  }

  const double count = static_cast<double>(fit.points.size());
  double mean_s = 0.0;
  double mean_y = 0.0;
  for (const auto& p : fit.points) {
    mean_s += static_cast<double>(p.size);
    mean_y += p.mean_stage_comparisons;
  }
  mean_s /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& p : fit.points) {
    const double ds = static_cast<double>(p.size) - mean_s;
    sxx += ds * ds;
    sxy += ds * (p.mean_stage_comparisons - mean_y);
  }
  fit.a_bar = sxy / sxx;
  fit.b_bar = mean_y - fit.a_bar * mean_s;
  for (auto& p : fit.points) {
    p.residual = p.mean_stage_comparisons -
                 (fit.a_bar * static_cast<double>(p.size) + fit.b_bar);
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(p.residual));
  }
  return fit;
}

}  // namespace pivotlab
