#pragma once

// Parse-time scaling harness: grow an expression by joining copies of a base
// expression with " + ", time the root-dialect parse of each size and fit the
// log-log slope of time against length.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ftx/parser.hpp"

namespace ftx::bench {

// 54 characters.
inline constexpr std::string_view default_base = "((weight * (n_mu > 0)) * ((tt_cat + tt_cat + tt_cat)))";
inline constexpr std::string_view joiner = " + ";

struct BenchRecord {
  std::size_t repeats = 0;
  std::size_t chars = 0;
  double seconds = 0.0;  // median over trials
  std::size_t trials = 0;
};

inline std::string build_input(std::string_view base, std::size_t repeats) {
  if (repeats == 0) throw std::invalid_argument("repeats must be positive");
  std::string out;
  out.reserve(repeats * base.size() + (repeats - 1) * joiner.size());
  for (std::size_t i = 0; i < repeats; ++i) {
    if (i) out += joiner;
    out += base;
  }
  return out;
}

inline std::vector<std::size_t> doubling_repeats(std::size_t max_repeats) {
  std::vector<std::size_t> out;
  for (std::size_t r = 1; r <= max_repeats; r *= 2) out.push_back(r);
  return out;
}

inline double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of nothing");
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

// One record per distinct repeat count, ascending. String construction is
// not timed; one warm-up parse per size is discarded. Throws ParseError when
// `base` does not parse.
inline std::vector<BenchRecord> run_bench(std::string_view base, std::vector<std::size_t> repeat_set,
                                          std::size_t trials) {
  if (repeat_set.empty()) throw std::invalid_argument("repeat set is empty");
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  std::sort(repeat_set.begin(), repeat_set.end());
  repeat_set.erase(std::unique(repeat_set.begin(), repeat_set.end()), repeat_set.end());

  parse(base, Dialect::root);

  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (std::size_t repeats : repeat_set) {
    const std::string input = build_input(base, repeats);
    parse(input, Dialect::root);
    std::vector<double> samples;
    samples.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      const auto start = clock::now();
      NodePtr tree = parse(input, Dialect::root);
      const auto stop = clock::now();
      samples.push_back(std::chrono::duration<double>(stop - start).count());
      tree.reset();
    }
    records.push_back({repeats, input.size(), median(std::move(samples)), trials});
  }
  return records;
}

// Least-squares slope of log(seconds) against log(chars).
inline double loglog_slope(std::span<const BenchRecord> records) {
  if (records.size() < 2) throw std::invalid_argument("need at least two records for a slope");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(records.size());
  for (const auto& r : records) {
    if (r.seconds <= 0.0 || r.chars == 0) throw std::invalid_argument("non-positive measurement");
    const double x = std::log(static_cast<double>(r.chars));
    const double y = std::log(r.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("all records have the same length");
  return (n * sxy - sx * sy) / denom;
}

// Median time never decreases with size, except that the two smallest sizes
// may be swapped by timer noise.
inline bool monotone_with_noise(std::span<const BenchRecord> records) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].seconds < records[i - 1].seconds && i != 1) return false;
  }
  return true;
}

inline void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "repeats,chars,seconds,trials\n";
  const auto old_precision = out.precision(9);
  for (const auto& r : records) out << r.repeats << ',' << r.chars << ',' << r.seconds << ',' << r.trials << '\n';
  out.precision(old_precision);
}

}  // namespace ftx::bench
