// Copyright 2026 The Hyperpart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERPART_COMBINATORICS_HPP
#define HYPERPART_COMBINATORICS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace hyperpart {

// C(n, r) in floating point; 0 outside 0 <= r <= n.
inline double Binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0.0;
  if (r > n - r) r = n - r;
  long double acc = 1.0L;
  for (long long i = 1; i <= r; ++i) {
    acc = acc * static_cast<long double>(n - r + i) / static_cast<long double>(i);
  }
  return static_cast<double>(acc);
}

// Exact C(n, r), or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> BinomialExact(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

// Calls fn(counts) for every vector of `parts` non-negative integers summing
// to `total` with counts[j] <= caps[j]. Order is reverse-lexicographic.
template <typename Fn>
void ForEachComposition(int total, std::span<const int> caps, Fn&& fn) {
  const auto parts = caps.size();
  if (parts == 0) {
    if (total == 0) fn(std::span<const int>{});
    return;
  }
  std::vector<int> counts(parts, 0);
  auto recurse = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j + 1 == parts) {
      if (remaining <= caps[j]) {
        counts[j] = remaining;
        fn(std::span<const int>(counts));
      }
      return;
    }
    for (int c = std::min(remaining, caps[j]); c >= 0; --c) {
      counts[j] = c;
      self(self, j + 1, remaining - c);
    }
  };
  recurse(recurse, 0, total);
}

// Number of compositions of `total` into `parts` unconstrained parts.
inline double CompositionCount(int total, int parts) {
  return Binomial(total + parts - 1, parts - 1);
}

// Calls fn(subset) for every m-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void ForEachSubset(std::uint32_t n, std::uint32_t m, Fn&& fn) {
  if (m > n) return;
  std::vector<std::uint32_t> idx(m);
  for (std::uint32_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const std::uint32_t>(idx));
    if (m == 0) return;
    std::int64_t i = static_cast<std::int64_t>(m) - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (auto j = static_cast<std::size_t>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Floyd's algorithm: `count` distinct values from [0, range), unsorted.
template <typename Rng>
std::vector<std::uint32_t> SampleDistinct(std::uint32_t range, std::uint32_t count, Rng& rng) {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::uint32_t j = range - count; j < range; ++j) {
    std::uniform_int_distribution<std::uint32_t> pick(0, j);
    const auto t = pick(rng);
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    } else {
      out.push_back(j);
    }
  }
  return out;
}

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream seed for (base, stream).
inline std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream) {
  return SplitMix64(SplitMix64(base) ^ SplitMix64(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace hyperpart

#endif  // HYPERPART_COMBINATORICS_HPP
