// Copyright 2026 The logicbench Authors
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

#ifndef LOGICBENCH_RNG_HPP_
#define LOGICBENCH_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

namespace logicbench {

// Counter-based 64-bit stream. Output i is splitmix64(key + (i+1) * gamma),
// so a stream is fully described by (key, counter) and two streams with
// different keys never share state. Distribution helpers are implemented here
// rather than through <random> distributions, whose outputs differ between
// standard library implementations.
class Stream {
 public:
  explicit Stream(std::uint64_t key) : key_(key) {}

  // Per-instance stream for a dataset seed and instance index.
  static Stream derive(std::uint64_t seed, std::uint64_t instance_index);

  std::uint64_t next_u64();

  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t uniform(std::uint64_t bound);

  bool coin() { return (next_u64() >> 63) != 0; }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace logicbench

#endif  // LOGICBENCH_RNG_HPP_
