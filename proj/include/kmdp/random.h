//
// Copyright 2026 The kmdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef KMDP_RANDOM_H_
#define KMDP_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace kmdp {

// SplitMix64 finalizer. Bijective on 64-bit words.
uint64_t Mix64(uint64_t x);

// Derives a substream key from a base seed and a path of identifiers.
// Paths of different lengths never alias: the length is folded into the key.
uint64_t SubstreamKey(uint64_t seed, std::initializer_list<uint64_t> path);

// A deterministic random stream. Every release of a curve consumes exactly
// one stream, so trial t of an experiment seeded with s always sees the same
// draws regardless of scheduling.
class RandomStream {
 public:
  explicit RandomStream(uint64_t key) : engine_(key) {}

  static RandomStream ForSubstream(uint64_t seed,
                                   std::initializer_list<uint64_t> path) {
    return RandomStream(SubstreamKey(seed, path));
  }

  uint64_t NextU64() { return engine_(); }

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double NextOpenUnit() {
    return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kmdp

#endif  // KMDP_RANDOM_H_
