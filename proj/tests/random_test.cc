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

#include "kmdp/random.h"

#include <set>

#include "gtest/gtest.h"

namespace kmdp {
namespace {

TEST(RandomStreamTest, SubstreamsAreReproducible) {
  RandomStream a = RandomStream::ForSubstream(42, {3});
  RandomStream b = RandomStream::ForSubstream(42, {3});
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RandomStreamTest, DistinctPathsGiveDistinctKeys) {
  std::set<uint64_t> keys;
  for (uint64_t seed : {0ULL, 1ULL, 2ULL}) {
    for (uint64_t t = 0; t < 50; ++t) {
      keys.insert(SubstreamKey(seed, {t}));
      keys.insert(SubstreamKey(seed, {t, 0}));
      keys.insert(SubstreamKey(seed, {t, 1}));
    }
  }
  EXPECT_EQ(keys.size(), 3u * 50u * 3u);
  EXPECT_NE(SubstreamKey(5, {}), SubstreamKey(5, {0}));
}

TEST(RandomStreamTest, OpenUnitStaysInside) {
  RandomStream rng(9);
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.NextOpenUnit();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  EXPECT_LT(lo, 1e-3);
  EXPECT_GT(hi, 1.0 - 1e-3);
}

}  // namespace
}  // namespace kmdp
