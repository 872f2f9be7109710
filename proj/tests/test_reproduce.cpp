// Copyright 2026 The copgame Authors
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


#include "copgame/reproduce.hpp"

#include <gtest/gtest.h>

namespace copgame {
namespace {

class Cases : public ::testing::TestWithParam<std::string> {};

TEST_P(Cases, PassAcrossSeeds) {
  for (std::uint64_t seed : {0, 1, 2}) {
    const CaseReport r = reproduce_case(GetParam(), seed);
    EXPECT_TRUE(r.pass) << r.name << " seed " << seed << ": " << r.detail;
    EXPECT_EQ(r.name, GetParam());
  }
}

TEST_P(Cases, Deterministic) {
  const CaseReport a = reproduce_case(GetParam(), 5);
  const CaseReport b = reproduce_case(GetParam(), 5);
  EXPECT_EQ(a.observed, b.observed);
  EXPECT_EQ(a.detail, b.detail);
}

INSTANTIATE_TEST_SUITE_P(All, Cases, ::testing::ValuesIn(reproduce_cases()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s) {
                             if (c == '-') c = '_';
                           }
                           return s;
                         });

TEST(Reproduce, UnknownCase) {
  EXPECT_THROW(reproduce_case("nope"), std::invalid_argument);
}

TEST(WalkEvader, StaysAfterTheWalk) {
  const EvaderPolicy e = walk_evader({3, 4});
  const RealVector cop = RealVector::Zero(5);
  EXPECT_EQ(e.place(cop), 3u);
  EXPECT_EQ(e.move({1, 3, cop}), 4u);
  EXPECT_EQ(e.move({9, 4, cop}), 4u);
  EXPECT_THROW(walk_evader({}), std::invalid_argument);
}

}  // namespace
}  // namespace copgame
