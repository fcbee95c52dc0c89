// Copyright 2026 The gmwis Authors
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


// Sanity checks of the brute-force references against hand-computed values.

#include "oracles.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gmwis/patterns.hpp"

namespace gmwis::testing {
namespace {

TEST(OracleTest, BruteMwisHandValues) {
  EXPECT_EQ(brute_mwis(cycle(5)), 2);
  EXPECT_EQ(brute_mwis(cycle(5, {1, 2, 3, 4, 5})), 8);
  EXPECT_EQ(brute_mwis(path(5)), 3);
  EXPECT_EQ(brute_mwis(clique(4, {1, 9, 2, 3})), 9);
  EXPECT_EQ(brute_mwis(edgeless(6, 2)), 12);
  EXPECT_EQ(brute_mwis(WeightedGraph{}), 0);
}

TEST(OracleTest, BruteInducedHandValues) {
  EXPECT_TRUE(brute_has_induced(catalog("P3").graph(), cycle(5)));
  EXPECT_FALSE(brute_has_induced(catalog("K3").graph(), cycle(5)));
  EXPECT_FALSE(brute_has_induced(catalog("C4").graph(), clique(5)));
  EXPECT_TRUE(brute_has_induced(catalog("diamond").graph(), catalog("gem").graph()));
  EXPECT_FALSE(brute_has_induced(catalog("claw").graph(), catalog("gem").graph()));
}

TEST(OracleTest, BruteModulesAndCutsets) {
  EXPECT_TRUE(brute_is_prime(path(4)));
  EXPECT_FALSE(brute_is_prime(cycle(4)));
  EXPECT_EQ(brute_nontrivial_modules(cycle(4)).size(), 2U);
  EXPECT_TRUE(brute_has_clique_cutset(path(3)));
  EXPECT_FALSE(brute_has_clique_cutset(cycle(4)));
  EXPECT_FALSE(brute_has_clique_cutset(clique(4)));
}

}  // namespace
}  // namespace gmwis::testing
