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

/**
 * @file
 * Canned worked cases: each runs a fixed scenario or property check and
 * compares the observed number against the known value.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "copgame/game.hpp"

namespace copgame {

struct CaseReport {
  std::string name;
  std::string expected;  // human-readable target, e.g. "0.750000000" or "<= 1e-12"
  double observed = 0.0;
  bool pass = false;
  std::string detail;
};

/// uniform-1-over-n, universal-vertex-1, c4-evasion-0, c4-unfair-3-4,
/// theorem1-sweep, star-impossibility, reach-bound.
const std::vector<std::string>& reproduce_cases();

/// Throws std::invalid_argument for an unknown name.
CaseReport reproduce_case(std::string_view name, std::uint64_t seed = 0);

/// Deterministic Robber replaying a fixed walk (walk[0] is the start); it
/// stays put once the walk runs out.
EvaderPolicy walk_evader(std::vector<Vertex> walk);

struct SweepSearch {
  double worst = 1.0;
  std::vector<Vertex> worst_walk;
  std::size_t walks = 0;
  /// Moves enumerated exhaustively; the Robber stays put afterwards.
  std::size_t depth = 0;
  /// True when `depth` covers every Robber move that can matter.
  bool exhaustive = false;
};

/// Minimum capture probability of the sweep over deterministic Robber walks.
/// Every walk of up to `depth` moves is tried, lowering the depth until at
/// most `walk_cap` walks remain; when it had to be lowered, `walk_cap`
/// random full-length walks are tried as well.
SweepSearch adversarial_sweep_search(const DominatingSweep& sweep, std::size_t rounds,
                                     std::size_t depth, std::size_t walk_cap, Rng& rng);

}  // namespace copgame
