// Copyright 2026 The ecss Authors
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

#ifndef ECSS_GENERATORS_H_
#define ECSS_GENERATORS_H_

#include <cstdint>
#include <random>

#include "ecss/graph.h"
#include "ecss/rational.h"

namespace ecss {

// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
Graph CycleGraph(int n);

// G(n, p) resampled until 2-vertex-connected; Error{kGenerationFailed}
// after `max_tries` rejections.
Graph RandomTwoVertexConnected(int n, const Rational& density,
                               std::uint64_t seed, int max_tries = 1000);

// A Hamiltonian cycle on a random vertex order plus each remaining pair
// independently with probability `density`.
Graph HamPlusChords(int n, const Rational& density, std::uint64_t seed);

// Bernoulli draw with exact rational probability.
bool Flip(std::mt19937_64& rng, const Rational& p);

}  // namespace ecss

#endif  // ECSS_GENERATORS_H_
