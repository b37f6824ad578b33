// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "json.hpp"

namespace tancode::verify {

using nlohmann::json;

// Each suite runs a deterministic battery against built-in fixtures and
// returns {"suite", "pass", "seed", counters...}; exact checks throughout.

/// Rank-nullity of tangent vs gradient codes and gradient membership for
/// random ideal combinations, over 50 random small varieties.
json duality(uint64_t seed = 1);

/// Extension, direct-sum and (u|u+v)/fibered-product tangent identities on
/// the circle, the twisted cubic and the Hamming graph variety, 20 sampled
/// smooth points each.
json ops(uint64_t seed = 1);

/// Punctured-weight identity on 100 random [8,4] binary codes, all gamma
/// with |gamma| < d, both sides brute-forced.
json weights(uint64_t seed = 1);

/// Determinantal minimum-distance locus vs brute force on every GF(4)-point
/// of an exhaustively enumerable variety, d in {1,2}.
json loci();

/// 700/700 decode round-trips on a constant-tangent Hamming variety and
/// again on the char-2 Hamming graph variety, t = 1.
json decode_roundtrip(uint64_t seed = 1);

/// Deformation sampling at a conic point over GF(25) with 100 tuples drawn
/// from GF(5^4); passes at the 90/100 threshold.
json deform(uint64_t seed = 20240501);

}  // namespace tancode::verify
