#pragma once

#include "lpcert/birkhoff.hpp"
#include "lpcert/lp.hpp"

#include <cstdint>

namespace lpcert {

// Deterministic pseudo-random instances: the same seed yields the same value
// on every platform (raw mt19937_64 draws, no distribution objects).

// Feasible by construction: draws a nonnegative x0 and small integer A and p,
// then sets b = A x0. m may be zero; n must be positive.
LpProblem generate_random_lp(std::uint64_t seed, std::size_t m, std::size_t n);

// An exact convex combination of a few random permutation matrices; may
// coincide with a single permutation.
DoublyStochastic generate_random_ds(std::uint64_t seed, std::size_t n);

}  // namespace lpcert
