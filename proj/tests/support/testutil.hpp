// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <utility>
#include <vector>

#include "nilsum/limit_ring.hpp"
#include "nilsum/matrix.hpp"

namespace nilsum::testutil {

using Rng = std::mt19937_64;

Scalar random_scalar(Rng& rng, const DomainPtr& d);
Scalar random_nonzero_scalar(Rng& rng, const DomainPtr& d);
/// For Z/m: a unit chosen uniformly; for division rings: any nonzero.
Scalar random_invertible_scalar(Rng& rng, const DomainPtr& d);

Matrix random_matrix(Rng& rng, const DomainPtr& d, std::uint32_t rows,
                     std::uint32_t cols);

/// A product of random elementary matrices together with its exact
/// inverse; invertible over every domain (including Z/m).
std::pair<Matrix, Matrix> random_invertible_pair(Rng& rng, const DomainPtr& d,
                                                 std::uint32_t n);

Matrix random_strictly_upper(Rng& rng, const DomainPtr& d, std::uint32_t n);

/// P * N * P^{-1} with N strictly upper triangular: nilpotent with index
/// at most n by construction.
Matrix random_conjugated_nilpotent(Rng& rng, const DomainPtr& d, std::uint32_t n);

/// Random non-scalar matrix with zero trace (n >= 2).
Matrix random_trace_zero_nonscalar(Rng& rng, const DomainPtr& d, std::uint32_t n);

/// Random matrix in unit-subdiagonal shape: subdiagonal 1, zero below,
/// free elsewhere.
Matrix random_unit_subdiagonal_shape(Rng& rng, const DomainPtr& d, std::uint32_t n);

/// Random matrix whose first subcolumn (entries below a_11) is nonzero.
Matrix random_nonzero_first_subcolumn(Rng& rng, const DomainPtr& d, std::uint32_t n);

/// Random limit element with level <= max_start_level (canonical form may
/// be lower).
LimitElement random_limit_element(Rng& rng, std::uint32_t max_start_level);

/// The four division-ring domains used across fuzz suites:
/// GF(2), GF(3), GF(4), quaternions.
const std::vector<DomainPtr>& fuzz_domains();

} // namespace nilsum::testutil
