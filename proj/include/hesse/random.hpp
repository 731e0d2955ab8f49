#pragma once

#include <cstdint>
#include <random>

#include "hesse/field.hpp"

namespace hesse {

using Rng = std::mt19937_64;

/// Mixes a base seed with a trial index so each trial gets an independent stream
/// whatever order trials are evaluated in.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Bounds for rational sampling: |num| <= max_abs_numerator, 1 <= den <= max_denominator.
struct RationalBounds {
  long long max_abs_numerator = 100;
  long long max_denominator = 100;
};

/// Uniform residue over GF(p); bounded fraction, canonicalized, over Q.
Scalar sample_scalar(const Field& field, Rng& rng, RationalBounds bounds = {});
Scalar sample_scalar(const Field& field, std::uint64_t seed,
                     RationalBounds bounds = {});
Scalar sample_nonzero_scalar(const Field& field, Rng& rng,
                             RationalBounds bounds = {});

}  // namespace hesse
