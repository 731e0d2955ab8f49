#include "hesse/random.hpp"

namespace hesse {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over seed ^ index
  std::uint64_t z = (seed ^ index) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Scalar sample_scalar(const Field& field, Rng& rng, RationalBounds bounds) {
  if (field.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> residue(0, field.modulus() - 1);
    return Scalar::from_int(field, static_cast<long long>(residue(rng)));
  }
  std::uniform_int_distribution<long long> num(-bounds.max_abs_numerator,
                                               bounds.max_abs_numerator);
  std::uniform_int_distribution<long long> den(1, bounds.max_denominator);
  const long long n = num(rng);
  const long long d = den(rng);
  return Scalar::from_fraction(field, mpz_class(static_cast<long>(n)),
                               mpz_class(static_cast<long>(d)));
}

Scalar sample_scalar(const Field& field, std::uint64_t seed, RationalBounds bounds) {
  Rng rng(seed);
  return sample_scalar(field, rng, bounds);
}

Scalar sample_nonzero_scalar(const Field& field, Rng& rng, RationalBounds bounds) {
  for (;;) {
    auto s = sample_scalar(field, rng, bounds);
    if (!s.is_zero()) return s;
  }
}

}  // namespace hesse
