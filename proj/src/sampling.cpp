#include "desargues/sampling.hpp"

namespace desargues {

Scalar random_scalar(const Field& field, Rng& rng) {
  switch (field.kind()) {
    case FieldKind::Rationals:
      return field.from_rational(Rational(rng.between(-12, 12), rng.between(1, 6)));
    case FieldKind::PrimeField:
      return field.from_int(
          static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(field.characteristic()))));
    case FieldKind::QuadExt:
      return field.from_parts(random_scalar(field.base(), rng), random_scalar(field.base(), rng));
  }
  return field.zero();
}

Scalar random_nonzero(const Field& field, Rng& rng) {
  for (;;) {
    Scalar x = random_scalar(field, rng);
    if (!x.is_zero()) return x;
  }
}

}  // namespace desargues
