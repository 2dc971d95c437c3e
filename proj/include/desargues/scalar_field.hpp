#pragma once

// Exact arithmetic over Q, GF(p) (p odd) and towers of quadratic extensions
// K(sqrt d). Fields are runtime values: a Scalar carries the Field it lives
// in, and mixing scalars is allowed only along base -> extension embeddings.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "desargues/error.hpp"

namespace desargues {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField, QuadExt };

class Scalar;

namespace detail {
struct FieldNode;
}

/// Immutable handle to a field descriptor. Copies share the descriptor.
class Field {
 public:
  static Field rationals();
  /// Throws CharacteristicTwo for p = 2 and NotPrime for composite p.
  static Field prime(std::int64_t p);
  /// K(sqrt d). Throws AlreadySquare if d is a square in K (d = 0 included).
  static Field extension(const Field& base, const Scalar& d);

  FieldKind kind() const;
  /// 0 for Q.
  std::int64_t characteristic() const;
  /// Base field of a QuadExt; throws FieldMismatch otherwise.
  const Field& base() const;
  /// The d of a QuadExt; throws FieldMismatch otherwise.
  const Scalar& radicand() const;
  /// Number of quadratic steps above the prime field.
  int depth() const;

  /// True if this field equals `target` or is one of its tower bases.
  bool embeds_into(const Field& target) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_integer(const Integer& n) const;
  /// Rationals only.
  Scalar from_rational(const Rational& q) const;
  /// u + v sqrt(d); u and v must embed into the base.
  Scalar from_parts(const Scalar& u, const Scalar& v) const;

  std::string to_string() const;

  friend bool operator==(const Field& lhs, const Field& rhs);

 private:
  explicit Field(std::shared_ptr<const detail::FieldNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::FieldNode> node_;

  friend class Scalar;
  friend std::optional<Scalar> sqrt_in_field(const Scalar& x);
};

/// An element of a Field. Fractions are kept reduced with positive
/// denominator; residues are canonical in [0, p).
class Scalar {
 public:
  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Rationals only.
  const Rational& rational() const;
  /// PrimeField only.
  std::int64_t residue() const;
  /// QuadExt only: (u, v) meaning u + v sqrt(d).
  const Scalar& ext_u() const;
  const Scalar& ext_v() const;

  Scalar inv() const;

  /// Representative sign used for canonical square roots: positive over Q,
  /// residue in [1, (p-1)/2] over GF(p), and over QuadExt the first nonzero
  /// coordinate decides.
  bool is_canonical_positive() const;

  std::string to_string() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x);
  friend bool operator==(const Scalar& x, const Scalar& y);

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

 private:
  using ExtParts = std::shared_ptr<const std::array<Scalar, 2>>;
  using Rep = std::variant<Rational, std::int64_t, ExtParts>;

  Scalar(Field field, Rep rep) : field_(std::move(field)), rep_(std::move(rep)) {}

  Field field_;
  Rep rep_;

  friend class Field;
  friend Scalar embed(const Scalar& x, const Field& target);
  friend std::optional<Scalar> sqrt_in_field(const Scalar& x);
};

/// Image of x under the tower embedding into `target`. Throws FieldMismatch
/// when x's field is not a base of `target`.
Scalar embed(const Scalar& x, const Field& target);

/// Whichever of f, g the other embeds into; FieldMismatch when neither does.
Field common_field(const Field& f, const Field& g);

/// Canonical square root of x in its own field, if any.
std::optional<Scalar> sqrt_in_field(const Scalar& x);

inline Field extend_with_sqrt(const Field& field, const Scalar& d) {
  return Field::extension(field, d);
}

}  // namespace desargues
