#pragma once

#include <optional>
#include <string>

#include "desargues/scalar_field.hpp"

namespace desargues {

/// A point (x : y) of the projective line, stored normalized: (x/y : 1) when
/// y != 0, otherwise (1 : 0), the point at infinity.
class ProjPoint {
 public:
  /// Throws ZeroVector for (0, 0).
  ProjPoint(const Scalar& x, const Scalar& y);

  static ProjPoint affine(const Scalar& x) { return {x, x.field().one()}; }
  static ProjPoint infinity(const Field& field) { return {field.one(), field.zero()}; }

  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  const Field& field() const { return x_.field(); }
  bool is_infinity() const { return y_.is_zero(); }

  /// Same point with coordinates embedded into `target`.
  ProjPoint lifted(const Field& target) const;

  std::string to_string() const;

 private:
  Scalar x_;
  Scalar y_;
};

/// [P, Q] = x_P y_Q - x_Q y_P; zero exactly when P and Q coincide.
Scalar bracket(const ProjPoint& p, const ProjPoint& q);

bool point_eq(const ProjPoint& p, const ProjPoint& q);
inline bool operator==(const ProjPoint& p, const ProjPoint& q) { return point_eq(p, q); }

/// Row-major 2x2 matrix acting on coordinate columns (x, y).
struct Matrix2 {
  Scalar m00, m01, m10, m11;

  Scalar det() const { return m00 * m11 - m01 * m10; }
  Matrix2 transpose() const { return {m00, m10, m01, m11}; }
  Matrix2 inverse() const;
  static Matrix2 identity(const Field& f) { return {f.one(), f.zero(), f.zero(), f.one()}; }
};

Matrix2 operator*(const Matrix2& a, const Matrix2& b);

/// Image of P under an invertible matrix; throws SingularMatrix.
ProjPoint apply(const Matrix2& m, const ProjPoint& p);

/// Either a field element or the marker for a vanishing denominator.
class CrossRatio {
 public:
  static CrossRatio finite(Scalar value) { return CrossRatio(std::move(value)); }
  static CrossRatio infinite() { return CrossRatio(std::nullopt); }

  bool is_infinite() const { return !value_; }
  /// Throws DegenerateConfiguration when infinite.
  const Scalar& value() const;
  std::string to_string() const;

 private:
  explicit CrossRatio(std::optional<Scalar> v) : value_(std::move(v)) {}
  std::optional<Scalar> value_;
};

/// (S, T; M, N) = [S,M][T,N] / ([S,N][T,M]). With M = aS + bT and
/// N = lS + mT this is (b l) / (a m), so it equals -1 exactly when
/// a m + b l = 0. Throws DegenerateConfiguration when numerator and
/// denominator both vanish.
CrossRatio cross_ratio(const ProjPoint& s, const ProjPoint& t, const ProjPoint& m,
                       const ProjPoint& n);

/// The N with (S, T; M, N) = -1. S, T, M must be pairwise distinct.
ProjPoint harmonic_conjugate(const ProjPoint& s, const ProjPoint& t, const ProjPoint& m);

}  // namespace desargues
