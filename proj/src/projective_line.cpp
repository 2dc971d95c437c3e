#include "desargues/projective_line.hpp"

namespace desargues {

ProjPoint::ProjPoint(const Scalar& x, const Scalar& y) : x_(x), y_(y) {
  Field f = common_field(x.field(), y.field());
  if (x.is_zero() && y.is_zero())
    throw Error(ErrorCode::ZeroVector, "(0, 0) is not a projective point");
  if (y.is_zero()) {
    x_ = f.one();
    y_ = f.zero();
  } else {
    x_ = embed(x / y, f);
    y_ = f.one();
  }
}

ProjPoint ProjPoint::lifted(const Field& target) const {
  return ProjPoint(embed(x_, target), embed(y_, target));
}

std::string ProjPoint::to_string() const {
  if (is_infinity()) return "inf";
  return x_.to_string();
}

Scalar bracket(const ProjPoint& p, const ProjPoint& q) { return p.x() * q.y() - q.x() * p.y(); }

bool point_eq(const ProjPoint& p, const ProjPoint& q) { return bracket(p, q).is_zero(); }

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Matrix2 Matrix2::inverse() const {
  Scalar d = det();
  if (d.is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  Scalar inv = d.inv();
  return {m11 * inv, -m01 * inv, -m10 * inv, m00 * inv};
}

ProjPoint apply(const Matrix2& m, const ProjPoint& p) {
  if (m.det().is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  return ProjPoint(m.m00 * p.x() + m.m01 * p.y(), m.m10 * p.x() + m.m11 * p.y());
}

const Scalar& CrossRatio::value() const {
  if (!value_) throw Error(ErrorCode::DegenerateConfiguration, "cross ratio is infinite");
  return *value_;
}

std::string CrossRatio::to_string() const { return value_ ? value_->to_string() : "inf"; }

CrossRatio cross_ratio(const ProjPoint& s, const ProjPoint& t, const ProjPoint& m,
                       const ProjPoint& n) {
  Scalar num = bracket(s, m) * bracket(t, n);
  Scalar den = bracket(s, n) * bracket(t, m);
  if (den.is_zero()) {
    if (num.is_zero())
      throw Error(ErrorCode::DegenerateConfiguration,
                  "cross ratio (" + s.to_string() + ", " + t.to_string() + "; " + m.to_string() +
                      ", " + n.to_string() + ") is 0/0");
    return CrossRatio::infinite();
  }
  return CrossRatio::finite(num / den);
}

ProjPoint harmonic_conjugate(const ProjPoint& s, const ProjPoint& t, const ProjPoint& m) {
  if (point_eq(s, t) || point_eq(s, m) || point_eq(t, m))
    throw Error(ErrorCode::DegenerateConfiguration,
                "harmonic conjugate needs distinct points, got " + s.to_string() + ", " +
                    t.to_string() + ", " + m.to_string());
  // [S,M][T,N] + [S,N][T,M] = 0 is linear in N.
  Scalar a = bracket(s, m);
  Scalar b = bracket(t, m);
  return ProjPoint(a * t.x() + b * s.x(), a * t.y() + b * s.y());
}

}  // namespace desargues
