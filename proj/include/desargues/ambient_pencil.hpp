#pragma once

// Quadrics and pencils of quadrics in P(V), dim V = n + 1, and the
// involution a pencil induces on a line P(E) when the restricted pencil is
// regular under the determinant pairing.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desargues/exact_linalg.hpp"
#include "desargues/involution.hpp"

namespace desargues {

/// Symmetric (n+1) x (n+1) matrix. Throws NotSymmetric / DimensionMismatch.
class SymFormN {
 public:
  explicit SymFormN(Matrix entries);

  std::size_t dim() const { return m_.size(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Matrix& entries() const { return m_; }
  const Field& field() const { return field_; }

  /// u^T M v. Throws DimensionMismatch.
  Scalar value(const Vector& u, const Vector& v) const;

  bool is_zero() const;

 private:
  Matrix m_;
  Field field_;
};

SymFormN operator+(const SymFormN& f, const SymFormN& g);
SymFormN operator*(const Scalar& k, const SymFormN& f);

/// Two non-proportional forms R, S spanning the quadrics aR + bS.
class Pencil {
 public:
  /// Throws DimensionMismatch or ProportionalPencil.
  Pencil(SymFormN r, SymFormN s);

  const SymFormN& r() const { return r_; }
  const SymFormN& s() const { return s_; }
  std::size_t dim() const { return r_.dim(); }
  Field field() const { return common_field(r_.field(), s_.field()); }

 private:
  SymFormN r_;
  SymFormN s_;
};

/// The line P(E), E spanned by e1, e2. A point (x : y) of the line stands
/// for the vector x e1 + y e2.
class LineInPV {
 public:
  /// Throws DimensionMismatch or DependentLine.
  LineInPV(Vector e1, Vector e2);

  const Vector& e1() const { return e1_; }
  const Vector& e2() const { return e2_; }
  std::size_t dim() const { return e1_.size(); }

  /// x e1 + y e2.
  Vector vector_at(const ProjPoint& p) const;

  /// The line with basis (m00 e1 + m10 e2, m01 e1 + m11 e2). Throws
  /// SingularMatrix.
  LineInPV rebased(const Matrix2& m) const;

 private:
  Vector e1_;
  Vector e2_;
};

/// (q(e1,e1), q(e1,e2), q(e2,e2)); zero exactly when the line lies on the
/// quadric.
SymForm2 restrict(const SymFormN& q, const LineInPV& line);

/// aR + bS. Throws ZeroCoefficients for (0, 0).
SymFormN pencil_member(const Pencil& p, const Scalar& a, const Scalar& b);

struct RestrictedGram {
  Scalar ff, fg, gg;  // <f,f>, <f,g>, <g,g>
  Scalar det;
};

RestrictedGram restricted_gram(const SymForm2& f, const SymForm2& g);
RestrictedGram restricted_gram(const Pencil& p, const LineInPV& line);

enum class Verdict { Regular, LineInQuadric, CommonZero };
std::string_view to_string(Verdict v);

struct Diagnosis {
  Verdict verdict = Verdict::Regular;
  /// LineInQuadric: (a, b) with a f + b g = 0.
  std::optional<std::pair<Scalar, Scalar>> coefficients;
  /// CommonZero: a shared zero, possibly over a quadratic extension.
  std::optional<ProjPoint> point;
};

/// Classification of the restricted pencil spanned by f = R|E and g = S|E.
Diagnosis diagnose(const SymForm2& f, const SymForm2& g);
Diagnosis diagnose(const Pencil& p, const LineInPV& line);

class NotRegularError : public Error {
 public:
  explicit NotRegularError(Diagnosis d);
  const Diagnosis& diagnosis() const { return diagnosis_; }

 private:
  Diagnosis diagnosis_;
};

/// The involution whose Desargues form is orthogonal to both f and g.
/// Throws NotRegularError.
Involution induced_involution(const SymForm2& f, const SymForm2& g);
Involution induced_involution(const Pencil& p, const LineInPV& line);

enum class MemberVerdict { Swapped, FixedTangent, NoIntersection };
std::string_view to_string(MemberVerdict v);

struct MemberCheck {
  MemberVerdict verdict = MemberVerdict::NoIntersection;
  std::vector<ProjPoint> points;  // over `field`
  Field field;
  bool checked_over_extension = false;
};

/// Checks that the zeros of a restricted member form a conjugate pair (or a
/// fixed point) of inv. When the member has no zeros over K and
/// check_extension is set, the pair over K(sqrt disc) is checked too.
/// Throws ContractViolation when a check fails, and when the member
/// restriction is zero.
MemberCheck check_member(const SymForm2& member, const Involution& inv, bool check_extension);
MemberCheck member_pair_check(const Pencil& p, const Scalar& a, const Scalar& b,
                              const LineInPV& line, const Involution& inv,
                              bool check_extension = true);

/// Projective parameters (a : b). Over GF(p), all p + 1 classes when
/// count is 0 or at least p + 1; otherwise the first `count` of a fixed
/// enumeration (1 : 0), (0 : 1), (1 : t) with t running through small
/// nonzero values.
std::vector<std::pair<Scalar, Scalar>> member_parameters(const Field& field, std::size_t count);

}  // namespace desargues
