#pragma once

// Symmetric bilinear forms on a 2-dimensional space: the 3-dimensional
// space B of matrices (a b; b c) with the determinant pairing.

#include <optional>
#include <string>
#include <vector>

#include "desargues/projective_line.hpp"

namespace desargues {

/// The form with matrix (a b; b c), i.e. the binary quadratic
/// a x^2 + 2b xy + c y^2. Entries are embedded into a common field.
class SymForm2 {
 public:
  SymForm2(const Scalar& a, const Scalar& b, const Scalar& c);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Field& field() const { return a_.field(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }
  Scalar det() const { return a_ * c_ - b_ * b_; }

  /// v^T f w for the stored representatives of P and Q.
  Scalar value(const ProjPoint& p, const ProjPoint& q) const;

  SymForm2 lifted(const Field& target) const;
  std::string to_string() const;

  friend bool operator==(const SymForm2& f, const SymForm2& g) {
    return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_;
  }

 private:
  SymForm2(const Field& field, const Scalar& a, const Scalar& b, const Scalar& c);

  Scalar a_, b_, c_;
};

SymForm2 operator+(const SymForm2& f, const SymForm2& g);
SymForm2 operator*(const Scalar& k, const SymForm2& f);

/// f = k g for some nonzero k (both nonzero), or both zero.
bool proportional(const SymForm2& f, const SymForm2& g);

/// <f, g> = (a c' + c a') / 2 - b b'. <z, z> = det z.
Scalar det_pairing(const SymForm2& f, const SymForm2& g);

enum class FormClass { Zero, Anisotropic, Hyperbolic, Degenerate };
std::string_view to_string(FormClass c);

/// Scale-invariant type of f over its own field: Degenerate when det f = 0,
/// otherwise Hyperbolic or Anisotropic as b^2 - ac is or is not a square.
FormClass classify(const SymForm2& f);

struct IsotropicPoints {
  std::vector<ProjPoint> points;  // 0, 1 or 2 points, all over `field`
  Field field;
};

/// Zeros of a x^2 + 2b xy + c y^2 on the projective line. An anisotropic
/// form yields two points over K(sqrt(b^2 - ac)) when allow_extension is
/// set and no points otherwise. Throws ZeroForm.
IsotropicPoints isotropic_points(const SymForm2& f, bool allow_extension);

/// The form (tv, w, su), w = -(tu + sv)/2, whose isotropic points are
/// exactly P = (s : t) and Q = (u : v).
SymForm2 form_from_points(const ProjPoint& p, const ProjPoint& q);

/// Sylvester resultant of a x^2 + 2b xy + c y^2 and a' x^2 + 2b' xy + c' y^2.
/// Zero exactly when the two forms share a zero over some extension.
/// Throws ZeroForm.
Scalar resultant(const SymForm2& f, const SymForm2& g);

/// S^T f S. Throws SingularMatrix.
SymForm2 change_basis(const SymForm2& f, const Matrix2& s);

/// Generator h of the 1-dimensional subspace of B orthogonal to both f and
/// g under the determinant pairing; none when f and g are dependent.
std::optional<SymForm2> pairing_complement(const SymForm2& f, const SymForm2& g);

enum class Orthogonality { Orthogonal, NotOrthogonal };
std::string_view to_string(Orthogonality o);

/// Whether P and Q are orthogonal under f; independent of representatives.
/// Throws ZeroForm.
Orthogonality eval_bilinear(const SymForm2& f, const ProjPoint& p, const ProjPoint& q);

}  // namespace desargues
