#pragma once

// Involutions of the projective line as invertible trace-zero matrices
// (a b; c -a) up to scalars, and their correspondence with non-degenerate
// binary forms.

#include <string>

#include "desargues/binary_form.hpp"

namespace desargues {

class Involution {
 public:
  /// Throws SingularMatrix when -a^2 - bc = 0.
  Involution(const Scalar& a, const Scalar& b, const Scalar& c);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Field& field() const { return a_.field(); }

  Scalar det() const { return -a_ * a_ - b_ * c_; }
  Matrix2 matrix() const { return {a_, b_, c_, -a_}; }

  /// Any invertible trace-zero matrix. Throws SingularMatrix, or
  /// DegenerateConfiguration when the trace is nonzero.
  static Involution from_matrix(const Matrix2& m);

  Involution lifted(const Field& target) const;

  /// Human-readable Moebius form, e.g. "x -> -1/x".
  std::string describe() const;
  std::string to_string() const;

 private:
  Scalar a_, b_, c_;
};

/// Projective equality: the triples are proportional.
bool operator==(const Involution& s, const Involution& t);

/// (x : y) -> (ax + by : cx - ay).
ProjPoint apply(const Involution& inv, const ProjPoint& p);

/// The form (-c, a, b); its determinant equals det(inv).
SymForm2 desargues_form(const Involution& inv);

/// The involution (b c; -a -b) of a non-degenerate f. Throws DegenerateForm.
Involution involution_from_form(const SymForm2& f);

/// Fixed points: the isotropic points of the Desargues form. Never exactly
/// one; with allow_extension always two.
IsotropicPoints fixed_points(const Involution& inv, bool allow_extension);

/// Checks that the form vanishing on {P, inv(P)} is orthogonal to the
/// Desargues form of inv.
Orthogonality pair_form_orthogonality(const Involution& inv, const ProjPoint& p);

/// The involution swapping P <-> P' and Q <-> Q'. A pair with P = P' is read
/// as the constraint that P is fixed. Throws DependentPairs when the two
/// pair forms are proportional and DegenerateComplement when the pairs share
/// a point, so that no involution exists.
Involution involution_from_two_pairs(const ProjPoint& p, const ProjPoint& p_image,
                                     const ProjPoint& q, const ProjPoint& q_image);

}  // namespace desargues
