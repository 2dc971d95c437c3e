#include "desargues/involution.hpp"

namespace desargues {

Involution::Involution(const Scalar& a, const Scalar& b, const Scalar& c) : a_(a), b_(b), c_(c) {
  Field f = common_field(common_field(a.field(), b.field()), c.field());
  a_ = embed(a, f);
  b_ = embed(b, f);
  c_ = embed(c, f);
  if (det().is_zero())
    throw Error(ErrorCode::SingularMatrix, "involution matrix " + to_string() + " is singular");
}

Involution Involution::from_matrix(const Matrix2& m) {
  if (!(m.m00 + m.m11).is_zero())
    throw Error(ErrorCode::DegenerateConfiguration, "matrix has nonzero trace");
  return {m.m00, m.m01, m.m10};
}

Involution Involution::lifted(const Field& target) const {
  return {embed(a_, target), embed(b_, target), embed(c_, target)};
}

std::string Involution::to_string() const {
  return "(" + a_.to_string() + " " + b_.to_string() + "; " + c_.to_string() + " " +
         (-a_).to_string() + ")";
}

std::string Involution::describe() const {
  // x -> (a x + b) / (c x - a)
  if (c_.is_zero()) {
    Scalar shift = -b_ / a_;
    return shift.is_zero() ? "x -> -x" : "x -> -x + " + shift.to_string();
  }
  if (a_.is_zero()) return "x -> " + (b_ / c_).to_string() + "/x";
  Scalar a = a_ / c_;
  Scalar b = b_ / c_;
  return "x -> (" + a.to_string() + "*x + " + b.to_string() + ")/(x - " + a.to_string() + ")";
}

bool operator==(const Involution& s, const Involution& t) {
  return (s.a() * t.b() - s.b() * t.a()).is_zero() && (s.a() * t.c() - s.c() * t.a()).is_zero() &&
         (s.b() * t.c() - s.c() * t.b()).is_zero();
}

ProjPoint apply(const Involution& inv, const ProjPoint& p) {
  return ProjPoint(inv.a() * p.x() + inv.b() * p.y(), inv.c() * p.x() - inv.a() * p.y());
}

SymForm2 desargues_form(const Involution& inv) { return {-inv.c(), inv.a(), inv.b()}; }

Involution involution_from_form(const SymForm2& f) {
  if (f.det().is_zero())
    throw Error(ErrorCode::DegenerateForm, "form " + f.to_string() + " is degenerate");
  return {f.b(), f.c(), -f.a()};
}

IsotropicPoints fixed_points(const Involution& inv, bool allow_extension) {
  return isotropic_points(desargues_form(inv), allow_extension);
}

Orthogonality pair_form_orthogonality(const Involution& inv, const ProjPoint& p) {
  SymForm2 g = form_from_points(p, apply(inv, p));
  return det_pairing(g, desargues_form(inv)).is_zero() ? Orthogonality::Orthogonal
                                                        : Orthogonality::NotOrthogonal;
}

Involution involution_from_two_pairs(const ProjPoint& p, const ProjPoint& p_image,
                                     const ProjPoint& q, const ProjPoint& q_image) {
  SymForm2 g1 = form_from_points(p, p_image);
  SymForm2 g2 = form_from_points(q, q_image);
  auto h = pairing_complement(g1, g2);
  if (!h)
    throw Error(ErrorCode::DependentPairs, "pairs {" + p.to_string() + ", " + p_image.to_string() +
                                               "} and {" + q.to_string() + ", " +
                                               q_image.to_string() + "} are the same constraint");
  if (h->det().is_zero())
    throw Error(ErrorCode::DegenerateComplement,
                "pairs {" + p.to_string() + ", " + p_image.to_string() + "} and {" +
                    q.to_string() + ", " + q_image.to_string() + "} share a point");
  return involution_from_form(*h);
}

}  // namespace desargues
