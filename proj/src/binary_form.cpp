#include "desargues/binary_form.hpp"

#include "desargues/exact_linalg.hpp"

namespace desargues {

namespace {

Field common3(const Scalar& a, const Scalar& b, const Scalar& c) {
  return common_field(common_field(a.field(), b.field()), c.field());
}

void require_nonzero(const SymForm2& f, const char* op) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, std::string(op) + " needs a nonzero form");
}

}  // namespace

SymForm2::SymForm2(const Scalar& a, const Scalar& b, const Scalar& c)
    : SymForm2(common3(a, b, c), a, b, c) {}

SymForm2::SymForm2(const Field& field, const Scalar& a, const Scalar& b, const Scalar& c)
    : a_(embed(a, field)), b_(embed(b, field)), c_(embed(c, field)) {}

Scalar SymForm2::value(const ProjPoint& p, const ProjPoint& q) const {
  return a_ * p.x() * q.x() + b_ * (p.x() * q.y() + p.y() * q.x()) + c_ * p.y() * q.y();
}

SymForm2 SymForm2::lifted(const Field& target) const {
  return {embed(a_, target), embed(b_, target), embed(c_, target)};
}

std::string SymForm2::to_string() const {
  return "(" + a_.to_string() + ", " + b_.to_string() + ", " + c_.to_string() + ")";
}

SymForm2 operator+(const SymForm2& f, const SymForm2& g) {
  return {f.a() + g.a(), f.b() + g.b(), f.c() + g.c()};
}

SymForm2 operator*(const Scalar& k, const SymForm2& f) { return {k * f.a(), k * f.b(), k * f.c()}; }

bool proportional(const SymForm2& f, const SymForm2& g) {
  // all 2x2 minors of the 2x3 matrix [f; g] vanish
  return (f.a() * g.b() - f.b() * g.a()).is_zero() && (f.a() * g.c() - f.c() * g.a()).is_zero() &&
         (f.b() * g.c() - f.c() * g.b()).is_zero() && (f.is_zero() == g.is_zero());
}

Scalar det_pairing(const SymForm2& f, const SymForm2& g) {
  Scalar half = f.field().from_int(2).inv();
  return half * (f.a() * g.c() + f.c() * g.a()) - f.b() * g.b();
}

std::string_view to_string(FormClass c) {
  switch (c) {
    case FormClass::Zero: return "Zero";
    case FormClass::Anisotropic: return "Anisotropic";
    case FormClass::Hyperbolic: return "Hyperbolic";
    case FormClass::Degenerate: return "Degenerate";
  }
  return "?";
}

FormClass classify(const SymForm2& f) {
  if (f.is_zero()) return FormClass::Zero;
  Scalar det = f.det();
  if (det.is_zero()) return FormClass::Degenerate;
  return sqrt_in_field(-det) ? FormClass::Hyperbolic : FormClass::Anisotropic;
}

IsotropicPoints isotropic_points(const SymForm2& f, bool allow_extension) {
  require_nonzero(f, "isotropic_points");
  const Field& k = f.field();
  const Scalar& a = f.a();
  const Scalar& b = f.b();
  const Scalar& c = f.c();

  if (a.is_zero()) {
    // y (2b x + c y): infinity, plus (-c : 2b) unless the root is double.
    IsotropicPoints out{{ProjPoint::infinity(k)}, k};
    if (!b.is_zero()) out.points.emplace_back(-c, k.from_int(2) * b);
    return out;
  }

  Scalar disc = b * b - a * c;
  if (disc.is_zero()) return {{ProjPoint(-b, a)}, k};

  Field field = k;
  auto root = sqrt_in_field(disc);
  if (!root) {
    if (!allow_extension) return {{}, k};
    field = extend_with_sqrt(k, disc);
    root = sqrt_in_field(embed(disc, field));
  }
  Scalar na = embed(-b, field);
  return {{ProjPoint(na + *root, embed(a, field)), ProjPoint(na - *root, embed(a, field))}, field};
}

SymForm2 form_from_points(const ProjPoint& p, const ProjPoint& q) {
  const Scalar& s = p.x();
  const Scalar& t = p.y();
  const Scalar& u = q.x();
  const Scalar& v = q.y();
  Scalar half = s.field().from_int(2).inv();
  return {t * v, -half * (t * u + s * v), s * u};
}

Scalar resultant(const SymForm2& f, const SymForm2& g) {
  require_nonzero(f, "resultant");
  require_nonzero(g, "resultant");
  Field k = common_field(f.field(), g.field());
  Scalar zero = k.zero();
  Scalar two = k.from_int(2);
  Scalar fb = two * f.b();
  Scalar gb = two * g.b();
  Matrix sylvester{{f.a(), fb, f.c(), zero},
                   {zero, f.a(), fb, f.c()},
                   {g.a(), gb, g.c(), zero},
                   {zero, g.a(), gb, g.c()}};
  return determinant(std::move(sylvester));
}

SymForm2 change_basis(const SymForm2& f, const Matrix2& s) {
  if (s.det().is_zero()) throw Error(ErrorCode::SingularMatrix, "change of basis is singular");
  Matrix2 m{f.a(), f.b(), f.b(), f.c()};
  Matrix2 r = s.transpose() * m * s;
  return {r.m00, r.m01, r.m11};
}

std::optional<SymForm2> pairing_complement(const SymForm2& f, const SymForm2& g) {
  Field k = common_field(f.field(), g.field());
  Scalar half = k.from_int(2).inv();
  // <h, f> = (h_a f_c + h_c f_a) / 2 - h_b f_b, linear in (h_a, h_b, h_c)
  Matrix rows{{half * f.c(), -f.b(), half * f.a()}, {half * g.c(), -g.b(), half * g.a()}};
  auto basis = nullspace(rows, 3, k);
  if (basis.size() != 1) return std::nullopt;
  const Vector& h = basis.front();
  return SymForm2(h[0], h[1], h[2]);
}

std::string_view to_string(Orthogonality o) {
  return o == Orthogonality::Orthogonal ? "Orthogonal" : "NotOrthogonal";
}

Orthogonality eval_bilinear(const SymForm2& f, const ProjPoint& p, const ProjPoint& q) {
  require_nonzero(f, "eval_bilinear");
  return f.value(p, q).is_zero() ? Orthogonality::Orthogonal : Orthogonality::NotOrthogonal;
}

}  // namespace desargues
