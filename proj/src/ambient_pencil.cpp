#include "desargues/ambient_pencil.hpp"

#include <algorithm>
#include <numeric>

namespace desargues {

namespace {

bool dependent(const SymForm2& f, const SymForm2& g) {
  return (f.a() * g.b() - f.b() * g.a()).is_zero() && (f.a() * g.c() - f.c() * g.a()).is_zero() &&
         (f.b() * g.c() - f.c() * g.b()).is_zero();
}

const Field& prime_subfield(const Field& f) {
  return f.kind() == FieldKind::QuadExt ? prime_subfield(f.base()) : f;
}

std::string point_list(const std::vector<ProjPoint>& pts) {
  std::string out = "{";
  for (std::size_t k = 0; k < pts.size(); ++k) out += (k ? ", " : "") + pts[k].to_string();
  return out + "}";
}

}  // namespace

// ---------------------------------------------------------------------------

SymFormN::SymFormN(Matrix entries) : m_(std::move(entries)), field_(Field::rationals()) {
  const std::size_t n = m_.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  for (const auto& row : m_)
    if (row.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "matrix is not " + std::to_string(n) + "x" +
                                                    std::to_string(n));
  field_ = m_[0][0].field();
  for (const auto& row : m_)
    for (const auto& x : row) field_ = common_field(field_, x.field());
  for (auto& row : m_)
    for (auto& x : row) x = embed(x, field_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(m_[i][j] == m_[j][i]))
        throw Error(ErrorCode::NotSymmetric, "not symmetric at [" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "] vs [" + std::to_string(j) +
                                                 "][" + std::to_string(i) + "]");
}

Scalar SymFormN::value(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(u.size()) + "/" +
                                                  std::to_string(v.size()) + " vs form dimension " +
                                                  std::to_string(dim()));
  Scalar total = field_.zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    Scalar row = field_.zero();
    for (std::size_t j = 0; j < dim(); ++j)
      if (!v[j].is_zero()) row += m_[i][j] * v[j];
    total += u[i] * row;
  }
  return total;
}

bool SymFormN::is_zero() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

SymFormN operator+(const SymFormN& f, const SymFormN& g) {
  if (f.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "forms of different dimension");
  Matrix m = f.entries();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) m[i][j] += g(i, j);
  return SymFormN(std::move(m));
}

SymFormN operator*(const Scalar& k, const SymFormN& f) {
  Matrix m = f.entries();
  for (auto& row : m)
    for (auto& x : row) x = k * x;
  return SymFormN(std::move(m));
}

Pencil::Pencil(SymFormN r, SymFormN s) : r_(std::move(r)), s_(std::move(s)) {
  if (r_.dim() != s_.dim())
    throw Error(ErrorCode::DimensionMismatch, "R is " + std::to_string(r_.dim()) + "-dimensional, S is " +
                                                  std::to_string(s_.dim()) + "-dimensional");
  // proportional (or one of them zero) iff every 2x2 minor of the pair of
  // flattened matrices vanishes
  const std::size_t n = dim();
  std::vector<const Scalar*> rs, ss;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      rs.push_back(&r_(i, j));
      ss.push_back(&s_(i, j));
    }
  bool independent = false;
  for (std::size_t k = 0; k < rs.size() && !independent; ++k)
    for (std::size_t l = k + 1; l < rs.size() && !independent; ++l)
      if (!(*rs[k] * *ss[l] - *rs[l] * *ss[k]).is_zero()) independent = true;
  if (!independent)
    throw Error(ErrorCode::ProportionalPencil, "R and S do not span a pencil");
}

LineInPV::LineInPV(Vector e1, Vector e2) : e1_(std::move(e1)), e2_(std::move(e2)) {
  if (e1_.empty() || e1_.size() != e2_.size())
    throw Error(ErrorCode::DimensionMismatch, "line vectors have lengths " +
                                                  std::to_string(e1_.size()) + " and " +
                                                  std::to_string(e2_.size()));
  for (std::size_t i = 0; i < e1_.size(); ++i)
    for (std::size_t j = i + 1; j < e1_.size(); ++j)
      if (!(e1_[i] * e2_[j] - e1_[j] * e2_[i]).is_zero()) return;
  throw Error(ErrorCode::DependentLine, "line vectors dependent");
}

Vector LineInPV::vector_at(const ProjPoint& p) const {
  Vector v;
  v.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) v.push_back(p.x() * e1_[i] + p.y() * e2_[i]);
  return v;
}

LineInPV LineInPV::rebased(const Matrix2& m) const {
  if (m.det().is_zero()) throw Error(ErrorCode::SingularMatrix, "basis change is singular");
  Vector f1, f2;
  for (std::size_t i = 0; i < dim(); ++i) {
    f1.push_back(m.m00 * e1_[i] + m.m10 * e2_[i]);
    f2.push_back(m.m01 * e1_[i] + m.m11 * e2_[i]);
  }
  return {std::move(f1), std::move(f2)};
}

SymForm2 restrict(const SymFormN& q, const LineInPV& line) {
  if (q.dim() != line.dim())
    throw Error(ErrorCode::DimensionMismatch, "form dimension " + std::to_string(q.dim()) +
                                                  " vs line in dimension " + std::to_string(line.dim()));
  return {q.value(line.e1(), line.e1()), q.value(line.e1(), line.e2()),
          q.value(line.e2(), line.e2())};
}

SymFormN pencil_member(const Pencil& p, const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero())
    throw Error(ErrorCode::ZeroCoefficients, "pencil member (0 : 0)");
  return a * p.r() + b * p.s();
}

RestrictedGram restricted_gram(const SymForm2& f, const SymForm2& g) {
  Scalar ff = det_pairing(f, f);
  Scalar fg = det_pairing(f, g);
  Scalar gg = det_pairing(g, g);
  Scalar det = ff * gg - fg * fg;
  return {ff, fg, gg, det};
}

RestrictedGram restricted_gram(const Pencil& p, const LineInPV& line) {
  return restricted_gram(restrict(p.r(), line), restrict(p.s(), line));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Regular: return "Regular";
    case Verdict::LineInQuadric: return "LineInQuadric";
    case Verdict::CommonZero: return "CommonZero";
  }
  return "?";
}

Diagnosis diagnose(const SymForm2& f, const SymForm2& g) {
  Field k = common_field(f.field(), g.field());
  if (dependent(f, g)) {
    // a f + b g = 0 with (a, b) = (g_i, -f_i) at the first nonzero entry of g
    Diagnosis d{Verdict::LineInQuadric, std::nullopt, std::nullopt};
    if (g.is_zero()) {
      d.coefficients.emplace(k.zero(), k.one());
    } else {
      const Scalar& gi = !g.a().is_zero() ? g.a() : !g.b().is_zero() ? g.b() : g.c();
      const Scalar& fi = !g.a().is_zero() ? f.a() : !g.b().is_zero() ? f.b() : f.c();
      d.coefficients.emplace(embed(gi, k), embed(-fi, k));
    }
    return d;
  }
  if (!resultant(f, g).is_zero()) return {};

  // The zeros of f lie in K or K(sqrt disc f); a shared zero is one of them.
  auto zeros = isotropic_points(f, true);
  SymForm2 g_ext = g.lifted(common_field(zeros.field, g.field()));
  for (const auto& p : zeros.points)
    if (g_ext.value(p, p).is_zero()) return {Verdict::CommonZero, std::nullopt, p};
  throw Error(ErrorCode::ContractViolation,
              "resultant vanishes but no shared zero among " + point_list(zeros.points));
}

Diagnosis diagnose(const Pencil& p, const LineInPV& line) {
  return diagnose(restrict(p.r(), line), restrict(p.s(), line));
}

NotRegularError::NotRegularError(Diagnosis d)
    : Error(ErrorCode::NotRegular,
            "restricted pencil is not regular (" + std::string(to_string(d.verdict)) + ")"),
      diagnosis_(std::move(d)) {}

Involution induced_involution(const SymForm2& f, const SymForm2& g) {
  Diagnosis d = diagnose(f, g);
  if (d.verdict != Verdict::Regular) throw NotRegularError(std::move(d));
  auto h = pairing_complement(f, g);
  if (!h || h->det().is_zero())
    throw Error(ErrorCode::ContractViolation, "regular pencil with degenerate complement");
  return involution_from_form(*h);
}

Involution induced_involution(const Pencil& p, const LineInPV& line) {
  return induced_involution(restrict(p.r(), line), restrict(p.s(), line));
}

std::string_view to_string(MemberVerdict v) {
  switch (v) {
    case MemberVerdict::Swapped: return "Swapped";
    case MemberVerdict::FixedTangent: return "FixedTangent";
    case MemberVerdict::NoIntersection: return "NoIntersection";
  }
  return "?";
}

MemberCheck check_member(const SymForm2& member, const Involution& inv, bool check_extension) {
  if (member.is_zero())
    throw Error(ErrorCode::ContractViolation, "member restriction is zero: the line lies on it");
  auto zeros = isotropic_points(member, false);
  MemberCheck out{MemberVerdict::NoIntersection, zeros.points, zeros.field, false};

  auto swapped = [&](const std::vector<ProjPoint>& pts, const Field& field) {
    Involution lifted = inv.lifted(common_field(field, inv.field()));
    return apply(lifted, pts[0]) == pts[1] && apply(lifted, pts[1]) == pts[0];
  };

  switch (zeros.points.size()) {
    case 2:
      if (!swapped(zeros.points, zeros.field))
        throw Error(ErrorCode::ContractViolation, "member " + member.to_string() + " meets the line in " +
                                                      point_list(zeros.points) + ", not swapped by " +
                                                      inv.describe());
      out.verdict = MemberVerdict::Swapped;
      break;
    case 1: {
      Involution lifted = inv.lifted(common_field(zeros.field, inv.field()));
      if (!(apply(lifted, zeros.points[0]) == zeros.points[0]))
        throw Error(ErrorCode::ContractViolation, "tangent point " + zeros.points[0].to_string() +
                                                      " of " + member.to_string() +
                                                      " is not fixed by " + inv.describe());
      out.verdict = MemberVerdict::FixedTangent;
      break;
    }
    default:
      if (check_extension) {
        auto ext = isotropic_points(member, true);
        if (ext.points.size() != 2 || !swapped(ext.points, ext.field))
          throw Error(ErrorCode::ContractViolation, "virtual pair " + point_list(ext.points) + " of " +
                                                        member.to_string() + " not swapped by " +
                                                        inv.describe());
        out.points = ext.points;
        out.field = ext.field;
        out.checked_over_extension = true;
      }
      break;
  }
  return out;
}

MemberCheck member_pair_check(const Pencil& p, const Scalar& a, const Scalar& b,
                              const LineInPV& line, const Involution& inv, bool check_extension) {
  return check_member(restrict(pencil_member(p, a, b), line), inv, check_extension);
}

std::vector<std::pair<Scalar, Scalar>> member_parameters(const Field& field, std::size_t count) {
  const Field& prime = prime_subfield(field);
  std::vector<std::pair<Scalar, Scalar>> out;
  auto push = [&](const Scalar& a, const Scalar& b) { out.emplace_back(embed(a, field), embed(b, field)); };

  if (prime.kind() == FieldKind::PrimeField) {
    const std::int64_t p = prime.characteristic();
    const std::size_t all = static_cast<std::size_t>(p) + 1;
    if (count == 0 || count > all) count = all;
    push(prime.one(), prime.zero());
    if (count > 1) push(prime.zero(), prime.one());
    for (std::int64_t t = 1; out.size() < count; ++t) push(prime.one(), prime.from_int(t));
    return out;
  }

  if (count == 0) count = 12;
  push(prime.one(), prime.zero());
  if (count > 1) push(prime.zero(), prime.one());
  // t = +-n/d in lowest terms, ordered by height max(n, d)
  for (std::int64_t h = 1; out.size() < count; ++h)
    for (std::int64_t n = 1; n <= h; ++n)
      for (std::int64_t d = 1; d <= h; ++d) {
        if (std::max(n, d) != h || std::gcd(n, d) != 1) continue;
        for (std::int64_t sign : {1, -1})
          if (out.size() < count) push(prime.one(), prime.from_rational(Rational(sign * n) / Rational(d)));
      }
  return out;
}

}  // namespace desargues
