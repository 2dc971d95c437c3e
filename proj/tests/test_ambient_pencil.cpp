#include "doctest.h"

#include "desargues/ambient_pencil.hpp"
#include "test_support.hpp"

using namespace desargues;
using namespace desargues::testing;

namespace {

SymForm2 qf(std::int64_t a, std::int64_t b, std::int64_t c) { return {q(a), q(b), q(c)}; }
Involution qinv(std::int64_t a, std::int64_t b, std::int64_t c) { return {q(a), q(b), q(c)}; }

SymFormN diag(const Field& f, std::initializer_list<std::int64_t> d) {
  Matrix m(d.size(), Vector(d.size(), f.zero()));
  std::size_t i = 0;
  for (auto x : d) {
    m[i][i] = f.from_int(x);
    ++i;
  }
  return SymFormN(std::move(m));
}

Vector qvec(std::initializer_list<std::int64_t> xs) {
  Vector v;
  for (auto x : xs) v.push_back(q(x));
  return v;
}

SymFormN random_symmetric(const Field& f, std::size_t n, Rng& rng) {
  Matrix m(n, Vector(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = random_scalar(f, rng);
  return SymFormN(std::move(m));
}

std::optional<Pencil> random_pencil(const Field& f, std::size_t n, Rng& rng) {
  try {
    return Pencil(random_symmetric(f, n, rng), random_symmetric(f, n, rng));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<LineInPV> random_line(const Field& f, std::size_t n, Rng& rng) {
  Vector e1, e2;
  for (std::size_t i = 0; i < n; ++i) {
    e1.push_back(random_scalar(f, rng));
    e2.push_back(random_scalar(f, rng));
  }
  try {
    return LineInPV(e1, e2);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<SymForm2> all_forms(const Field& f) {
  std::vector<SymForm2> out;
  auto el = elements_of(f);
  for (const auto& a : el)
    for (const auto& b : el)
      for (const auto& c : el) out.emplace_back(a, b, c);
  return out;
}

}  // namespace

TEST_CASE("type invariants are validated") {
  Field k = Field::rationals();
  Matrix asym{{q(1), q(2)}, {q(3), q(1)}};
  CHECK(error_code([&] { SymFormN{asym}; }) == ErrorCode::NotSymmetric);
  try {
    SymFormN{asym};
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("[0][1] vs [1][0]") != std::string::npos);
  }
  CHECK(error_code([&] { Pencil(diag(k, {1, 1, -1}), diag(k, {2, 2, -2})); }) ==
        ErrorCode::ProportionalPencil);
  CHECK(error_code([&] { Pencil(diag(k, {1, 1, -1}), diag(k, {1, -1})); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(error_code([&] { LineInPV(qvec({1, 2, 3}), qvec({2, 4, 6})); }) == ErrorCode::DependentLine);
  CHECK(error_code([&] { LineInPV(qvec({1, 2, 3}), qvec({1, 2})); }) == ErrorCode::DimensionMismatch);
  LineInPV line(qvec({1, 0, 0}), qvec({0, 0, 1}));
  CHECK(error_code([&] { restrict(diag(k, {1, 1}), line); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("restriction to a line") {
  Field k = Field::rationals();
  LineInPV x_axis(qvec({1, 0, 0}), qvec({0, 0, 1}));
  CHECK(restrict(diag(k, {1, 1, -1}), x_axis) == qf(1, 0, -1));
  CHECK(restrict(diag(k, {1, 4, -4}), x_axis) == qf(1, 0, -4));

  // 2xy in P^3 contains the line x = z = 0
  Matrix m(4, Vector(4, q(0)));
  m[0][1] = m[1][0] = q(1);
  LineInPV ruling(qvec({0, 1, 0, 0}), qvec({0, 0, 0, 1}));
  CHECK(restrict(SymFormN(m), ruling).is_zero());
}

TEST_CASE("pencil members") {
  Field k = Field::rationals();
  Pencil p(diag(k, {1, 0, -1}), diag(k, {0, 1, -1}));
  CHECK(pencil_member(p, q(1), q(0)).entries() == p.r().entries());
  CHECK(pencil_member(p, q(1), q(1)).entries() == diag(k, {1, 1, -2}).entries());
  CHECK(error_code([&] { pencil_member(p, q(0), q(0)); }) == ErrorCode::ZeroCoefficients);

  Field gf7 = Field::prime(7);
  Rng rng(1);
  if (auto pencil = random_pencil(gf7, 3, rng)) {
    SymFormN member = pencil_member(*pencil, gf7.from_int(3), gf7.from_int(5));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(member(i, j) == gf7.from_int(3) * pencil->r()(i, j) + gf7.from_int(5) * pencil->s()(i, j));
  }
}

TEST_CASE("restricted Gram matrix") {
  auto g = restricted_gram(qf(1, 0, -1), qf(0, 1, 0));
  CHECK(g.ff == q(-1));
  CHECK(g.fg == q(0));
  CHECK(g.gg == q(-1));
  CHECK(g.det == q(1));

  g = restricted_gram(qf(0, 1, 0), qf(0, 0, 1));
  CHECK(g.ff == q(-1));
  CHECK(g.fg == q(0));
  CHECK(g.gg == q(0));
  CHECK(g.det == q(0));

  g = restricted_gram(qf(1, 0, -1), qf(1, 0, -4));
  CHECK(g.ff == q(-1));
  CHECK(g.fg == q(-5, 2));
  CHECK(g.gg == q(-4));
  CHECK(g.det == q(-9, 4));
}

TEST_CASE("diagnose examples") {
  CHECK(diagnose(qf(1, 0, -1), qf(0, 1, 0)).verdict == Verdict::Regular);

  Diagnosis common = diagnose(qf(0, 1, 0), qf(0, 0, 1));
  CHECK(common.verdict == Verdict::CommonZero);
  REQUIRE(common.point);
  CHECK(common.point->is_infinity());

  Diagnosis in_quadric = diagnose(qf(1, 0, -1), qf(2, 0, -2));
  CHECK(in_quadric.verdict == Verdict::LineInQuadric);
  REQUIRE(in_quadric.coefficients);
  CHECK(in_quadric.coefficients->first == q(2));
  CHECK(in_quadric.coefficients->second == q(-1));

  // f = x^2 - 2y^2 over Q and g = (x + sqrt2 y)^2 over Q(sqrt2) share the
  // zero -sqrt2, which is found in the extension splitting f.
  Field q2 = extend_with_sqrt(Field::rationals(), q(2));
  Scalar r2 = q2.from_parts(q(0), q(1));
  Diagnosis ext = diagnose(qf(1, 0, -2), SymForm2(q2.one(), r2, q2.from_int(2)));
  CHECK(ext.verdict == Verdict::CommonZero);
  REQUIRE(ext.point);
  CHECK(*ext.point == ProjPoint(-r2, q2.one()));
}

TEST_CASE("common zero of a full pencil in P^2") {
  // both conics pass through (1 : 0 : 0), which lies on the line z = 0
  Field k = Field::rationals();
  Matrix r(3, Vector(3, q(0)));
  r[0][1] = r[1][0] = q(1);  // 2xy
  Matrix s(3, Vector(3, q(0)));
  s[1][1] = q(1);  // y^2
  s[2][2] = q(-1);
  Pencil p{SymFormN(r), SymFormN(s)};
  LineInPV z0(qvec({1, 0, 0}), qvec({0, 1, 0}));
  Diagnosis d = diagnose(p, z0);
  CHECK(d.verdict == Verdict::CommonZero);
  CHECK(d.point->is_infinity());  // (1 : 0) on the line is the vector e1
}

TEST_CASE("induced involution: worked pencil and butterfly") {
  Involution w = induced_involution(qf(1, 0, -1), qf(0, 1, 0));
  CHECK(w == qinv(0, 1, -1));
  CHECK(w.describe() == "x -> -1/x");
  CHECK(apply(w, qpt(1)) == qpt(-1));
  CHECK(apply(w, qpt(0)).is_infinity());

  Field k = Field::rationals();
  Pencil butterfly(diag(k, {1, 1, -1}), diag(k, {1, 4, -4}));
  LineInPV x_axis(qvec({1, 0, 0}), qvec({0, 0, 1}));
  Involution sign = induced_involution(butterfly, x_axis);
  CHECK(sign == qinv(1, 0, 0));
  CHECK(apply(sign, qpt(2)) == qpt(-2));

  try {
    induced_involution(qf(0, 1, 0), qf(0, 0, 1));
    FAIL("expected NotRegular");
  } catch (const NotRegularError& e) {
    CHECK(e.code() == ErrorCode::NotRegular);
    CHECK(e.diagnosis().verdict == Verdict::CommonZero);
  }
}

TEST_CASE("classical four-point pencil on the line y = 2x") {
  Field k = Field::rationals();
  Pencil p(diag(k, {1, 0, -1}), diag(k, {0, 1, -1}));
  LineInPV line(qvec({1, 2, 0}), qvec({0, 0, 1}));
  CHECK(restrict(p.r(), line) == qf(1, 0, -1));
  CHECK(restrict(p.s(), line) == qf(4, 0, -1));
  Involution v = induced_involution(p, line);
  CHECK(v == qinv(1, 0, 0));

  MemberCheck circle = member_pair_check(p, q(1), q(1), line, v);
  CHECK(circle.verdict == MemberVerdict::NoIntersection);
  CHECK(circle.checked_over_extension);
  REQUIRE(circle.points.size() == 2);
  // roots +- sqrt(2/5): x^2 = 2/5 on the points
  for (const auto& pt : circle.points) CHECK(pt.x() * pt.x() == q(2, 5));
}

TEST_CASE("member pair checks") {
  Involution sign = qinv(1, 0, 0);
  CHECK(check_member(qf(1, 0, -1), sign, true).verdict == MemberVerdict::Swapped);
  MemberCheck tangent = check_member(qf(1, 0, 0), sign, true);
  CHECK(tangent.verdict == MemberVerdict::FixedTangent);
  CHECK(tangent.points.front() == qpt(0));

  MemberCheck virt = check_member(qf(1, 0, 1), sign, false);
  CHECK(virt.verdict == MemberVerdict::NoIntersection);
  CHECK(virt.points.empty());
  virt = check_member(qf(1, 0, 1), sign, true);
  CHECK(virt.checked_over_extension);
  CHECK(virt.points.size() == 2);

  // +-i are the fixed points of x -> -1/x, not a swapped pair
  Involution recip = qinv(0, 1, -1);
  CHECK(error_code([&] { check_member(qf(1, 0, 1), recip, true); }) == ErrorCode::ContractViolation);

  CHECK(error_code([&] { check_member(qf(1, 0, -4), recip, true); }) == ErrorCode::ContractViolation);
  CHECK(error_code([&] { check_member(qf(0, 0, 0), recip, true); }) == ErrorCode::ContractViolation);
}

TEST_CASE("member parameters") {
  auto gf7 = member_parameters(Field::prime(7), 0);
  CHECK(gf7.size() == 8);
  for (std::size_t i = 0; i < gf7.size(); ++i)
    for (std::size_t j = i + 1; j < gf7.size(); ++j)
      CHECK_FALSE((gf7[i].first * gf7[j].second - gf7[i].second * gf7[j].first).is_zero());
  auto rationals = member_parameters(Field::rationals(), 20);
  CHECK(rationals.size() == 20);
  for (std::size_t i = 0; i < rationals.size(); ++i)
    for (std::size_t j = i + 1; j < rationals.size(); ++j)
      CHECK_FALSE((rationals[i].first * rationals[j].second - rationals[i].second * rationals[j].first)
                      .is_zero());
}

TEST_CASE("Regular <=> Gram det != 0 <=> resultant != 0, exhaustively over GF(3) and GF(5)") {
  for (std::int64_t p : {3, 5}) {
    Field f = Field::prime(p);
    auto forms = all_forms(f);
    auto params = member_parameters(f, 0);
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : forms)
      for (const auto& s : forms) {
        Diagnosis d = diagnose(r, s);
        ++counts[static_cast<int>(d.verdict)];
        bool regular = d.verdict == Verdict::Regular;
        CHECK(regular == !restricted_gram(r, s).det.is_zero());
        if (!r.is_zero() && !s.is_zero()) CHECK(regular == !resultant(r, s).is_zero());
        if (d.verdict == Verdict::LineInQuadric) {
          auto [a, b] = *d.coefficients;
          CHECK_FALSE((a.is_zero() && b.is_zero()));
          CHECK((a * r + b * s).is_zero());
        } else if (d.verdict == Verdict::CommonZero) {
          for (const auto& [a, b] : params) {
            SymForm2 m = (a * r + b * s).lifted(d.point->field());
            CHECK(m.value(*d.point, *d.point).is_zero());
          }
        } else if (p == 3) {
          Involution v = induced_involution(r, s);
          for (const auto& [a, b] : params) CHECK_NOTHROW(check_member(a * r + b * s, v, true));
        }
      }
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
    CHECK(counts[2] > 0);
  }
}

TEST_CASE("random pencils in P^3 and P^4 satisfy the theorem") {
  Rng rng(123);
  for (auto [p, n] : {std::pair{7, 4}, std::pair{13, 5}}) {
    Field f = Field::prime(p);
    auto params = member_parameters(f, 0);
    for (int trial = 0; trial < 300; ++trial) {
      auto pencil = random_pencil(f, n, rng);
      auto line = random_line(f, n, rng);
      if (!pencil || !line) continue;
      Diagnosis d = diagnose(*pencil, *line);
      CHECK((d.verdict == Verdict::Regular) == !restricted_gram(*pencil, *line).det.is_zero());
      if (d.verdict != Verdict::Regular) continue;
      Involution v = induced_involution(*pencil, *line);
      for (const auto& [a, b] : params) CHECK_NOTHROW(member_pair_check(*pencil, a, b, *line, v));
    }
  }
}

TEST_CASE("regularity is stable under extension of scalars") {
  Rng rng(55);
  Field gf7 = Field::prime(7);
  Field gf49 = extend_with_sqrt(gf7, gf7.from_int(3));
  Field qi = extend_with_sqrt(Field::rationals(), q(-1));
  for (int k = 0; k < 500; ++k) {
    for (const auto& [base, ext] : {std::pair{gf7, gf49}, std::pair{Field::rationals(), qi}}) {
      SymForm2 r(random_scalar(base, rng), random_scalar(base, rng), random_scalar(base, rng));
      SymForm2 s(random_scalar(base, rng), random_scalar(base, rng), random_scalar(base, rng));
      Diagnosis low = diagnose(r, s);
      Diagnosis high = diagnose(r.lifted(ext), s.lifted(ext));
      CHECK((low.verdict == Verdict::Regular) == (high.verdict == Verdict::Regular));
      if (low.verdict == Verdict::Regular)
        CHECK(induced_involution(r, s).lifted(ext) == induced_involution(r.lifted(ext), s.lifted(ext)));
    }
  }
}

TEST_CASE("line basis and pencil spanning pair do not matter") {
  Rng rng(31);
  for (const Field& f : {Field::prime(7), Field::prime(13), Field::rationals()}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto pencil = random_pencil(f, 3, rng);
      auto line = random_line(f, 3, rng);
      if (!pencil || !line) continue;
      Matrix2 m = random_invertible(f, rng);
      LineInPV moved = line->rebased(m);
      Diagnosis d = diagnose(*pencil, *line);
      CHECK(diagnose(*pencil, moved).verdict == d.verdict);

      auto g = restricted_gram(*pencil, *line);
      auto g2 = restricted_gram(*pencil, moved);
      Scalar d2 = m.det() * m.det();
      CHECK(g2.ff == d2 * g.ff);
      CHECK(g2.fg == d2 * g.fg);

      Pencil respanned(pencil->r() + pencil->s(), pencil->r() + (-f.one()) * pencil->s());
      CHECK(diagnose(respanned, *line).verdict == d.verdict);

      if (d.verdict != Verdict::Regular) continue;
      Involution v = induced_involution(*pencil, *line);
      Involution conj = Involution::from_matrix(m.inverse() * v.matrix() * m);
      CHECK(induced_involution(*pencil, moved) == conj);
      CHECK(induced_involution(respanned, *line) == v);
    }
  }
}
