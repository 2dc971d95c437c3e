#include "doctest.h"

#include <algorithm>

#include "desargues/binary_form.hpp"
#include "desargues/exact_linalg.hpp"
#include "test_support.hpp"

using namespace desargues;
using namespace desargues::testing;

namespace {

SymForm2 qf(std::int64_t a, std::int64_t b, std::int64_t c) { return {q(a), q(b), q(c)}; }

SymForm2 ff(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c) {
  return {f.from_int(a), f.from_int(b), f.from_int(c)};
}

std::vector<SymForm2> all_forms(const Field& f) {
  std::vector<SymForm2> out;
  auto el = elements_of(f);
  for (const auto& a : el)
    for (const auto& b : el)
      for (const auto& c : el) out.emplace_back(a, b, c);
  return out;
}

SymForm2 random_form(const Field& f, Rng& rng) {
  return {random_scalar(f, rng), random_scalar(f, rng), random_scalar(f, rng)};
}

// Brute-force zeros of f on P^1 over a finite field given by its elements.
std::vector<ProjPoint> brute_zeros(const SymForm2& f, const std::vector<Scalar>& elements) {
  std::vector<ProjPoint> out;
  for (const auto& p : all_points(elements))
    if (f.lifted(p.field()).value(p, p).is_zero()) out.push_back(p);
  return out;
}

bool same_point_set(const std::vector<ProjPoint>& a, const std::vector<ProjPoint>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const ProjPoint& p) {
    return std::any_of(b.begin(), b.end(), [&](const ProjPoint& r) { return p == r; });
  });
}

}  // namespace

TEST_CASE("determinant pairing examples") {
  CHECK(det_pairing(qf(1, 0, 1), qf(1, 0, 1)) == q(1));
  CHECK(det_pairing(qf(1, 2, 3), qf(4, 5, 6)) == q(-1));
  CHECK(det_pairing(qf(2, 3, 5), qf(2, 3, 5)) == q(1));
  CHECK(error_code([] { det_pairing(qf(1, 0, 0), ff(Field::prime(5), 1, 0, 0)); }) ==
        ErrorCode::FieldMismatch);
}

TEST_CASE("<z, z> = det z exhaustively over GF(3), GF(5) and randomly over Q") {
  for (std::int64_t p : {3, 5}) {
    auto forms = all_forms(Field::prime(p));
    CHECK(forms.size() == static_cast<std::size_t>(p * p * p));
    for (const auto& z : forms) CHECK(det_pairing(z, z) == z.det());
  }
  Rng rng(1);
  for (int k = 0; k < 10000; ++k) {
    SymForm2 z = random_form(Field::rationals(), rng);
    REQUIRE(det_pairing(z, z) == z.det());
  }
}

TEST_CASE("pairing is symmetric and bilinear") {
  Rng rng(8);
  Field f = Field::prime(13);
  for (int k = 0; k < 500; ++k) {
    SymForm2 x = random_form(f, rng), y = random_form(f, rng), z = random_form(f, rng);
    Scalar s = random_scalar(f, rng);
    CHECK(det_pairing(x, y) == det_pairing(y, x));
    CHECK(det_pairing(s * x + y, z) == s * det_pairing(x, z) + det_pairing(y, z));
  }
}

TEST_CASE("Gram matrix of the pairing on the standard basis is regular") {
  std::vector<SymForm2> basis{qf(1, 0, 0), qf(0, 1, 0), qf(0, 0, 1)};
  Matrix gram;
  for (const auto& e : basis) {
    Vector row;
    for (const auto& g : basis) row.push_back(det_pairing(e, g));
    gram.push_back(row);
  }
  CHECK(gram[0][2] == q(1, 2));
  CHECK(gram[2][0] == q(1, 2));
  CHECK(gram[1][1] == q(-1));
  CHECK(gram[0][0] == q(0));
  CHECK(gram[2][2] == q(0));
  CHECK(gram[0][1] == q(0));
  CHECK(determinant(gram) == q(1, 4));
}

TEST_CASE("classify") {
  CHECK(classify(qf(1, 0, -1)) == FormClass::Hyperbolic);
  CHECK(classify(qf(1, 0, 1)) == FormClass::Anisotropic);
  Field qi = extend_with_sqrt(Field::rationals(), q(-1));
  CHECK(classify(qf(1, 0, 1).lifted(qi)) == FormClass::Hyperbolic);
  CHECK(classify(ff(Field::prime(3), 1, 1, 1)) == FormClass::Degenerate);
  CHECK(classify(qf(0, 0, 0)) == FormClass::Zero);
}

TEST_CASE("classify agrees with brute-force zero counting over GF(5)") {
  Field gf5 = Field::prime(5);
  auto el = elements_of(gf5);
  for (const auto& f : all_forms(gf5)) {
    if (f.is_zero()) continue;
    std::size_t zeros = brute_zeros(f, el).size();
    switch (classify(f)) {
      case FormClass::Anisotropic: CHECK(zeros == 0); break;
      case FormClass::Degenerate: CHECK(zeros == 1); break;
      case FormClass::Hyperbolic: CHECK(zeros == 2); break;
      case FormClass::Zero: FAIL("nonzero form classified Zero"); break;
    }
    CHECK(same_point_set(isotropic_points(f, false).points, brute_zeros(f, el)));
  }
}

TEST_CASE("isotropic points examples") {
  auto pts = isotropic_points(qf(1, 0, -1), false).points;
  CHECK(same_point_set(pts, {qpt(1), qpt(-1)}));

  pts = isotropic_points(qf(0, 1, 0), false).points;
  CHECK(same_point_set(pts, {qpt(0), inf()}));

  CHECK(isotropic_points(qf(1, 0, 1), false).points.empty());
  auto ext = isotropic_points(qf(1, 0, 1), true);
  REQUIRE(ext.points.size() == 2);
  CHECK(ext.field.depth() == 1);
  Scalar i = ext.field.from_parts(q(0), q(1));
  CHECK(same_point_set(ext.points, {pt(i), pt(-i)}));

  pts = isotropic_points(qf(1, 0, 0), false).points;
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == qpt(0));
  pts = isotropic_points(qf(0, 0, 3), false).points;
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].is_infinity());

  CHECK(error_code([] { isotropic_points(qf(0, 0, 0), true); }) == ErrorCode::ZeroForm);
}

TEST_CASE("form_from_points examples") {
  CHECK(form_from_points(inf(), qpt(0)) == SymForm2(q(0), q(-1, 2), q(0)));
  CHECK(form_from_points(qpt(0), qpt(0)) == qf(1, 0, 0));
  CHECK(form_from_points(qpt(1), qpt(-1)) == qf(1, 0, -1));
}

TEST_CASE("form_from_points inverts isotropic_points up to scalar") {
  Rng rng(21);
  for (const Field& f : {Field::rationals(), Field::prime(7), Field::prime(13)}) {
    for (int k = 0; k < 500; ++k) {
      SymForm2 g = random_form(f, rng);
      if (g.is_zero()) continue;
      auto iso = isotropic_points(g, true);
      REQUIRE_FALSE(iso.points.empty());
      const ProjPoint& p = iso.points.front();
      const ProjPoint& r = iso.points.back();
      SymForm2 back = form_from_points(p, r);
      CHECK(proportional(back, g.lifted(iso.field)));
      CHECK(back.value(p, p).is_zero());
      CHECK(back.value(r, r).is_zero());
    }
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(qf(1, 0, -1), qf(0, 1, 0)) == q(-4));
  CHECK(resultant(qf(1, 0, 0), qf(1, 0, 0)) == q(0));
  CHECK(resultant(qf(1, 0, 0), qf(0, 0, 1)) == q(1));
  CHECK(error_code([] { resultant(qf(0, 0, 0), qf(1, 0, 0)); }) == ErrorCode::ZeroForm);
}

TEST_CASE("resultant identity over GF(3) against a GF(9) shared-root oracle") {
  Field gf3 = Field::prime(3);
  Field gf9 = extend_with_sqrt(gf3, gf3.from_int(2));
  auto el9 = elements_of(gf9);
  auto forms = all_forms(gf3);
  Scalar four = gf3.from_int(4);
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    auto zeros_f = brute_zeros(f, el9);
    for (const auto& g : forms) {
      if (g.is_zero()) continue;
      Scalar res = resultant(f, g);
      Scalar pairing = det_pairing(f, g);
      CHECK(res == four * (pairing * pairing - f.det() * g.det()));
      // every binary quadratic over GF(3) splits over GF(9)
      bool shared = std::any_of(zeros_f.begin(), zeros_f.end(), [&](const ProjPoint& p) {
        return g.lifted(gf9).value(p, p).is_zero();
      });
      CHECK(res.is_zero() == shared);
    }
  }
}

TEST_CASE("change_basis") {
  Field k = Field::rationals();
  CHECK(change_basis(qf(1, 2, 3), Matrix2::identity(k)) == qf(1, 2, 3));
  Matrix2 swap{q(0), q(1), q(1), q(0)};
  CHECK(change_basis(qf(1, 0, -1), swap) == qf(-1, 0, 1));
  Matrix2 diag{q(2), q(0), q(0), q(1)};
  SymForm2 moved = change_basis(qf(1, 0, 1), diag);
  CHECK(det_pairing(moved, moved) == q(4));
  CHECK(det_pairing(moved, moved) == diag.det() * diag.det() * det_pairing(qf(1, 0, 1), qf(1, 0, 1)));
  Matrix2 singular{q(1), q(2), q(2), q(4)};
  CHECK(error_code([&] { change_basis(qf(1, 0, 1), singular); }) == ErrorCode::SingularMatrix);
}

TEST_CASE("pairing scales by det(S)^2 and classification is basis independent") {
  Rng rng(77);
  for (const Field& f : {Field::rationals(), Field::prime(11)}) {
    for (int k = 0; k < 500; ++k) {
      SymForm2 x = random_form(f, rng), y = random_form(f, rng);
      Matrix2 s = random_invertible(f, rng);
      Scalar d2 = s.det() * s.det();
      CHECK(det_pairing(change_basis(x, s), change_basis(y, s)) == d2 * det_pairing(x, y));
      CHECK(classify(change_basis(x, s)) == classify(x));
      Scalar lambda = random_nonzero(f, rng);
      CHECK(classify(lambda * x) == classify(x));
    }
  }
}

TEST_CASE("eval_bilinear") {
  Field qi = extend_with_sqrt(Field::rationals(), q(-1));
  Scalar i = qi.from_parts(q(0), q(1));
  CHECK(eval_bilinear(qf(1, 0, -1), pt(i), pt(-i)) == Orthogonality::Orthogonal);
  CHECK(eval_bilinear(qf(1, 0, 1), inf(), qpt(0)) == Orthogonality::Orthogonal);
  CHECK(eval_bilinear(qf(0, 1, 0), qpt(1), qpt(1)) == Orthogonality::NotOrthogonal);
  CHECK(qf(0, 1, 0).value(qpt(1), qpt(1)) == q(2));
  CHECK(error_code([] { eval_bilinear(qf(0, 0, 0), qpt(1), qpt(1)); }) == ErrorCode::ZeroForm);
}
