// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "desargues/sampling.hpp"
#include "desargues/theorem_harness.hpp"

using namespace desargues;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Scalar q(std::int64_t n, std::int64_t d = 1) {
  return Field::rationals().from_rational(Rational(n) / Rational(d));
}

std::vector<Scalar> elements_of(const Field& f) {
  std::vector<Scalar> out;
  if (f.kind() == FieldKind::PrimeField) {
    for (std::int64_t r = 0; r < f.characteristic(); ++r) out.push_back(f.from_int(r));
    return out;
  }
  for (const auto& u : elements_of(f.base()))
    for (const auto& v : elements_of(f.base())) out.push_back(f.from_parts(u, v));
  return out;
}

std::vector<ProjPoint> points_of(const Field& f) {
  std::vector<ProjPoint> out;
  for (const auto& x : elements_of(f)) out.push_back(ProjPoint::affine(x));
  out.push_back(ProjPoint::infinity(f));
  return out;
}

std::vector<SymForm2> forms_of(const Field& f) {
  std::vector<SymForm2> out;
  auto el = elements_of(f);
  for (const auto& a : el)
    for (const auto& b : el)
      for (const auto& c : el) out.emplace_back(a, b, c);
  return out;
}

// one representative per projective class of invertible trace-zero matrices
std::vector<Involution> involutions_of(const Field& f) {
  std::vector<Involution> out;
  auto el = elements_of(f);
  for (const auto& a : el)
    for (const auto& b : el)
      for (const auto& c : el) {
        const Scalar& lead = !a.is_zero() ? a : !b.is_zero() ? b : c;
        if (lead.is_one() && !(-a * a - b * c).is_zero()) out.emplace_back(a, b, c);
      }
  return out;
}

SymForm2 random_form(const Field& f, Rng& rng) {
  return {random_scalar(f, rng), random_scalar(f, rng), random_scalar(f, rng)};
}

// f(P, Q) = a x x' + b (x y' + y x') + c y y', written out directly
Scalar bilinear(const SymForm2& f, const ProjPoint& p, const ProjPoint& r) {
  return f.a() * p.x() * r.x() + f.b() * (p.x() * r.y() + p.y() * r.x()) + f.c() * p.y() * r.y();
}

SymFormN diag3(std::int64_t a, std::int64_t b, std::int64_t c) {
  Matrix m(3, Vector(3, q(0)));
  m[0][0] = q(a);
  m[1][1] = q(b);
  m[2][2] = q(c);
  return SymFormN(std::move(m));
}

bool pair_is(const std::vector<ProjPoint>& pts, const ProjPoint& u, const ProjPoint& v) {
  return pts.size() == 2 && ((pts[0] == u && pts[1] == v) || (pts[0] == v && pts[1] == u));
}

// ---------------------------------------------------------------------------

Outcome pairing_identity() {
  auto start = std::chrono::steady_clock::now();
  std::size_t cases = 0;
  auto check = [&](const SymForm2& z) {
    Matrix m{{z.a(), z.b()}, {z.b(), z.c()}};
    expect(det_pairing(z, z) == determinant(m), "<z,z> != det z for " + z.to_string());
    ++cases;
  };
  for (std::int64_t p : {3, 5})
    for (const auto& z : forms_of(Field::prime(p))) check(z);
  Rng rng(2024);
  for (int k = 0; k < 10000; ++k) check(random_form(Field::rationals(), rng));
  double t = seconds_since(start);
  expect(cases == 27 + 125 + 10000, "wrong case count");
  expect(t < 1.0, "took " + fmt_seconds(t));
  return {true, std::to_string(cases) + " forms, 0 violations, " + fmt_seconds(t)};
}

Outcome gram_regular() {
  Field k = Field::rationals();
  std::vector<SymForm2> basis{{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
  Matrix gram(3, Vector(3, q(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gram[i][j] = det_pairing(basis[i], basis[j]);
  Scalar d = determinant(gram);
  expect(d == q(1, 4), "Gram determinant " + d.to_string());
  // x^2 and y^2 are isotropic and pair to 1/2: a hyperbolic plane
  expect(gram[0][0].is_zero() && gram[2][2].is_zero() && gram[0][2] == q(1, 2), "no hyperbolic pair");
  // 2xy is orthogonal to it with norm -1
  expect(gram[0][1].is_zero() && gram[1][2].is_zero() && gram[1][1] == q(-1), "no <-1> line");
  return {true, "det = 1/4, H + <-1>"};
}

Outcome bijection_round_trip() {
  Field f = Field::prime(5);
  auto invs = involutions_of(f);
  expect(invs.size() == 25, "expected 25 involution classes, got " + std::to_string(invs.size()));
  std::vector<SymForm2> images;
  for (const auto& v : invs) {
    SymForm2 d = desargues_form(v);
    expect(involution_from_form(d) == v, "round trip failed for " + v.to_string());
    for (const auto& e : images) expect(!proportional(d, e), "two classes share a Desargues form");
    images.push_back(d);
  }
  std::size_t forms = 0;
  for (const auto& z : forms_of(f)) {
    if (z.det().is_zero()) continue;
    ++forms;
    expect(proportional(desargues_form(involution_from_form(z)), z), "reverse round trip failed for " + z.to_string());
  }
  return {true, "25 involution classes, " + std::to_string(forms) + " non-degenerate forms over GF(5)"};
}

Outcome pair_orthogonality() {
  auto start = std::chrono::steady_clock::now();
  std::vector<ScenarioReport> reports{verify_prop1(Field::prime(5), 0, 0),
                                      verify_prop1(Field::rationals(), 10000, 42),
                                      verify_prop1(Field::prime(13), 10000, 13)};
  std::uint64_t cases = 0;
  for (const auto& r : reports) {
    expect(r.pass, r.scenario + " over " + r.field + " failed");
    cases += r.stat("cases");
  }
  // direct evaluation of the Desargues form on each pair, exhaustively
  Field gf5 = Field::prime(5);
  for (const auto& v : involutions_of(gf5))
    for (const auto& p : points_of(gf5))
      expect(bilinear(desargues_form(v), p, apply(v, p)).is_zero(), "Desargues form nonzero on a pair");
  double t = seconds_since(start);
  expect(t < 10.0, "took " + fmt_seconds(t));
  return {true, std::to_string(cases) + " cases, 0 violations, " + fmt_seconds(t)};
}

Outcome main_theorem_fuzz() {
  auto start = std::chrono::steady_clock::now();
  struct Run {
    std::int64_t p;
    std::size_t dim, trials;
    std::uint64_t seed;
  };
  std::uint64_t verdicts[3] = {0, 0, 0};
  std::ostringstream detail;
  for (const Run& run : {Run{7, 2, 10000, 1}, Run{3, 3, 10000, 2}, Run{13, 4, 1000, 3}}) {
    ScenarioReport r = fuzz_campaign(Field::prime(run.p), run.dim, run.trials, run.seed);
    const std::string name = "GF(" + std::to_string(run.p) + ") P^" + std::to_string(run.dim);
    expect(r.stat("failing_trials") == 0, name + ": " + std::to_string(r.stat("failing_trials")) + " failing trials");
    expect(r.pass, name + " report failed");
    expect(r.stat("trials") == run.trials, name + ": wrong trial count");
    expect(r.stat("criteria_agree") == run.trials, name + ": regularity criteria disagree");
    expect(r.stat("Regular") + r.stat("LineInQuadric") + r.stat("CommonZero") == run.trials,
           name + ": verdicts do not cover every trial");
    verdicts[0] += r.stat("Regular");
    verdicts[1] += r.stat("LineInQuadric");
    verdicts[2] += r.stat("CommonZero");
    detail << name << " " << r.stat("Regular") << "/" << r.stat("LineInQuadric") << "/" << r.stat("CommonZero")
           << "; ";
  }
  for (auto v : verdicts) expect(v > 0, "a diagnose verdict was never observed");
  double t = seconds_since(start);
  expect(t < 60.0, "took " + fmt_seconds(t));
  detail << "Regular/LineInQuadric/CommonZero, 0 failures, " << fmt_seconds(t);
  return {true, detail.str()};
}

Outcome worked_instance() {
  SymForm2 f(q(1), q(0), q(-1)), g(q(0), q(1), q(0));
  Involution v = induced_involution(f, g);
  expect(v == Involution(q(0), q(1), q(-1)), "involution " + v.to_string());
  expect(v.describe() == "x -> -1/x", "map " + v.describe());
  auto fp = fixed_points(v, true);
  Field qi = Field::extension(Field::rationals(), q(-1));
  expect(fp.field == qi, "fixed points over " + fp.field.to_string());
  Scalar i = qi.from_parts(q(0), q(1));
  expect(pair_is(fp.points, ProjPoint::affine(i), ProjPoint::affine(-i)), "fixed points are not +-sqrt(-1)");
  expect(bilinear(f.lifted(qi), fp.points[0], fp.points[1]).is_zero(), "M, N not orthogonal under x^2 - y^2");
  expect(bilinear(g.lifted(qi), fp.points[0], fp.points[1]).is_zero(), "M, N not orthogonal under 2xy");
  return {true, "x -> -1/x, fixed points +-sqrt(-1) orthogonal under both forms"};
}

Outcome butterfly() {
  Pencil pencil(diag3(1, 1, -1), diag3(1, 4, -4));
  AffineConfig cfg{{q(0), q(0)}, {q(1), q(0)}, {q(0), q(0)}, pencil, {}, 24};
  ScenarioReport r = verify_butterfly(cfg);
  expect(r.pass, "butterfly report failed");
  LineInPV line = butterfly_line(cfg);
  expect(induced_involution(pencil, line) == Involution(q(1), q(0), q(0)), "involution is not x -> -x");
  std::size_t members = 0;
  for (const auto& c : r.checks)
    if (c.name.find("falls in exactly one branch") != std::string::npos) {
      expect(c.pass, c.name);
      ++members;
    }
  expect(members == 24, "classified " + std::to_string(members) + " members");
  ProjPoint m = ProjPoint::affine(q(0)), n = ProjPoint::infinity(Field::rationals());
  for (std::int64_t s : {1, 2}) {
    CrossRatio cr = cross_ratio(ProjPoint::affine(q(s)), ProjPoint::affine(q(-s)), m, n);
    // with N at infinity the cross ratio is (s - 0) / (-s - 0)
    expect(!cr.is_infinite() && cr.value() == q(s) / q(-s) && cr.value() == q(-1),
           "cross ratio (" + std::to_string(s) + ", -" + std::to_string(s) + "; 0, inf) = " + cr.to_string());
  }
  return {true, "x -> -x, 24 members each in one branch, harmonic checks -1"};
}

Outcome classical() {
  ClassicalScenario s = default_classical_scenario(Field::rationals());
  LineInPV line = default_classical_line(Field::rationals());
  ScenarioReport r = verify_classical(s, line);
  expect(r.pass, "classical scenario report failed");
  Involution v = induced_involution(s.pencil, line);
  expect(v == Involution(q(1), q(0), q(0)), "involution " + v.describe());
  auto r_pair = member_pair_check(s.pencil, q(1), q(0), line, v);
  expect(pair_is(r_pair.points, ProjPoint::affine(q(1)), ProjPoint::affine(q(-1))), "R pair is not +-1");
  auto s_pair = member_pair_check(s.pencil, q(0), q(1), line, v);
  expect(pair_is(s_pair.points, ProjPoint::affine(q(1, 2)), ProjPoint::affine(q(-1, 2))), "S pair is not +-1/2");
  auto circle = member_pair_check(s.pencil, q(1), q(1), line, v);
  expect(circle.checked_over_extension && circle.points.size() == 2, "circle pair not checked over the extension");
  for (const auto& p : circle.points) expect(p.x() * p.x() == embed(q(2, 5), circle.field), "circle point off x^2 = 2/5");
  expect(circle.points[0].x() == -circle.points[1].x(), "circle pair not symmetric");
  return {true, "x -> -x; +-1, +-1/2 and +-sqrt(2/5) swapped"};
}

Outcome resultant_identity() {
  Field gf3 = Field::prime(3);
  std::size_t pairs = 0;
  auto forms = forms_of(gf3);
  for (const auto& f : forms)
    for (const auto& g : forms) {
      if (f.is_zero() || g.is_zero()) continue;
      Scalar lhs = resultant(f, g);
      Scalar rhs = gf3.from_int(4) * (det_pairing(f, g) * det_pairing(f, g) - f.det() * g.det());
      expect(lhs == rhs, "identity fails for " + f.to_string() + ", " + g.to_string());
      ++pairs;
    }
  // every binary quadratic over GF(3) splits over GF(9)
  Field gf9 = Field::extension(gf3, gf3.from_int(2));
  auto pts9 = points_of(gf9);
  std::size_t shared = 0;
  for (const auto& f : forms)
    for (const auto& g : forms) {
      if (f.is_zero() || g.is_zero()) continue;
      SymForm2 f9 = f.lifted(gf9), g9 = g.lifted(gf9);
      bool common = false;
      for (const auto& p : pts9) common = common || (bilinear(f9, p, p).is_zero() && bilinear(g9, p, p).is_zero());
      expect(common == resultant(f, g).is_zero(), "shared-root oracle disagrees on " + f.to_string() + ", " + g.to_string());
      shared += common ? 1 : 0;
    }
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(shared) + " with a shared root over GF(9)"};
}

Outcome basis_independence() {
  std::size_t instances = 0, regular = 0;
  Rng rng(10);
  for (const Field& f : {Field::prime(13), Field::rationals()}) {
    while (instances < (f.kind() == FieldKind::Rationals ? 1000u : 500u)) {
      auto sym = [&] {
        Matrix m(3, Vector(3, f.zero()));
        for (int i = 0; i < 3; ++i)
          for (int j = i; j < 3; ++j) m[i][j] = m[j][i] = random_scalar(f, rng);
        return SymFormN(std::move(m));
      };
      auto vec = [&] { return Vector{random_scalar(f, rng), random_scalar(f, rng), random_scalar(f, rng)}; };
      Matrix2 s{random_scalar(f, rng), random_scalar(f, rng), random_scalar(f, rng), random_scalar(f, rng)};
      std::optional<Pencil> pencil;
      std::optional<LineInPV> line;
      try {
        pencil.emplace(sym(), sym());
        line.emplace(vec(), vec());
      } catch (const Error&) {
        continue;  // proportional pencil or dependent line: draw again
      }
      if (s.det().is_zero()) continue;
      const Pencil& p = *pencil;
      LineInPV moved = line->rebased(s);
      ++instances;
      Diagnosis d0 = diagnose(p, *line), d1 = diagnose(p, moved);
      expect(d0.verdict == d1.verdict, "verdict changed under a change of basis");
      RestrictedGram g0 = restricted_gram(p, *line), g1 = restricted_gram(p, moved);
      Scalar k = s.det() * s.det();
      expect(g1.ff == k * g0.ff && g1.fg == k * g0.fg && g1.gg == k * g0.gg,
             "pairing norms do not scale by det(S)^2");
      if (d0.verdict != Verdict::Regular) continue;
      ++regular;
      Involution t = induced_involution(p, *line);
      Involution conj = Involution::from_matrix(s.inverse() * t.matrix() * s);
      expect(induced_involution(p, moved) == conj, "involution not conjugated by S");
    }
  }
  return {true, std::to_string(instances) + " instances (" + std::to_string(regular) + " regular)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pairing identity <z,z> = det z", pairing_identity},
      {"determinant pairing is regular", gram_regular},
      {"Desargues correspondence round trip over GF(5)", bijection_round_trip},
      {"conjugate pairs orthogonal to the Desargues form", pair_orthogonality},
      {"main theorem fuzz campaigns", main_theorem_fuzz},
      {"worked pencil x^2 - y^2, 2xy", worked_instance},
      {"butterfly: circle and ellipse", butterfly},
      {"classical four-point pencil", classical},
      {"resultant identity and shared-root oracle", resultant_identity},
      {"basis independence", basis_independence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
