#include "desargues/theorem_harness.hpp"

#include <algorithm>

#include "desargues/sampling.hpp"

namespace desargues {

namespace {

std::string points_text(const std::vector<ProjPoint>& pts) {
  std::string out = "[";
  for (std::size_t k = 0; k < pts.size(); ++k) out += (k ? ", " : "") + pts[k].to_string();
  return out + "]";
}

std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + ")";
}

std::string matrix_text(const SymFormN& q) {
  std::string out = "[";
  for (std::size_t i = 0; i < q.dim(); ++i) out += (i ? ", " : "") + vector_text(q.entries()[i]);
  return out + "]";
}

std::string param_text(const std::pair<Scalar, Scalar>& ab) {
  return "(" + ab.first.to_string() + " : " + ab.second.to_string() + ")";
}

Check failed(std::string name, const Error& e, Witness w = {}) {
  w.emplace_back("error", e.what());
  return {std::move(name), false, std::move(w)};
}

/// Resultant with the zero form treated as sharing every zero.
Scalar resultant_or_zero(const SymForm2& f, const SymForm2& g) {
  if (f.is_zero() || g.is_zero()) return common_field(f.field(), g.field()).zero();
  return resultant(f, g);
}

Matrix random_symmetric(const Field& f, std::size_t n, Rng& rng) {
  Matrix m(n, Vector(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = random_scalar(f, rng);
  return m;
}

Vector random_vector(const Field& f, std::size_t n, Rng& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool parallel(const Vector& u, const Vector& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
  return true;
}

Vector cross(const Vector& u, const Vector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Vector normalized(Vector v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (lead == v.end()) return v;
  Scalar k = lead->inv();
  for (auto& x : v) x = k * x;
  return v;
}

Scalar det3(const Vector& a, const Vector& b, const Vector& c) {
  Vector bc = cross(b, c);
  return a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2];
}

/// (u v^T + v u^T) / 2: the conic made of the lines u = 0 and v = 0.
SymFormN line_pair(const Vector& u, const Vector& v) {
  Field f = common_field(u[0].field(), v[0].field());
  Scalar half = f.from_int(2).inv();
  Matrix m(3, Vector(3, f.zero()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = half * (u[i] * v[j] + v[i] * u[j]);
  return SymFormN(std::move(m));
}

// Members whose restrictions all vanish at the common zero z meet the line
// in pairs {z, x}; two such pairs cannot both be conjugate under one
// involution, which shows up as a degenerate pairing complement, or failing
// that, as an involution that misses a third member.
Check only_if_common_zero(const SymForm2& f, const SymForm2& g, const ProjPoint& z,
                          const std::vector<std::pair<Scalar, Scalar>>& params) {
  const Field& field = z.field();
  std::vector<SymForm2> members;
  std::vector<ProjPoint> partners;
  for (const auto& [a, b] : params) {
    SymForm2 h = (embed(a, field) * f.lifted(field)) + (embed(b, field) * g.lifted(field));
    auto zeros = isotropic_points(h, true);
    ProjPoint zl = z.lifted(zeros.field);
    ProjPoint other = zl;
    for (const auto& x : zeros.points)
      if (!(x == zl)) other = x;
    members.push_back(h);
    partners.push_back(other);
  }
  const std::string name = "no involution swaps the pairs through the common zero";
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Field pf = common_field(partners[i].field(), partners[j].field());
      ProjPoint zi = z.lifted(pf);
      Witness w{{"common_zero", z.to_string()},
                {"member_1", members[i].to_string()},
                {"pair_1", points_text({zi, partners[i].lifted(pf)})},
                {"member_2", members[j].to_string()},
                {"pair_2", points_text({zi, partners[j].lifted(pf)})}};
      try {
        Involution inv = involution_from_two_pairs(zi, partners[i].lifted(pf), zi, partners[j].lifted(pf));
        // an involution exists for these two; a third member must defeat it
        for (std::size_t k = 0; k < members.size(); ++k) {
          if (k == i || k == j) continue;
          try {
            check_member(members[k], inv, true);
          } catch (const Error&) {
            w.emplace_back("involution", inv.describe());
            w.emplace_back("defeated_by", members[k].to_string());
            return {name, true, std::move(w)};
          }
        }
        w.emplace_back("involution", inv.describe());
        w.emplace_back("expected", "no involution swapping every member pair");
        return {name, false, std::move(w)};
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DependentPairs) continue;
        if (e.code() != ErrorCode::DegenerateComplement) return failed(name, e, std::move(w));
        w.emplace_back("pairing_complement", "degenerate");
        return {name, true, std::move(w)};
      }
    }
  return {name, false, {{"common_zero", z.to_string()}, {"error", "fewer than two independent member pairs"}}};
}

}  // namespace

void ScenarioReport::add(Check c) {
  pass = pass && c.pass;
  checks.push_back(std::move(c));
}

std::uint64_t ScenarioReport::stat(const std::string& name) const {
  for (const auto& [k, v] : stats)
    if (k == name) return v;
  return 0;
}

// ---------------------------------------------------------------------------

ScenarioReport verify_prop1(const Field& field, std::size_t trials, std::uint64_t seed) {
  ScenarioReport report;
  report.scenario = "prop1";
  report.field = field.to_string();

  std::uint64_t cases = 0, failures = 0;
  std::optional<Witness> first;
  auto test = [&](const Involution& v, const ProjPoint& p) {
    ++cases;
    SymForm2 pair = form_from_points(p, apply(v, p));
    SymForm2 dform = desargues_form(v);
    Scalar lhs = det_pairing(pair, dform);
    if (lhs.is_zero()) return;
    ++failures;
    if (!first)
      first = Witness{{"involution", v.to_string()}, {"point", p.to_string()},
                      {"image", apply(v, p).to_string()}, {"pair_form", pair.to_string()},
                      {"desargues_form", dform.to_string()}, {"lhs", lhs.to_string()},
                      {"rhs", "0"}};
  };

  const bool exhaustive = field.kind() == FieldKind::PrimeField && field.characteristic() <= 5;
  if (exhaustive) {
    report.instance = "every involution and every point of P^1(" + field.to_string() + ")";
    std::vector<Scalar> el;
    for (std::int64_t r = 0; r < field.characteristic(); ++r) el.push_back(field.from_int(r));
    std::vector<ProjPoint> points;
    for (const auto& x : el) points.push_back(ProjPoint::affine(x));
    points.push_back(ProjPoint::infinity(field));
    for (const auto& a : el)
      for (const auto& b : el)
        for (const auto& c : el) {
          // one representative per projective class
          const Scalar& lead = !a.is_zero() ? a : !b.is_zero() ? b : c;
          if (!lead.is_one() || (-a * a - b * c).is_zero()) continue;
          Involution v(a, b, c);
          for (const auto& p : points) test(v, p);
        }
  } else {
    report.instance = std::to_string(trials) + " random involutions and points";
    report.seed = seed;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      Scalar a = random_scalar(field, rng), b = random_scalar(field, rng), c = random_scalar(field, rng);
      while ((-a * a - b * c).is_zero()) {
        a = random_scalar(field, rng);
        b = random_scalar(field, rng);
        c = random_scalar(field, rng);
      }
      Scalar x = random_scalar(field, rng), y = random_scalar(field, rng);
      while (x.is_zero() && y.is_zero()) {
        x = random_scalar(field, rng);
        y = random_scalar(field, rng);
      }
      test(Involution(a, b, c), ProjPoint(x, y));
    }
  }

  Check c{"conjugate pairs are orthogonal to the Desargues form", failures == 0,
          {{"cases", std::to_string(cases)}, {"failures", std::to_string(failures)}}};
  if (first) c.witness.insert(c.witness.end(), first->begin(), first->end());
  report.add(std::move(c));
  report.stats = {{"cases", cases}, {"failures", failures}};
  return report;
}

ScenarioReport verify_main_theorem(const Pencil& p, const LineInPV& line, std::size_t members) {
  ScenarioReport report;
  report.scenario = "main";
  SymForm2 f = restrict(p.r(), line);
  SymForm2 g = restrict(p.s(), line);
  Field k = common_field(f.field(), g.field());
  report.field = k.to_string();
  report.instance = "R|E = " + f.to_string() + ", S|E = " + g.to_string();

  Diagnosis d;
  try {
    d = diagnose(f, g);
  } catch (const Error& e) {
    report.add(failed("diagnose", e, {{"R|E", f.to_string()}, {"S|E", g.to_string()}}));
    return report;
  }
  report.stats.emplace_back(std::string(to_string(d.verdict)), 1);

  RestrictedGram gram = restricted_gram(f, g);
  Scalar res = resultant_or_zero(f, g);
  const bool regular = d.verdict == Verdict::Regular;
  report.add({"regular iff Gram determinant nonzero iff resultant nonzero",
              regular == !gram.det.is_zero() && regular == !res.is_zero(),
              {{"verdict", std::string(to_string(d.verdict))},
               {"gram_det", gram.det.to_string()},
               {"resultant", res.to_string()},
               {"four_times_gram_det", (-k.from_int(4) * gram.det).to_string()}}});

  auto params = member_parameters(k, members);

  if (regular) {
    Involution inv = induced_involution(f, g);
    SymForm2 dform = desargues_form(inv);
    Scalar pf = det_pairing(dform, f), pg = det_pairing(dform, g);
    report.add({"Desargues form orthogonal to the restricted pencil", pf.is_zero() && pg.is_zero(),
                {{"involution", inv.describe()},
                 {"desargues_form", dform.to_string()},
                 {"<D, R|E>", pf.to_string()},
                 {"<D, S|E>", pg.to_string()}}});

    std::vector<std::pair<ProjPoint, ProjPoint>> rational_pairs;
    std::uint64_t swapped = 0, tangent = 0, virtual_pairs = 0;
    for (const auto& ab : params) {
      const std::string name = "member " + param_text(ab) + " is an involution pair";
      SymForm2 h = restrict(pencil_member(p, ab.first, ab.second), line);
      try {
        MemberCheck mc = check_member(h, inv, true);
        if (mc.verdict == MemberVerdict::Swapped) {
          ++swapped;
          rational_pairs.emplace_back(mc.points[0], mc.points[1]);
        } else if (mc.verdict == MemberVerdict::FixedTangent) {
          ++tangent;
        } else {
          ++virtual_pairs;
        }
        report.add({name, true,
                    {{"restriction", h.to_string()},
                     {"verdict", std::string(to_string(mc.verdict))},
                     {"points", points_text(mc.points)},
                     {"over", mc.field.to_string()}}});
      } catch (const Error& e) {
        report.add(failed(name, e, {{"restriction", h.to_string()}, {"involution", inv.describe()}}));
      }
    }
    report.stats.emplace_back("members", params.size());
    report.stats.emplace_back("swapped", swapped);
    report.stats.emplace_back("fixed_tangent", tangent);
    report.stats.emplace_back("virtual_pairs", virtual_pairs);

    if (rational_pairs.size() >= 2) {
      const auto& [p1, q1] = rational_pairs[0];
      const auto& [p2, q2] = rational_pairs[1];
      Witness w{{"pair_1", points_text({p1, q1})}, {"pair_2", points_text({p2, q2})},
                {"induced", inv.describe()}};
      try {
        Involution from_pairs = involution_from_two_pairs(p1, q1, p2, q2);
        w.emplace_back("from_pairs", from_pairs.describe());
        report.add({"two member pairs determine the involution", from_pairs == inv, std::move(w)});
      } catch (const Error& e) {
        report.add(failed("two member pairs determine the involution", e, std::move(w)));
      }
    }
    return report;
  }

  if (d.verdict == Verdict::LineInQuadric) {
    const auto& [a, b] = *d.coefficients;
    Witness w{{"a", a.to_string()}, {"b", b.to_string()}};
    bool ok = !(a.is_zero() && b.is_zero());
    if (ok) {
      SymForm2 h = restrict(pencil_member(p, a, b), line);
      w.emplace_back("restriction", h.to_string());
      ok = h.is_zero();
    }
    w.emplace_back("expected", "the line lies on the member aR + bS");
    report.add({"line lies on a member of the pencil", ok, std::move(w)});
    return report;
  }

  // CommonZero
  const ProjPoint& z = *d.point;
  Field zf = common_field(z.field(), k);
  ProjPoint zl = z.lifted(zf);
  Scalar fz = f.lifted(zf).value(zl, zl), gz = g.lifted(zf).value(zl, zl);
  report.add({"restrictions share a zero", fz.is_zero() && gz.is_zero(),
              {{"point", z.to_string()}, {"R|E(Z)", fz.to_string()}, {"S|E(Z)", gz.to_string()}}});
  if (params.size() < 3) params = member_parameters(k, 3);
  report.add(only_if_common_zero(f, g, zl, params));
  return report;
}

ScenarioReport verify_prop3(const Pencil& p, const LineInPV& line, std::size_t members) {
  ScenarioReport report;
  report.scenario = "prop3";
  SymForm2 f = restrict(p.r(), line);
  SymForm2 g = restrict(p.s(), line);
  Field k = common_field(f.field(), g.field());
  report.field = k.to_string();
  report.instance = "R|E = " + f.to_string() + ", S|E = " + g.to_string();

  std::optional<Involution> induced;
  try {
    induced = induced_involution(f, g);
  } catch (const Error& e) {
    report.add(failed("restricted pencil is regular", e,
                      {{"R|E", f.to_string()}, {"S|E", g.to_string()}}));
    return report;
  }
  const Involution& inv = *induced;

  auto fp = fixed_points(inv, true);
  const Field& big = fp.field;
  const ProjPoint& m = fp.points[0];
  const ProjPoint& n = fp.points[1];
  Involution inv_big = inv.lifted(big);
  report.add({"M and N are fixed by the involution",
              apply(inv_big, m) == m && apply(inv_big, n) == n && !(m == n),
              {{"involution", inv.describe()}, {"M", m.to_string()}, {"N", n.to_string()},
               {"over", big.to_string()}}});

  for (const auto& [name, form] : {std::pair{"R|E", f}, std::pair{"S|E", g}}) {
    SymForm2 lifted = form.lifted(big);
    Scalar v = lifted.value(m, n);
    report.add({std::string("M and N orthogonal under ") + name, v.is_zero(),
                {{"form", form.to_string()}, {"M", m.to_string()}, {"N", n.to_string()},
                 {"lhs", v.to_string()}, {"rhs", "0"}}});
  }

  SymForm2 mn = form_from_points(m, n);
  SymForm2 dform = desargues_form(inv).lifted(big);
  report.add({"the form with zeros M, N is the Desargues form", proportional(mn, dform),
              {{"form_from_points", mn.to_string()}, {"desargues_form", dform.to_string()}}});

  std::uint64_t harmonic = 0, tangent = 0;
  for (const auto& ab : member_parameters(k, members)) {
    const std::string name = "member " + param_text(ab) + " pair is harmonic to M, N";
    SymForm2 h = restrict(pencil_member(p, ab.first, ab.second), line);
    try {
      auto zeros = isotropic_points(h.lifted(common_field(big, h.field())), true);
      ProjPoint ml = m.lifted(zeros.field), nl = n.lifted(zeros.field);
      Witness w{{"restriction", h.to_string()}, {"points", points_text(zeros.points)},
                {"over", zeros.field.to_string()}};
      if (zeros.points.size() == 1) {
        ++tangent;
        const ProjPoint& s = zeros.points[0];
        w.emplace_back("expected", "double point at M or N");
        report.add({"member " + param_text(ab) + " touches the line at M or N", s == ml || s == nl,
                    std::move(w)});
        continue;
      }
      CrossRatio cr = cross_ratio(zeros.points[0], zeros.points[1], ml, nl);
      bool ok = !cr.is_infinite() && cr.value() == -zeros.field.one();
      if (ok) ++harmonic;
      w.emplace_back("cross_ratio", cr.to_string());
      w.emplace_back("expected", "-1");
      report.add({name, ok, std::move(w)});
    } catch (const Error& e) {
      report.add(failed(name, e, {{"restriction", h.to_string()}}));
    }
  }
  report.stats = {{"harmonic", harmonic}, {"tangent", tangent}};
  return report;
}

// ---------------------------------------------------------------------------

LineInPV butterfly_line(const AffineConfig& cfg) {
  const std::size_t n = cfg.dim();
  if (cfg.direction.size() != n || cfg.marked.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "P0, D and M must have the same length");
  if (cfg.pencil.dim() != n + 1)
    throw Error(ErrorCode::DimensionMismatch, "pencil matrices must be " + std::to_string(n + 1) +
                                                  "x" + std::to_string(n + 1));
  if (all_zero(cfg.direction))
    throw Error(ErrorCode::HypothesisViolation, "direction vector D is zero");
  Vector offset;
  for (std::size_t i = 0; i < n; ++i) offset.push_back(cfg.marked[i] - cfg.p0[i]);
  if (!parallel(offset, cfg.direction))
    throw Error(ErrorCode::HypothesisViolation, "M = " + vector_text(cfg.marked) +
                                                    " is not on the line through " +
                                                    vector_text(cfg.p0) + " with direction " +
                                                    vector_text(cfg.direction));
  Vector e1 = cfg.direction, e2 = cfg.marked;
  Field f = cfg.direction[0].field();
  e1.push_back(f.zero());
  e2.push_back(f.one());
  return {std::move(e1), std::move(e2)};
}

std::string_view to_string(ButterflyBranch b) {
  switch (b) {
    case ButterflyBranch::TangentAtM: return "TangentAtM";
    case ButterflyBranch::Asymptote: return "Asymptote";
    case ButterflyBranch::SymmetricPair: return "SymmetricPair";
  }
  return "?";
}

namespace {

// In butterfly coordinates M = (0 : 1) and N = (1 : 0); a restriction
// (a, b, c) means a x^2 + 2b xy + c y^2.
std::vector<ButterflyBranch> branches(const SymForm2& h) {
  std::vector<ButterflyBranch> out;
  const bool a = !h.a().is_zero(), b = !h.b().is_zero(), c = !h.c().is_zero();
  if (a && !b && !c) out.push_back(ButterflyBranch::TangentAtM);
  if (!a && !b && c) out.push_back(ButterflyBranch::Asymptote);
  if (a && !b && c) out.push_back(ButterflyBranch::SymmetricPair);
  return out;
}

struct MidpointTest {
  bool by_sum;
  bool by_cross_ratio;
  IsotropicPoints zeros;
  std::string cross_ratio;
};

// M is the midpoint of the pair P, Q: once as t_P + t_Q = 0 in the affine
// parameter, once as (P, Q; M, N) = -1.
MidpointTest midpoint_test(const SymForm2& h) {
  auto zeros = isotropic_points(h, true);
  const Field& f = zeros.field;
  MidpointTest out{false, false, zeros, "n/a"};
  if (zeros.points.size() != 2 || zeros.points[0].is_infinity() || zeros.points[1].is_infinity())
    return out;
  out.by_sum = (zeros.points[0].x() + zeros.points[1].x()).is_zero();
  ProjPoint m = ProjPoint::affine(f.zero()), n = ProjPoint::infinity(f);
  CrossRatio cr = cross_ratio(zeros.points[0], zeros.points[1], m, n);
  out.cross_ratio = cr.to_string();
  out.by_cross_ratio = !cr.is_infinite() && cr.value() == -f.one();
  return out;
}

}  // namespace

ScenarioReport verify_butterfly(const AffineConfig& cfg) {
  LineInPV line = butterfly_line(cfg);
  ScenarioReport report;
  report.scenario = "butterfly";
  report.field = cfg.pencil.field().to_string();
  report.instance = "line " + vector_text(cfg.p0) + " + t " + vector_text(cfg.direction) +
                    ", M = " + vector_text(cfg.marked);

  Field k = common_field(cfg.pencil.field(), cfg.direction[0].field());
  auto hyp = cfg.hypothesis_members;
  if (hyp.empty()) hyp = {{k.one(), k.zero()}, {k.zero(), k.one()}};

  std::size_t symmetric = 0;
  std::vector<SymForm2> hyp_forms;
  for (const auto& ab : hyp) {
    SymForm2 h = restrict(pencil_member(cfg.pencil, ab.first, ab.second), line);
    auto br = branches(h);
    bool tangent = br.size() == 1 && br[0] == ButterflyBranch::TangentAtM;
    bool sym = br.size() == 1 && br[0] == ButterflyBranch::SymmetricPair;
    if (!tangent && !sym)
      throw Error(ErrorCode::HypothesisViolation,
                  "member " + param_text(ab) + " restricts to " + h.to_string() +
                      ", which is neither tangent at M nor symmetric about M");
    if (sym) {
      MidpointTest mt = midpoint_test(h);
      report.add({"hypothesis member " + param_text(ab) + " is symmetric about M",
                  mt.by_sum && mt.by_cross_ratio,
                  {{"restriction", h.to_string()},
                   {"points", points_text(mt.zeros.points)},
                   {"over", mt.zeros.field.to_string()},
                   {"sum_of_parameters_zero", mt.by_sum ? "true" : "false"},
                   {"cross_ratio_PQMN", mt.cross_ratio}}});
      ++symmetric;
    } else {
      report.add({"hypothesis member " + param_text(ab) + " is tangent at M", true,
                  {{"restriction", h.to_string()}}});
    }
    hyp_forms.push_back(h);
  }
  bool independent = false;
  for (std::size_t i = 0; i < hyp_forms.size() && !independent; ++i)
    for (std::size_t j = i + 1; j < hyp_forms.size() && !independent; ++j)
      independent = !proportional(hyp_forms[i], hyp_forms[j]);
  if (symmetric == 0 || !independent)
    throw Error(ErrorCode::HypothesisViolation,
                "hypothesis members must include a symmetric pair and two non-proportional "
                "restrictions");

  Involution inv = induced_involution(cfg.pencil, line);
  Involution minus_x(k.one(), k.zero(), k.zero());
  report.add({"induced involution is x -> -x", inv == minus_x,
              {{"involution", inv.describe()}, {"matrix", inv.to_string()}, {"expected", "x -> -x"}}});

  std::uint64_t counts[3] = {0, 0, 0};
  for (const auto& ab : member_parameters(k, cfg.members)) {
    SymForm2 h = restrict(pencil_member(cfg.pencil, ab.first, ab.second), line);
    auto br = branches(h);
    std::string names;
    for (auto b : br) names += (names.empty() ? "" : ",") + std::string(to_string(b));
    Witness w{{"restriction", h.to_string()}, {"branch", names.empty() ? "none" : names}};
    bool ok = br.size() == 1;
    if (ok) ++counts[static_cast<int>(br[0])];
    if (ok && br[0] == ButterflyBranch::SymmetricPair) {
      MidpointTest mt = midpoint_test(h);
      w.emplace_back("points", points_text(mt.zeros.points));
      w.emplace_back("actual", mt.zeros.field == h.field() ? "true" : "false");
      w.emplace_back("cross_ratio_PQMN", mt.cross_ratio);
      w.emplace_back("sum_of_parameters_zero", mt.by_sum ? "true" : "false");
      ok = mt.by_sum && mt.by_cross_ratio;
    }
    report.add({"member " + param_text(ab) + " falls in exactly one branch", ok, std::move(w)});
  }
  report.stats = {{"tangent_at_M", counts[0]}, {"asymptote", counts[1]}, {"symmetric_pair", counts[2]}};
  return report;
}

// ---------------------------------------------------------------------------

ClassicalScenario classical_desargues_scenario(const Vector& a, const Vector& b, const Vector& c,
                                               const Vector& d) {
  const std::vector<Vector> pts{a, b, c, d};
  for (const auto& v : pts)
    if (v.size() != 3) throw Error(ErrorCode::DimensionMismatch, "plane points need 3 coordinates");
  const char* names = "ABCD";
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t l = j + 1; l < 4; ++l)
        if (det3(pts[i], pts[j], pts[l]).is_zero())
          throw Error(ErrorCode::DegeneratePosition, std::string("points ") + names[i] + ", " +
                                                         names[j] + ", " + names[l] +
                                                         " are collinear or coincide");

  Vector ab = normalized(cross(a, b)), cd = normalized(cross(c, d));
  Vector ac = normalized(cross(a, c)), bd = normalized(cross(b, d));
  Vector ad = normalized(cross(a, d)), bc = normalized(cross(b, c));
  Pencil pencil(line_pair(ab, cd), line_pair(ac, bd));

  // sides of the diagonal triangle
  Vector p = normalized(cross(ab, cd)), q = normalized(cross(ac, bd)), r = normalized(cross(ad, bc));
  std::vector<LineInPV> lines{{p, q}, {q, r}, {r, p}};
  return {pts, std::move(pencil), std::move(lines)};
}

ClassicalScenario default_classical_scenario(const Field& field) {
  auto v = [&](std::int64_t x, std::int64_t y) {
    return Vector{field.from_int(x), field.from_int(y), field.one()};
  };
  return classical_desargues_scenario(v(1, 1), v(1, -1), v(-1, 1), v(-1, -1));
}

LineInPV default_classical_line(const Field& field) {
  return {{field.one(), field.from_int(2), field.zero()}, {field.zero(), field.zero(), field.one()}};
}

ScenarioReport verify_classical(const ClassicalScenario& s, const LineInPV& line, std::size_t members) {
  ScenarioReport report;
  report.scenario = "desargues-classic";
  Field k = s.pencil.field();
  report.field = k.to_string();
  report.instance = "points";
  for (const auto& v : s.points) report.instance += " " + vector_text(v);

  for (const auto& ab : member_parameters(k, members)) {
    SymFormN m = pencil_member(s.pencil, ab.first, ab.second);
    Witness w;
    bool ok = true;
    for (const auto& v : s.points) {
      Scalar val = m.value(v, v);
      w.emplace_back(vector_text(v), val.to_string());
      ok = ok && val.is_zero();
    }
    report.add({"member " + param_text(ab) + " passes through the four points", ok, std::move(w)});
  }

  ScenarioReport main = verify_main_theorem(s.pencil, line, members);
  for (auto& c : main.checks) report.add(std::move(c));
  report.stats = std::move(main.stats);
  return report;
}

// ---------------------------------------------------------------------------

ScenarioReport fuzz_campaign(const Field& field, std::size_t dim, std::size_t trials,
                             std::uint64_t seed) {
  ScenarioReport report;
  report.scenario = "fuzz";
  report.field = field.to_string();
  report.instance = std::to_string(trials) + " random pencils and lines in P^" + std::to_string(dim);
  report.seed = seed;
  if (dim < 1) throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be at least 1");
  const std::size_t n = dim + 1;

  std::uint64_t verdicts[3] = {0, 0, 0};
  std::uint64_t failures = 0, criteria_agree = 0, prop3_runs = 0, resampled = 0;
  constexpr std::size_t kMaxRecorded = 5;

  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t sub = mix_seed(seed, t);
    Rng rng(sub);
    std::optional<Pencil> pencil;
    while (!pencil) {
      try {
        pencil.emplace(SymFormN(random_symmetric(field, n, rng)), SymFormN(random_symmetric(field, n, rng)));
      } catch (const Error&) {
        ++resampled;
      }
    }
    std::optional<LineInPV> line;
    while (!line) {
      try {
        line.emplace(random_vector(field, n, rng), random_vector(field, n, rng));
      } catch (const Error&) {
        ++resampled;
      }
    }

    std::vector<Check> bad;
    try {
      ScenarioReport main = verify_main_theorem(*pencil, *line);
      for (int v = 0; v < 3; ++v) verdicts[v] += main.stat(std::string(to_string(static_cast<Verdict>(v))));
      if (!main.checks.empty() && main.checks.front().pass) ++criteria_agree;
      for (auto& c : main.checks)
        if (!c.pass) bad.push_back(std::move(c));
      if (main.stat("Regular")) {
        ++prop3_runs;
        ScenarioReport p3 = verify_prop3(*pencil, *line);
        for (auto& c : p3.checks)
          if (!c.pass) bad.push_back(std::move(c));
      }
    } catch (const Error& e) {
      bad.push_back(failed("trial raised", e));
    }
    if (bad.empty()) continue;
    ++failures;
    if (failures > kMaxRecorded) continue;
    for (auto& c : bad) {
      c.name = "trial " + std::to_string(t) + ": " + c.name;
      c.witness.insert(c.witness.begin(), {{"sub_seed", std::to_string(sub)},
                                           {"R", matrix_text(pencil->r())},
                                           {"S", matrix_text(pencil->s())},
                                           {"e1", vector_text(line->e1())},
                                           {"e2", vector_text(line->e2())}});
      report.add(std::move(c));
    }
  }

  report.add({"main theorem and fixed-point checks hold on every trial", failures == 0,
              {{"trials", std::to_string(trials)}, {"failing_trials", std::to_string(failures)}}});
  report.add({"regularity criteria agree on every trial", criteria_agree == trials,
              {{"agreeing", std::to_string(criteria_agree)}, {"trials", std::to_string(trials)}}});
  report.stats = {{"trials", trials},
                  {"Regular", verdicts[0]},
                  {"LineInQuadric", verdicts[1]},
                  {"CommonZero", verdicts[2]},
                  {"criteria_agree", criteria_agree},
                  {"prop3_runs", prop3_runs},
                  {"failing_trials", failures},
                  {"resampled", resampled}};
  return report;
}

}  // namespace desargues
