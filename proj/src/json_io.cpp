#include "desargues/json_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace desargues::io {

namespace {

std::string sub(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string located(const std::string& path, const std::string& msg) {
  return path.empty() ? msg : path + " " + msg;
}

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::SchemaError, located(path, msg));
}

[[noreturn]] void invariant(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::InvariantError, located(path, msg));
}

// Runs a domain constructor and reports its failures as invariant
// violations at `path`.
template <typename Fn>
auto guarded(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::SchemaError ||
        e.code() == ErrorCode::InvariantError)
      throw;
    invariant(path, e.message());
  }
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema(path.empty() ? "document" : path, "must be an object");
  auto it = j.find(key);
  if (it == j.end()) schema(sub(path, key), "is missing");
  return *it;
}

const json& array_of(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) schema(path, "must be an array");
  if (n && j.size() != n) schema(path, "must have " + std::to_string(n) + " elements");
  return j;
}

std::string type_name(const json& j) {
  if (j.is_number_float()) return "a float";
  return std::string("a ") + j.type_name();
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q") return Field::rationals();
  static const std::regex gfp(R"(gfp:(\d{1,12}))");
  std::smatch m;
  if (!std::regex_match(text, m, gfp)) schema("--field", "expects Q or gfp:P, got '" + text + "'");
  return guarded("--field", [&] { return Field::prime(std::stoll(m[1])); });
}

Field field_from_json(const json& j, const std::string& path) {
  const json& type = member(j, "type", path);
  if (!type.is_string()) schema(sub(path, "type"), "must be a string");
  const std::string t = type.get<std::string>();
  if (t == "Q") return Field::rationals();
  if (t == "GFp") {
    const json& p = member(j, "p", path);
    if (!p.is_number_integer()) schema(sub(path, "p"), "must be an integer, got " + type_name(p));
    return guarded(path, [&] { return Field::prime(p.get<std::int64_t>()); });
  }
  if (t == "QuadExt") {
    Field base = field_from_json(member(j, "base", path), sub(path, "base"));
    Scalar d = scalar_from_json(member(j, "d", path), base, sub(path, "d"));
    return guarded(path, [&] { return Field::extension(base, d); });
  }
  schema(sub(path, "type"), "must be one of Q, GFp, QuadExt, got '" + t + "'");
}

json to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return {{"type", "Q"}};
    case FieldKind::PrimeField: return {{"type", "GFp"}, {"p", f.characteristic()}};
    case FieldKind::QuadExt:
      return {{"type", "QuadExt"}, {"base", to_json(f.base())}, {"d", to_json(f.radicand())}};
  }
  return nullptr;
}

Scalar scalar_from_json(const json& j, const Field& f, const std::string& path) {
  if (f.kind() == FieldKind::QuadExt) {
    if (!j.is_array()) return embed(scalar_from_json(j, f.base(), path), f);
    array_of(j, 2, path);
    return f.from_parts(scalar_from_json(j[0], f.base(), at(path, 0)),
                        scalar_from_json(j[1], f.base(), at(path, 1)));
  }
  if (j.is_number_float()) schema(path, "is a float; scalars must be exact strings");
  if (j.is_number_integer()) {
    Integer n = j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    return f.from_integer(n);
  }
  if (!j.is_string()) schema(path, "must be a scalar string, got " + type_name(j));
  static const std::regex rational(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  const std::string text = j.get<std::string>();
  std::smatch m;
  if (!std::regex_match(text, m, rational))
    schema(path, "'" + text + "' is not an integer or fraction n/d");
  Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) invariant(path, "has a zero denominator");
  Scalar d = f.from_integer(den);
  if (d.is_zero()) invariant(path, "denominator vanishes in " + f.to_string());
  return f.from_integer(num) / d;
}

json to_json(const Scalar& x) {
  if (x.field().kind() == FieldKind::QuadExt) return json::array({to_json(x.ext_u()), to_json(x.ext_v())});
  return x.to_string();
}

ProjPoint point_from_json(const json& j, const Field& f, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return ProjPoint::infinity(f);
  array_of(j, 2, path);
  Scalar x = scalar_from_json(j[0], f, at(path, 0));
  Scalar y = scalar_from_json(j[1], f, at(path, 1));
  return guarded(path, [&] { return ProjPoint(x, y); });
}

json to_json(const ProjPoint& p) { return json::array({to_json(p.x()), to_json(p.y())}); }

SymForm2 form2_from_json(const json& j, const Field& f, const std::string& path) {
  return {scalar_from_json(member(j, "a", path), f, sub(path, "a")),
          scalar_from_json(member(j, "b", path), f, sub(path, "b")),
          scalar_from_json(member(j, "c", path), f, sub(path, "c"))};
}

json to_json(const SymForm2& q) { return {{"a", to_json(q.a())}, {"b", to_json(q.b())}, {"c", to_json(q.c())}}; }

Involution involution_from_json(const json& j, const Field& f, const std::string& path) {
  Scalar a = scalar_from_json(member(j, "a", path), f, sub(path, "a"));
  Scalar b = scalar_from_json(member(j, "b", path), f, sub(path, "b"));
  Scalar c = scalar_from_json(member(j, "c", path), f, sub(path, "c"));
  return guarded(path, [&] { return Involution(a, b, c); });
}

json to_json(const Involution& inv) {
  return {{"a", to_json(inv.a())}, {"b", to_json(inv.b())}, {"c", to_json(inv.c())}};
}

Vector vector_from_json(const json& j, const Field& f, const std::string& path) {
  array_of(j, 0, path);
  if (j.empty()) invariant(path, "is empty");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(j[i], f, at(path, i)));
  return v;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

SymFormN formN_from_json(const json& j, const Field& f, const std::string& path) {
  const json& dim = member(j, "dim", path);
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1)
    schema(sub(path, "dim"), "must be a positive integer");
  const auto n = static_cast<std::size_t>(dim.get<std::int64_t>());
  const std::string mpath = sub(path, "m");
  const json& m = array_of(member(j, "m", path), 0, mpath);
  if (m.size() != n)
    invariant(mpath, "has " + std::to_string(m.size()) + " rows but dim is " + std::to_string(n));
  Matrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector row = vector_from_json(m[i], f, at(mpath, i));
    if (row.size() != n)
      invariant(at(mpath, i), "has " + std::to_string(row.size()) + " entries but dim is " + std::to_string(n));
    rows.push_back(std::move(row));
  }
  return guarded(mpath, [&] { return SymFormN(std::move(rows)); });
}

json to_json(const SymFormN& q) {
  json m = json::array();
  for (const auto& row : q.entries()) m.push_back(to_json(row));
  return {{"dim", q.dim()}, {"m", m}};
}

Pencil pencil_from_json(const json& j, const Field& f, const std::string& path) {
  SymFormN r = formN_from_json(member(j, "R", path), f, sub(path, "R"));
  SymFormN s = formN_from_json(member(j, "S", path), f, sub(path, "S"));
  return guarded(path, [&] { return Pencil(r, s); });
}

json to_json(const Pencil& p) { return {{"R", to_json(p.r())}, {"S", to_json(p.s())}}; }

LineInPV line_from_json(const json& j, const Field& f, const std::string& path) {
  Vector e1 = vector_from_json(member(j, "e1", path), f, sub(path, "e1"));
  Vector e2 = vector_from_json(member(j, "e2", path), f, sub(path, "e2"));
  return guarded(path, [&] { return LineInPV(e1, e2); });
}

json to_json(const LineInPV& line) { return {{"e1", to_json(line.e1())}, {"e2", to_json(line.e2())}}; }

AffineConfig affine_config_from_json(const json& j, const Field& f, const std::string& path) {
  Vector p0 = vector_from_json(member(j, "p0", path), f, sub(path, "p0"));
  Vector dir = vector_from_json(member(j, "direction", path), f, sub(path, "direction"));
  Vector marked = vector_from_json(member(j, "marked", path), f, sub(path, "marked"));
  Pencil pencil = pencil_from_json(member(j, "pencil", path), f, sub(path, "pencil"));
  std::vector<std::pair<Scalar, Scalar>> hyp;
  if (j.contains("hypothesis_members")) {
    const std::string hpath = sub(path, "hypothesis_members");
    const json& h = array_of(j["hypothesis_members"], 0, hpath);
    for (std::size_t i = 0; i < h.size(); ++i) {
      array_of(h[i], 2, at(hpath, i));
      Scalar a = scalar_from_json(h[i][0], f, at(at(hpath, i), 0));
      Scalar b = scalar_from_json(h[i][1], f, at(at(hpath, i), 1));
      if (a.is_zero() && b.is_zero()) invariant(at(hpath, i), "is the zero parameter (0 : 0)");
      hyp.emplace_back(a, b);
    }
  }
  std::size_t members = 0;
  if (j.contains("members")) {
    if (!j["members"].is_number_unsigned()) schema(sub(path, "members"), "must be a non-negative integer");
    members = j["members"].get<std::size_t>();
  }
  AffineConfig cfg{p0, dir, marked, pencil, hyp, members};
  guarded(path, [&] { return butterfly_line(cfg); });
  return cfg;
}

json to_json(const Diagnosis& d) {
  json out = {{"verdict", std::string(to_string(d.verdict))}};
  if (d.point) {
    out["point"] = to_json(*d.point);
    out["point_field"] = d.point->field().to_string();
  }
  if (d.coefficients)
    out["coefficients"] = json::array({to_json(d.coefficients->first), to_json(d.coefficients->second)});
  return out;
}

json to_json(const ScenarioReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json w = json::object();
    for (const auto& [k, v] : c.witness) w[k] = v;
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", w}});
  }
  json stats = json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  json out = {{"scenario", r.scenario}, {"field", r.field}, {"instance", r.instance}};
  out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  out["checks"] = std::move(checks);
  out["pass"] = r.pass;
  out["stats"] = std::move(stats);
  return out;
}

std::optional<Field> embedded_field(const json& j) {
  if (j.is_object() && j.contains("field")) return field_from_json(j["field"], "field");
  return std::nullopt;
}

}  // namespace desargues::io
