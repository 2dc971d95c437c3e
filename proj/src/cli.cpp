#include "desargues/cli.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"

#include "desargues/json_io.hpp"

namespace desargues::cli {

namespace {

using io::json;

struct Options {
  std::optional<std::string> field;
  std::string pencil, line, form, involution, config, points;
  std::string scenario;
  std::size_t members = 0;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::size_t dim = 2;
  bool allow_extension = false;
  bool verbose = false;
  bool timestamp = false;
};

struct Outcome {
  json doc;
  int code = 0;
  std::string summary;
};

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::InvariantError:
    case ErrorCode::HypothesisViolation:
    case ErrorCode::DegeneratePosition:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::FieldMismatch:
      return true;
    default:
      return false;
  }
}

class Inputs {
 public:
  explicit Inputs(const Options& o) : o_(o) {}

  const json& doc(const std::string& flag, const std::string& path) {
    if (path.empty()) usage(flag + " is required for this command");
    auto it = docs_.find(path);
    if (it == docs_.end()) it = docs_.emplace(path, io::read_file(path)).first;
    return it->second;
  }

  // --field, or the "field" key of any loaded document; they must agree.
  Field field() {
    std::optional<Field> f;
    if (o_.field) f = io::parse_field_flag(*o_.field);
    for (const auto& [path, d] : docs_) {
      auto e = io::embedded_field(d);
      if (!e) continue;
      if (f && !(*f == *e))
        throw Error(ErrorCode::InvariantError,
                    path + " field " + e->to_string() + " disagrees with " + f->to_string());
      f = e;
    }
    return f.value_or(Field::rationals());
  }

  std::pair<Pencil, LineInPV> pencil_and_line() {
    const json& pj = doc("--pencil", o_.pencil);
    const json& lj = doc("--line", o_.line);
    Field f = field();
    Pencil p = io::pencil_from_json(pj, f);
    LineInPV l = io::line_from_json(lj, f);
    if (p.dim() != l.dim())
      throw Error(ErrorCode::InvariantError, "line vectors have length " + std::to_string(l.dim()) +
                                                 " but pencil matrices are " + std::to_string(p.dim()) +
                                                 "x" + std::to_string(p.dim()));
    return {std::move(p), std::move(l)};
  }

 private:
  const Options& o_;
  std::map<std::string, json> docs_;
};

json points_json(const std::vector<ProjPoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(io::to_json(p));
  return out;
}

json involution_json(const Involution& inv, bool allow_extension) {
  auto fp = fixed_points(inv, allow_extension);
  return {{"involution", io::to_json(inv)},
          {"map", inv.describe()},
          {"matrix", json::array({json::array({io::to_json(inv.a()), io::to_json(inv.b())}),
                                  json::array({io::to_json(inv.c()), io::to_json(-inv.a())})})},
          {"desargues_form", io::to_json(desargues_form(inv))},
          {"fixed_points", points_json(fp.points)},
          {"fixed_points_field", fp.field.to_string()}};
}

Outcome report_outcome(const ScenarioReport& r) {
  std::size_t failing = 0;
  for (const auto& c : r.checks) failing += c.pass ? 0 : 1;
  std::string summary = r.scenario + " over " + r.field + ": " + (r.pass ? "PASS" : "FAIL") + " (" +
                        std::to_string(r.checks.size()) + " checks, " + std::to_string(failing) +
                        " failing)";
  for (const auto& c : r.checks)
    if (!c.pass) summary += "\n  failed: " + c.name;
  return {io::to_json(r), r.pass ? 0 : 1, summary};
}

Outcome cmd_classify(const Options& o) {
  Inputs in(o);
  const json& j = in.doc("--form", o.form);
  Field f = in.field();
  SymForm2 q = io::form2_from_json(j, f);
  FormClass c = classify(q);
  json out = {{"field", f.to_string()},
              {"form", io::to_json(q)},
              {"class", std::string(to_string(c))},
              {"det", io::to_json(q.det())}};
  if (!q.is_zero()) {
    auto iso = isotropic_points(q, o.allow_extension);
    out["isotropic_points"] = points_json(iso.points);
    out["isotropic_points_field"] = iso.field.to_string();
  }
  return {out, 0, q.to_string() + " is " + std::string(to_string(c))};
}

Outcome cmd_restrict(const Options& o) {
  Inputs in(o);
  auto [p, line] = in.pencil_and_line();
  SymForm2 f = restrict(p.r(), line), g = restrict(p.s(), line);
  RestrictedGram gram = restricted_gram(f, g);
  json res = (f.is_zero() || g.is_zero()) ? io::to_json(p.field().zero()) : io::to_json(resultant(f, g));
  json out = {{"field", p.field().to_string()},
              {"restrictions", {{"R", io::to_json(f)}, {"S", io::to_json(g)}}},
              {"gram", {{"RR", io::to_json(gram.ff)}, {"RS", io::to_json(gram.fg)},
                        {"SS", io::to_json(gram.gg)}, {"det", io::to_json(gram.det)}}},
              {"resultant", res}};
  return {out, 0, "R|E = " + f.to_string() + ", S|E = " + g.to_string()};
}

Outcome cmd_diagnose(const Options& o) {
  Inputs in(o);
  auto [p, line] = in.pencil_and_line();
  Diagnosis d = diagnose(p, line);
  SymForm2 f = restrict(p.r(), line), g = restrict(p.s(), line);
  json out = io::to_json(d);
  out["field"] = p.field().to_string();
  out["gram_det"] = io::to_json(restricted_gram(f, g).det);
  out["resultant"] = (f.is_zero() || g.is_zero()) ? io::to_json(p.field().zero()) : io::to_json(resultant(f, g));
  return {out, 0, "verdict " + std::string(to_string(d.verdict))};
}

Outcome cmd_involution(const Options& o) {
  Inputs in(o);
  auto [p, line] = in.pencil_and_line();
  try {
    Involution inv = induced_involution(p, line);
    json out = involution_json(inv, o.allow_extension);
    out["field"] = p.field().to_string();
    return {out, 0, "induced involution " + inv.describe()};
  } catch (const NotRegularError& e) {
    json out = {{"field", p.field().to_string()},
                {"error", "NotRegular"},
                {"diagnosis", io::to_json(e.diagnosis())}};
    return {out, 1, e.what()};
  }
}

Outcome cmd_fixed_points(const Options& o) {
  Inputs in(o);
  std::optional<Involution> inv;
  Field f = Field::rationals();
  if (!o.involution.empty()) {
    const json& j = in.doc("--involution", o.involution);
    f = in.field();
    inv = io::involution_from_json(j, f);
  } else {
    auto [p, line] = in.pencil_and_line();
    f = p.field();
    try {
      inv = induced_involution(p, line);
    } catch (const NotRegularError& e) {
      json out = {{"field", f.to_string()}, {"error", "NotRegular"}, {"diagnosis", io::to_json(e.diagnosis())}};
      return {out, 1, e.what()};
    }
  }
  auto fp = fixed_points(*inv, o.allow_extension);
  json out = {{"field", f.to_string()},
              {"involution", io::to_json(*inv)},
              {"map", inv->describe()},
              {"fixed_points", points_json(fp.points)},
              {"fixed_points_field", fp.field.to_string()}};
  return {out, 0, std::to_string(fp.points.size()) + " fixed points over " + fp.field.to_string()};
}

Outcome cmd_verify(const Options& o) {
  Inputs in(o);
  const std::string& s = o.scenario;
  if (s == "prop1") {
    Field f = in.field();
    return report_outcome(verify_prop1(f, o.trials, o.seed));
  }
  if (s == "main" || s == "prop3") {
    auto [p, line] = in.pencil_and_line();
    return report_outcome(s == "main" ? verify_main_theorem(p, line, o.members)
                                      : verify_prop3(p, line, o.members));
  }
  if (s == "butterfly") {
    if (o.config.empty()) {
      // circle x^2 + y^2 = 1 and ellipse x^2 + 4y^2 = 4 on the x-axis
      Field f = in.field();
      auto d = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        Matrix m(3, Vector(3, f.zero()));
        m[0][0] = f.from_int(a);
        m[1][1] = f.from_int(b);
        m[2][2] = f.from_int(c);
        return SymFormN(m);
      };
      AffineConfig cfg{{f.zero(), f.zero()}, {f.one(), f.zero()}, {f.zero(), f.zero()},
                       Pencil(d(1, 1, -1), d(1, 4, -4)), {}, o.members};
      return report_outcome(verify_butterfly(cfg));
    }
    const json& j = in.doc("--config", o.config);
    AffineConfig cfg = io::affine_config_from_json(j, in.field());
    if (o.members) cfg.members = o.members;
    return report_outcome(verify_butterfly(cfg));
  }
  if (s == "desargues-classic") {
    std::optional<ClassicalScenario> sc;
    std::optional<LineInPV> line;
    if (!o.points.empty()) {
      const json& j = in.doc("--points", o.points);
      const json& pts = j.is_object() && j.contains("points") ? j["points"] : j;
      if (!pts.is_array() || pts.size() != 4) usage("points must be an array of four plane points");
      Field f = in.field();
      std::vector<Vector> v;
      for (std::size_t i = 0; i < 4; ++i) {
        Vector p = io::vector_from_json(pts[i], f, "points[" + std::to_string(i) + "]");
        if (p.size() == 2) p.push_back(f.one());
        if (p.size() != 3)
          throw Error(ErrorCode::InvariantError, "points[" + std::to_string(i) + "] needs 2 or 3 coordinates");
        v.push_back(std::move(p));
      }
      sc = classical_desargues_scenario(v[0], v[1], v[2], v[3]);
    }
    if (!o.line.empty()) line = io::line_from_json(in.doc("--line", o.line), in.field());
    Field f = in.field();
    if (!sc) sc = default_classical_scenario(f);
    if (!line) line = default_classical_line(f);
    if (line->dim() != 3) throw Error(ErrorCode::InvariantError, "line vectors must have 3 coordinates");
    return report_outcome(verify_classical(*sc, *line, o.members));
  }
  usage("--scenario must be one of prop1, main, prop3, butterfly, desargues-classic");
}

Outcome cmd_fuzz(const Options& o) {
  Inputs in(o);
  Field f = in.field();
  if (o.dim < 1) usage("--dim must be at least 1");
  return report_outcome(fuzz_campaign(f, o.dim, o.trials, o.seed));
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of the Desargues involution theorem for pencils of quadrics",
               "desargues"};
  app.require_subcommand(1);

  std::string field_flag;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", field_flag, "Q or gfp:P (default Q, or the inputs' field)");
    sub->add_flag("--verbose", o.verbose, "human-readable summary on standard error");
    sub->add_flag("--timestamp", o.timestamp, "add a UTC timestamp to the output");
  };
  auto pencil_line = [&](CLI::App* sub) {
    sub->add_option("--pencil", o.pencil, "pencil JSON {R, S}");
    sub->add_option("--line", o.line, "line JSON {e1, e2}");
  };

  std::function<Outcome(const Options&)> handler;
  auto command = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  CLI::App* classify_cmd = command("classify", "classify a binary form", cmd_classify);
  classify_cmd->add_option("--form", o.form, "form JSON {a, b, c}");
  classify_cmd->add_flag("--allow-extension", o.allow_extension, "isotropic points over K(sqrt disc)");

  pencil_line(command("restrict", "restrict R and S to the line", cmd_restrict));
  pencil_line(command("diagnose", "Regular, LineInQuadric or CommonZero", cmd_diagnose));

  CLI::App* inv_cmd = command("involution", "the involution induced on the line", cmd_involution);
  pencil_line(inv_cmd);
  inv_cmd->add_flag("--allow-extension", o.allow_extension, "fixed points over a quadratic extension");

  CLI::App* fp_cmd = command("fixed-points", "fixed points of an involution", cmd_fixed_points);
  pencil_line(fp_cmd);
  fp_cmd->add_option("--involution", o.involution, "involution JSON {a, b, c}");
  fp_cmd->add_flag("--allow-extension", o.allow_extension, "fixed points over a quadratic extension");

  CLI::App* verify_cmd = command("verify", "run a verification scenario", cmd_verify);
  pencil_line(verify_cmd);
  verify_cmd->add_option("--scenario", o.scenario, "prop1|main|prop3|butterfly|desargues-classic")
      ->required()
      ->check(CLI::IsMember({"prop1", "main", "prop3", "butterfly", "desargues-classic"}));
  verify_cmd->add_option("--members", o.members, "pencil members to check (0 = default)");
  verify_cmd->add_option("--trials", o.trials, "random trials (prop1)");
  verify_cmd->add_option("--seed", o.seed, "random seed (prop1)");
  verify_cmd->add_option("--config", o.config, "butterfly configuration JSON");
  verify_cmd->add_option("--points", o.points, "four plane points JSON (desargues-classic)");

  CLI::App* fuzz_cmd = command("fuzz", "random pencils and lines over a field", cmd_fuzz);
  fuzz_cmd->add_option("--dim", o.dim, "projective dimension of the ambient space");
  fuzz_cmd->add_option("--trials", o.trials, "number of trials");
  fuzz_cmd->add_option("--seed", o.seed, "campaign seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!field_flag.empty()) o.field = field_flag;

  try {
    Outcome r = handler(o);
    if (o.timestamp) r.doc["timestamp"] = utc_now();
    out << r.doc.dump(2) << "\n";
    if (o.verbose) err << r.summary << "\n";
    return r.code;
  } catch (const Error& e) {
    err << (is_input_error(e.code()) ? "input error: " : "error: ") << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  }
}

}  // namespace desargues::cli
