#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "desargues/cli.hpp"
#include "desargues/json_io.hpp"
#include "test_support.hpp"

using namespace desargues;
using namespace desargues::testing;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("desargues_cli_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

const char* kWorked = R"({
  "R": {"dim": 3, "m": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "1"]]},
  "S": {"dim": 3, "m": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "3"]]}})";
const char* kCommonZero = R"({
  "R": {"dim": 3, "m": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]]},
  "S": {"dim": 3, "m": [["0", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}})";
const char* kLineZ0 = R"({"e1": ["1", "0", "0"], "e2": ["0", "1", "0"]})";

}  // namespace

TEST_CASE("involution on the worked pencil") {
  TempDir dir;
  auto p = dir.write("p.json", kWorked), l = dir.write("l.json", kLineZ0);
  Result r = run({"involution", "--pencil", p, "--line", l, "--allow-extension"});
  REQUIRE(r.code == 0);
  json d = r.doc();
  CHECK(d["involution"] == json({{"a", "0"}, {"b", "1"}, {"c", "-1"}}));
  CHECK(d["map"] == "x -> -1/x");
  CHECK(d["fixed_points_field"] == "Q(sqrt(-1))");
  CHECK(d["fixed_points"].size() == 2);
  // +-sqrt(-1) as extension pairs [u, v]
  CHECK(d["fixed_points"][0][0] == json::array({"0", "1"}));

  Result no_ext = run({"involution", "--pencil", p, "--line", l});
  CHECK(no_ext.code == 0);
  CHECK(no_ext.doc()["fixed_points"].empty());
}

TEST_CASE("diagnose on the common-zero pencil") {
  TempDir dir;
  Result r = run({"diagnose", "--pencil", dir.write("p.json", kCommonZero), "--line", dir.write("l.json", kLineZ0)});
  REQUIRE(r.code == 0);
  json d = r.doc();
  CHECK(d["verdict"] == "CommonZero");
  CHECK(d["point"] == json::array({"1", "0"}));
  CHECK(d["resultant"] == "0");
  CHECK(d["gram_det"] == "0");

  Result inv = run({"involution", "--pencil", dir.write("p.json", kCommonZero), "--line", dir.write("l.json", kLineZ0)});
  CHECK(inv.code == 1);
  CHECK(inv.doc()["error"] == "NotRegular");
  CHECK(inv.doc()["diagnosis"]["verdict"] == "CommonZero");
}

TEST_CASE("restrict and classify") {
  TempDir dir;
  Result r = run({"restrict", "--pencil", dir.write("p.json", kWorked), "--line", dir.write("l.json", kLineZ0)});
  REQUIRE(r.code == 0);
  json d = r.doc();
  CHECK(d["restrictions"]["R"] == json({{"a", "1"}, {"b", "0"}, {"c", "-1"}}));
  CHECK(d["restrictions"]["S"] == json({{"a", "0"}, {"b", "1"}, {"c", "0"}}));
  CHECK(d["gram"]["det"] == "1");
  CHECK(d["resultant"] == "-4");  // -4 times the Gram determinant

  Result c = run({"classify", "--form", dir.write("f.json", R"({"a": "1", "b": "0", "c": "1"})"), "--allow-extension"});
  REQUIRE(c.code == 0);
  CHECK(c.doc()["class"] == "Anisotropic");
  CHECK(c.doc()["isotropic_points"].size() == 2);
  Result g = run({"classify", "--field", "gfp:5", "--form", dir.write("g.json", R"({"a": 1, "b": 0, "c": 1})")});
  REQUIRE(g.code == 0);
  CHECK(g.doc()["class"] == "Hyperbolic");
  CHECK(g.doc()["field"] == "GF(5)");
}

TEST_CASE("fixed points of a given involution") {
  TempDir dir;
  Result r = run({"fixed-points", "--involution", dir.write("i.json", R"({"a": "0", "b": "1", "c": "1"})")});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["map"] == "x -> 1/x");
  CHECK(r.doc()["fixed_points"].size() == 2);
  Result singular = run({"fixed-points", "--involution", dir.write("j.json", R"({"a": "1", "b": "1", "c": "-1"})")});
  CHECK(singular.code == 2);
  CHECK(singular.err.find("InvariantError") != std::string::npos);
}

TEST_CASE("verify scenarios") {
  TempDir dir;
  auto p = dir.write("p.json", kWorked), l = dir.write("l.json", kLineZ0);

  Result main = run({"verify", "--scenario", "main", "--pencil", p, "--line", l});
  CHECK(main.code == 0);
  CHECK(main.doc()["pass"] == true);
  CHECK(main.doc()["scenario"] == "main");
  CHECK(main.doc()["seed"].is_null());

  Result prop3 = run({"verify", "--scenario", "prop3", "--pencil", p, "--line", l});
  CHECK(prop3.code == 0);

  Result prop1 = run({"verify", "--scenario", "prop1", "--field", "gfp:5"});
  CHECK(prop1.code == 0);
  CHECK(prop1.doc()["stats"]["cases"] == 150);

  Result seeded = run({"verify", "--scenario", "prop1", "--trials", "500", "--seed", "42"});
  CHECK(seeded.code == 0);
  CHECK(seeded.doc()["seed"] == 42);

  Result butterfly = run({"verify", "--scenario", "butterfly"});
  CHECK(butterfly.code == 0);

  Result classic = run({"verify", "--scenario", "desargues-classic"});
  CHECK(classic.code == 0);

  // prop3 on a non-regular restriction is a verification failure
  Result cz = run({"verify", "--scenario", "prop3", "--pencil", dir.write("c.json", kCommonZero), "--line", l});
  CHECK(cz.code == 1);
  CHECK(cz.doc()["pass"] == false);
}

TEST_CASE("butterfly and classical inputs from files") {
  TempDir dir;
  auto cfg = dir.write("b.json", R"({
    "p0": ["5", "0"], "direction": ["2", "0"], "marked": ["0", "0"],
    "pencil": {"R": {"dim": 3, "m": [["1","0","0"],["0","1","0"],["0","0","-1"]]},
               "S": {"dim": 3, "m": [["1","0","0"],["0","4","0"],["0","0","-4"]]}},
    "members": 5})");
  Result r = run({"verify", "--scenario", "butterfly", "--config", cfg});
  CHECK(r.code == 0);

  auto skew = dir.write("s.json", R"({
    "p0": ["0", "0"], "direction": ["1", "0"], "marked": ["0", "0"],
    "pencil": {"R": {"dim": 3, "m": [["1","0","1"],["0","1","0"],["1","0","-1"]]},
               "S": {"dim": 3, "m": [["1","0","0"],["0","4","0"],["0","0","-4"]]}}})");
  Result bad = run({"verify", "--scenario", "butterfly", "--config", skew});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("HypothesisViolation") != std::string::npos);

  auto pts = dir.write("pts.json", R"({"points": [["0","0"], ["1","0"], ["0","1"], ["1","1"]]})");
  auto line = dir.write("line.json", R"({"e1": ["1", "3", "0"], "e2": ["0", "0", "1"]})");
  Result classic = run({"verify", "--scenario", "desargues-classic", "--field", "gfp:7", "--points", pts, "--line", line});
  CHECK(classic.code == 0);
  CHECK(classic.doc()["field"] == "GF(7)");

  auto collinear = dir.write("col.json", R"([["0","0"], ["1","1"], ["2","2"], ["0","1"]])");
  Result degenerate = run({"verify", "--scenario", "desargues-classic", "--points", collinear});
  CHECK(degenerate.code == 2);
  CHECK(degenerate.err.find("DegeneratePosition") != std::string::npos);
}

TEST_CASE("fuzz is deterministic and timestamps are opt-in") {
  Result a = run({"fuzz", "--field", "gfp:7", "--dim", "2", "--trials", "300", "--seed", "1"});
  Result b = run({"fuzz", "--field", "gfp:7", "--dim", "2", "--trials", "300", "--seed", "1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.doc().contains("timestamp"));
  CHECK(a.doc()["stats"]["trials"] == 300);

  Result t = run({"fuzz", "--field", "gfp:7", "--trials", "10", "--timestamp", "--verbose"});
  CHECK(t.code == 0);
  CHECK(t.doc()["timestamp"].is_string());
  CHECK(t.err.find("PASS") != std::string::npos);
}

TEST_CASE("input errors name the offending path") {
  TempDir dir;
  auto l = dir.write("l.json", kLineZ0);

  auto asym = dir.write("asym.json", R"({
    "R": {"dim": 2, "m": [["1", "2"], ["3", "1"]]},
    "S": {"dim": 2, "m": [["1", "0"], ["0", "1"]]}})");
  Result r = run({"diagnose", "--pencil", asym, "--line", dir.write("l2.json", R"({"e1": ["1","0"], "e2": ["0","1"]})")});
  CHECK(r.code == 2);
  CHECK(r.err.find("InvariantError: R.m not symmetric at [0][1] vs [1][0]") != std::string::npos);

  auto gf2 = dir.write("gf2.json", R"({"field": {"type": "GFp", "p": 2}, "e1": ["1","0","0"], "e2": ["0","1","0"]})");
  r = run({"diagnose", "--pencil", dir.write("p.json", kWorked), "--line", gf2});
  CHECK(r.code == 2);
  CHECK(r.err.find("characteristic 2 excluded") != std::string::npos);

  auto dep = dir.write("dep.json", R"({"e1": ["1","2","3"], "e2": ["1","2","3"]})");
  r = run({"diagnose", "--pencil", dir.write("p.json", kWorked), "--line", dep});
  CHECK(r.code == 2);
  CHECK(r.err.find("InvariantError: line vectors dependent") != std::string::npos);

  auto flt = dir.write("flt.json", R"({"e1": [1.5, "0", "0"], "e2": ["0","1","0"]})");
  r = run({"diagnose", "--pencil", dir.write("p.json", kWorked), "--line", flt});
  CHECK(r.code == 2);
  CHECK(r.err.find("SchemaError: e1[0] is a float") != std::string::npos);

  auto missing = dir.write("missing.json", R"({"R": {"dim": 3, "m": []}})");
  r = run({"diagnose", "--pencil", missing, "--line", l});
  CHECK(r.code == 2);
  CHECK(r.err.find("R.m has 0 rows") != std::string::npos);

  auto nos = dir.write("nos.json", R"({"R": {"dim": 1, "m": [["1"]]}})");
  r = run({"diagnose", "--pencil", nos, "--line", l});
  CHECK(r.code == 2);
  CHECK(r.err.find("SchemaError: S is missing") != std::string::npos);

  r = run({"diagnose", "--pencil", dir.write("bad.json", "{not json"), "--line", l});
  CHECK(r.code == 2);
  CHECK(r.err.find("ParseError") != std::string::npos);

  r = run({"diagnose", "--pencil", dir.write("p.json", kWorked), "--line", l, "--field", "gfp:9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--field") != std::string::npos);

  auto wrongdim = dir.write("w.json", R"({"e1": ["1","0"], "e2": ["0","1"]})");
  r = run({"diagnose", "--pencil", dir.write("p.json", kWorked), "--line", wrongdim});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--scenario", "nonsense"}).code == 2);
  CHECK(run({"diagnose"}).code == 2);
  CHECK(run({"diagnose"}).err.find("--pencil is required") != std::string::npos);
  CHECK(run({"fuzz", "--trials", "many"}).code == 2);
  CHECK(run({"fuzz", "--field", "R"}).code == 2);
  Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("fuzz") != std::string::npos);
}

TEST_CASE("JSON codec round trips") {
  Field gf7 = Field::prime(7);
  CHECK(io::field_from_json(io::to_json(gf7)) == gf7);
  Field ext = Field::extension(Field::rationals(), q(-1));
  CHECK(io::field_from_json(io::to_json(ext)) == ext);
  Field tower = Field::extension(ext, ext.from_int(3));
  CHECK(io::field_from_json(io::to_json(tower)) == tower);

  CHECK(io::scalar_from_json("-6/4", Field::rationals(), "x") == q(-3, 2));
  CHECK(io::scalar_from_json(json(-6), Field::rationals(), "x") == q(-6));
  CHECK(io::scalar_from_json("-1", gf7, "x") == gf7.from_int(6));
  CHECK(io::scalar_from_json("1/2", gf7, "x") == gf7.from_int(4));
  CHECK(error_code([&] { io::scalar_from_json("1/7", gf7, "x"); }) == ErrorCode::InvariantError);
  CHECK(error_code([&] { io::scalar_from_json("1/0", Field::rationals(), "x"); }) == ErrorCode::InvariantError);
  CHECK(error_code([&] { io::scalar_from_json("abc", Field::rationals(), "x"); }) == ErrorCode::SchemaError);
  CHECK(error_code([&] { io::scalar_from_json(json(0.5), Field::rationals(), "x"); }) == ErrorCode::SchemaError);

  Scalar z = tower.from_parts(ext.from_parts(q(1), q(2)), ext.from_parts(q(-1, 3), q(0)));
  CHECK(io::scalar_from_json(io::to_json(z), tower, "z") == z);

  ProjPoint p = ProjPoint(q(3), q(4));
  CHECK(io::point_from_json(io::to_json(p), Field::rationals(), "p") == p);
  CHECK(io::point_from_json("inf", Field::rationals(), "p").is_infinity());
  CHECK(error_code([&] { io::point_from_json(json::array({"0", "0"}), Field::rationals(), "p"); }) ==
        ErrorCode::InvariantError);

  SymForm2 f(q(1), q(-1, 2), q(3));
  CHECK(io::form2_from_json(io::to_json(f), Field::rationals()) == f);
  Involution v(q(2), q(3), q(5));
  CHECK(io::involution_from_json(io::to_json(v), Field::rationals()) == v);

  Pencil pencil(SymFormN(Matrix{{q(1), q(2)}, {q(2), q(0)}}), SymFormN(Matrix{{q(0), q(1)}, {q(1), q(5)}}));
  Pencil back = io::pencil_from_json(io::to_json(pencil), Field::rationals());
  CHECK(back.r().entries() == pencil.r().entries());
  CHECK(back.s().entries() == pencil.s().entries());
  LineInPV line({q(1), q(0)}, {q(1), q(1)});
  LineInPV lback = io::line_from_json(io::to_json(line), Field::rationals());
  CHECK(lback.e1() == line.e1());
  CHECK(lback.e2() == line.e2());
}
