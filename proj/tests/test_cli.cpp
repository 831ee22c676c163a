#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "lowrank/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = lowrank::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kExceptionalF3 = R"({"ring":{"kind":"Fp","p":3},"b":1,"c":0,"m":1,"n":1,"y":0,"z":1})";

}  // namespace

TEST_CASE("cubic verify reports the case") {
  Run r = run({"cubic", "verify", kExceptionalF3});
  REQUIRE(r.code == 0);
  CHECK(r.json() == Json::parse(R"({"valid":true,"case":"exceptional"})"));

  r = run({"cubic", "verify", R"({"ring":"Z","b":0,"c":1,"m":1,"n":0,"y":0,"z":0})"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["valid"] == false);
  CHECK(r.json()["violated"] == Json::parse(R"(["cm = 0","m^2 = mz"])"));
}

TEST_CASE("cubic build on a violating tuple exits 1 naming the relation") {
  Run r = run({"cubic", "build", R"({"ring":"Z","b":0,"c":1,"m":1,"n":0,"y":0,"z":0})"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  Json e = r.error();
  CHECK(e["error"] == "relation");
  CHECK(e["violated"].size() == 2);
  CHECK(e["violated"][0] == "cm = 0");
}

TEST_CASE("malformed input exits 2") {
  CHECK(run({"cubic", "verify", "{not json"}).code == 2);
  CHECK(run({"cubic", "verify", R"({"ring":"Z","b":0})"}).code == 2);
  CHECK(run({"cubic", "verify", R"({"ring":{"kind":"Fp","p":4},"b":0,"c":0,"m":0,"n":0,"y":0,"z":0})"}).code == 2);
  CHECK(run({"cubic", "verify", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"census", "cubic", "--p", "4"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"cubic"}).code == 2);
  Run r = run({"alg", "assoc", R"({"ring":"Z","rank":2,"table":[[["1","0"]]]})"});
  CHECK(r.code == 2);
  CHECK(r.error()["error"] == "input");
}

TEST_CASE("help exits 0") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("census") != std::string::npos);
  CHECK(run({"cubic", "--help"}).code == 0);
}

TEST_CASE("guard errors exit 1") {
  ::setenv("LOWRANK_GUARD", "10", 1);
  Run r = run({"census", "cubic", "--p", "2"});
  ::unsetenv("LOWRANK_GUARD");
  CHECK(r.code == 1);
  CHECK(r.error()["error"] == "guard");
}

TEST_CASE("domain errors exit 1") {
  Run r = run({"cubic", "form", kExceptionalF3});
  CHECK(r.code == 1);
  CHECK(r.error()["error"] == "domain");
}

TEST_CASE("input from stdin and the --ring fallback") {
  Run r = run({"quad", "disc", "-", "--ring", "Q"}, R"({"t":"1/2","n":1})");
  REQUIRE(r.code == 0);
  CHECK(r.json()["discriminant"] == "-15/4");

  r = run({"quad", "disc", "--ring", R"({"kind":"Fp","p":5})", R"({"t":0,"n":2})"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["discriminant"] == "2");
  CHECK(r.json()["square_class"] == Json::parse(R"(["2","3"])"));
}

TEST_CASE("census cubic over F2") {
  Run r = run({"census", "cubic", "--p", "2"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["total"] == 64);
  CHECK(j["valid"] == 19);
  CHECK(j["verdict"] == "pass");
  CHECK(j["commutative_and_involution"] == 1);
}

TEST_CASE("census and probe commands") {
  Run q = run({"census", "quad", "--p", "5"});
  REQUIRE(q.code == 0);
  CHECK(q.json()["class_count"] == 3);
  CHECK(q.json()["matches_discriminant"] == true);

  Run e = run({"census", "exceptional", "--p", "3"});
  REQUIRE(e.code == 0);
  CHECK(e.json()["class_count"] == 2);

  Run m = run({"probe", "mn", "--p", "3", "--n", "3"});
  REQUIRE(m.code == 0);
  CHECK(m.json()["m2_adjoint_standard"] == true);
  CHECK(m.json()["diagonal_min_poly"]["coefficients"].size() == 4);
}

TEST_CASE("round trip: emitted algebras and involutions are accepted back") {
  Run built = run({"cubic", "build", kExceptionalF3});
  REQUIRE(built.code == 0);
  Run assoc = run({"alg", "assoc", built.out});
  REQUIRE(assoc.code == 0);
  CHECK(assoc.json()["associative"] == true);
  CHECK(assoc.json()["commutative"] == false);
  Run found = run({"inv", "find", built.out});
  REQUIRE(found.code == 0);
  CHECK(found.json()["found"] == true);

  Json inv_doc = found.json();
  inv_doc.erase("found");
  Run verified = run({"inv", "verify", inv_doc.dump()});
  REQUIRE(verified.code == 0);
  CHECK(verified.json()["involution"] == true);
  CHECK(verified.json()["standard"] == true);

  Run from_cubic = run({"cubic", "involution", kExceptionalF3});
  REQUIRE(from_cubic.code == 0);
  CHECK(from_cubic.json() == inv_doc);

  Json rebuilt = Json::parse(run({"inv", "find", built.out}).out);
  CHECK(rebuilt == found.json());
}

TEST_CASE("round trip: forms") {
  std::string form = R"({"ring":"Q","a":1,"b":0,"c":-1,"d":0})";
  Run acted = run({"form", "act", R"({"form":)" + form + R"(,"g":[["1","1"],["0","1"]]})"});
  REQUIRE(acted.code == 0);
  Run disc = run({"form", "disc", acted.out});
  REQUIRE(disc.code == 0);
  CHECK(disc.json()["discriminant"] == "4");

  Run to_form = run({"cubic", "form", R"({"ring":"Z","b":1,"c":1,"m":0,"n":0,"y":1,"z":1})"});
  REQUIRE(to_form.code == 0);
  CHECK(to_form.json()["a"] == "-1");
  Run alg = run({"form", "algebra", to_form.out});
  REQUIRE(alg.code == 0);
  CHECK(run({"alg", "assoc", alg.out}).json()["associative"] == true);
}

TEST_CASE("alg assoc reports a one-based witness") {
  // e2 e2 = e2 but e2 e3 = e3 and e3 e2 = 0 with e3 e3 = e2: not associative.
  std::string doc = R"({"ring":"Z","rank":3,"table":[
    [["1","0","0"],["0","1","0"],["0","0","1"]],
    [["0","1","0"],["0","1","0"],["0","0","1"]],
    [["0","0","1"],["0","0","0"],["0","1","0"]]]})";
  Run r = run({"alg", "assoc", doc});
  REQUIRE(r.code == 0);
  CHECK(r.json()["associative"] == false);
  for (const auto& idx : r.json()["witness"]) {
    CHECK(idx.get<int>() >= 1);
    CHECK(idx.get<int>() <= 3);
  }
}

TEST_CASE("inv verify names the failing axiom") {
  std::string doc = R"({"ring":"Z","rank":2,"table":[[["1","0"],["0","1"]],[["0","1"],["-1","0"]]],
    "images":[["1","0"],["0","1"]]})";
  Run r = run({"inv", "verify", doc});
  REQUIRE(r.code == 0);
  CHECK(r.json()["involution"] == true);
  CHECK(r.json()["standard"] == false);

  std::string bad = R"({"ring":"Z","rank":2,"table":[[["1","0"],["0","1"]],[["0","1"],["-1","0"]]],
    "images":[["1","0"],["1","1"]]})";
  r = run({"inv", "verify", bad});
  REQUIRE(r.code == 0);
  CHECK(r.json()["involution"] == false);
  CHECK(r.json()["violated"] == "order");
}

TEST_CASE("quad commands") {
  Run iso = run({"quad", "iso", R"({"ring":"Z","a":{"t":1,"n":0},"b":{"t":3,"n":2}})"});
  REQUIRE(iso.code == 0);
  CHECK(iso.json()["isomorphic"] == true);
  CHECK(iso.json()["x_image"] == Json::parse(R"(["-1","1"])"));

  Run f2 = run({"quad", "iso", "--bruteforce", R"({"ring":{"kind":"Fp","p":2},"a":{"t":1,"n":1},"b":{"t":1,"n":0}})"});
  REQUIRE(f2.code == 0);
  CHECK(f2.json()["isomorphic"] == false);
  CHECK(f2.json()["method"] == "bruteforce");

  Run as = run({"quad", "artin-schreier", R"({"ring":{"kind":"Fp","p":2},"t":1,"n":1})"});
  REQUIRE(as.code == 0);
  CHECK(as.json()["separable"] == true);
  CHECK(as.json()["class_count"] == 2);

  Run split = run({"quad", "split", R"({"ring":"Z","t":1,"n":0,"element":[2,5]})"});
  REQUIRE(split.code == 0);
  CHECK(split.json()["image"] == Json::parse(R"(["7","2"])"));
}

TEST_CASE("cubic witness and matrix-rep") {
  Run w = run({"cubic", "witness", kExceptionalF3});
  REQUIRE(w.code == 0);
  CHECK(w.json()["t"]["I"] == "1");

  Run m = run({"cubic", "matrix-rep", R"({"ring":"Z","b":2,"c":3,"m":0,"n":0,"y":-1,"z":4})"});
  REQUIRE(m.code == 0);
  CHECK(m.json()["identities_hold"] == true);
  CHECK(m.json()["I"].size() == 3);
}

TEST_CASE("inv trace-norm") {
  std::string doc = R"({"ring":"Q","rank":2,"table":[[["1","0"],["0","1"]],[["0","1"],["-1","0"]]],
    "images":[["1","0"],["0","-1"]],"element":["3","4"]})";
  Run r = run({"inv", "trace-norm", doc});
  REQUIRE(r.code == 0);
  CHECK(r.json()["trace"] == "6");
  CHECK(r.json()["norm"] == "25");
}

TEST_CASE("alg charpoly and degree") {
  std::string doc = R"({"ring":{"kind":"Fp","p":3},"rank":2,"table":[[["1","0"],["0","1"]],[["0","1"],["0","1"]]],
    "element":["0","1"]})";
  Run r = run({"alg", "charpoly", doc});
  REQUIRE(r.code == 0);
  CHECK(r.json()["min_poly"]["coefficients"] == Json::parse(R"(["0","2","1"])"));
  Run d = run({"alg", "degree", doc});
  REQUIRE(d.code == 0);
  CHECK(d.json()["degree"] == 2);
}

TEST_CASE("probe degree-product") {
  std::string f3 = R"({"rank":1,"table":[[["1"]]]})";
  Run r = run({"probe", "degree-product", R"({"ring":{"kind":"Fp","p":3},"a":)" + f3 + R"(,"b":)" + f3 + "}"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["deg_product"] == 2);
  CHECK(r.json()["additive"] == true);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"census", "cubic", "--p", "3", "--classes"},
           {"census", "exceptional", "--p", "2"},
           {"cubic", "build", kExceptionalF3},
           {"census", "cubic", "--p", "2", "--format", "table"}}) {
    Run a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("table format") {
  Run r = run({"cubic", "verify", kExceptionalF3, "--format", "table"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("case") != std::string::npos);
  CHECK(r.out.find("exceptional") != std::string::npos);
  CHECK(run({"cubic", "verify", kExceptionalF3, "--format", "xml"}).code == 2);
}
