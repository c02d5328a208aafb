#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "tf/cli.hpp"

using namespace tft;
using nlohmann::json;

namespace {

// Subset of JSON Schema used by schema/report.schema.json: type, required,
// properties, items, enum.
bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

void validate(const json& v, const json& schema, const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = has_type(v, t.get<std::string>());
    for (const auto& alt : t.is_array() ? t : json::array()) ok = ok || has_type(v, alt.get<std::string>());
    if (!ok) errors.push_back(path + ": wrong type");
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": value " + v.dump() + " not allowed");
  }
  if (v.is_object()) {
    for (const auto& key : schema.value("required", json::array())) {
      if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
    }
    const json props = schema.value("properties", json::object());
    for (const auto& [key, sub] : props.items()) {
      if (v.contains(key)) validate(v[key], sub, path + "." + key, errors);
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], schema["items"], path + "[" + std::to_string(i) + "]", errors);
  }
}

json schema() {
  std::ifstream in(std::string(TF_SOURCE_DIR) + "/schema/report.schema.json");
  return json::parse(in);
}

void check_schema(const tf::Report& r) {
  std::vector<std::string> errors;
  validate(r.json, schema(), "$", errors);
  for (const auto& e : errors) FAIL_CHECK(e);
  CHECK(errors.empty());
}

json find_op(const tf::Report& r, const std::string& op, const json& match = json::object()) {
  for (const auto& o : r.json["operations"]) {
    if (o["op"] != op) continue;
    bool ok = true;
    for (const auto& [k, v] : match.items()) ok = ok && o["inputs"].value(k, json()) == v;
    if (ok) return o;
  }
  FAIL("operation not found: " << op);
  return {};
}

tf::RunOptions opts() { return {}; }

std::string audit_status(const tf::Report& r) { return r.json["operations"][0]["result"]["status"]; }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

int run_tool(const std::string& args) {
  const char* tool = std::getenv("TF_TEST_TOOL");
  REQUIRE(tool != nullptr);
  int rc = std::system((std::string(tool) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("session grammar") {
  auto ast = tf::parse_session("char 32003; ring x y; ideal I = y^2 - x^3;");
  CHECK(ast.characteristic == 32003u);
  CHECK(ast.names == std::vector<std::string>{"x", "y"});
  REQUIRE(ast.ideals.size() == 1);
  CHECK(ast.ideals[0].name == "I");
  auto s = tf::instantiate(ast, K(32003));
  CHECK(s.ideal("I") == ideal(s.ring, "y^2 - x^3"));

  auto v = tf::parse_session("ring x1..x6; ideal I = minors 2 symmetric 3;");
  CHECK(v.names.size() == 6);
  auto vs = tf::instantiate(v, K());
  CHECK(vs.ideal("I").generators().size() == 6);

  auto m = tf::parse_session(
      "# comment\nring a b c d; // trailing\nmatrix M = [[a, b, c], [b, c, d]];\n"
      "ideal J = minors 2 M; ideal K = a, b;\ncheck rees J; check ft K 1;");
  auto ms = tf::instantiate(m, K());
  CHECK(ms.matrices.at("M").cols() == 3);
  CHECK(ms.ideal("J").generators().size() == 3);
  CHECK(m.checks.size() == 2);
  CHECK(m.checks[1].args == std::vector<std::string>{"K", "1"});
  CHECK_THROWS_AS(ms.ideal("Z"), tf::Error);

  auto w = tf::parse_session("ring x y weights 2 3; ideal I = y^2 - x^3;");
  CHECK(w.weights == std::vector<int>{2, 3});
  CHECK(tf::instantiate(w, K()).ring->order().kind == tf::OrderKind::WeightedDegRevLex);
}

TEST_CASE("positioned parse errors") {
  auto pos = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      auto ast = tf::parse_session(text);
      tf::instantiate(ast, K());
    } catch (const tf::ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(pos("ring x y;\nideal I =;") == std::pair<std::size_t, std::size_t>{2, 10});
  CHECK(pos("ring x y;\nideal I = x + z;").first == 2);
  CHECK(pos("ring x y;\nideal I = x + z;").second == 15);
  CHECK(pos("ring x x;").first == 1);
  CHECK(pos("ring x y; char 7;").first == 1);
  CHECK(pos("char 12; ring x;").first == 1);
  CHECK(pos("ring x1..x3;\nideal I = minors 2 symmetric 3;").first == 2);
  CHECK(pos("ring x y;\nfrobnicate;").first == 2);
  CHECK(pos("ring x y;\nideal I = x\n") .first == 2);
}

TEST_CASE("status table") {
  using S = tf::ItemState;
  auto mk = [](std::vector<S> h, std::vector<S> c) {
    tf::AuditReport r;
    for (auto s : h) r.hypotheses.push_back({"h", s, {}});
    for (auto s : c) r.conclusions.push_back({"c", s, {}});
    return tf::derive_status(r);
  };
  CHECK(mk({S::Holds, S::Fails}, {S::Fails}) == tf::Status::HypothesisNotMet);
  CHECK(mk({S::Unknown, S::Fails}, {}) == tf::Status::HypothesisNotMet);
  CHECK(mk({S::Unknown}, {S::Fails}) == tf::Status::NotCheckable);
  CHECK(mk({S::Assumed, S::Holds}, {S::Fails, S::Unknown}) == tf::Status::Inconsistent);
  CHECK(mk({S::Holds}, {S::Unknown, S::Predicted}) == tf::Status::NotCheckable);
  CHECK(mk({S::Holds}, {S::Predicted, S::Holds}) == tf::Status::PaperPredicts);
  CHECK(mk({S::Holds, S::Assumed}, {S::Holds}) == tf::Status::Consistent);
  CHECK(tf::exit_code(tf::Status::Complete) == 0);
  CHECK(tf::exit_code(tf::Status::Consistent) == 0);
  CHECK(tf::exit_code(tf::Status::PaperPredicts) == 0);
  CHECK(tf::exit_code(tf::Status::HypothesisNotMet) == 2);
  CHECK(tf::exit_code(tf::Status::NotCheckable) == 3);
  CHECK(tf::exit_code(tf::Status::Inconsistent) == 1);
  CHECK(tf::exit_code(tf::Status::Error) == 1);
  CHECK(tf::status_name(tf::Status::PaperPredicts) == "paper-predicts");
}

TEST_CASE("corpus sources") {
  for (const auto& n : tf::corpus_names()) CHECK(tf::corpus_source(n));
  CHECK(tf::corpus_source("fermat-3-4"));
  CHECK_FALSE(tf::corpus_source("fermat-1-4"));
  CHECK_FALSE(tf::corpus_source("catalecticant-5"));
  CHECK_THROWS_AS(tf::run_example("nope", opts()), tf::Error);
}

TEST_CASE("battery on the cusp") {
  auto r = tf::run_example("cusp", opts());
  check_schema(r);
  CHECK(r.status == tf::Status::Complete);
  CHECK(r.json["session"]["characteristic"] == 0);
  auto rees = find_op(r, "rees_algebra");
  CHECK(rees["result"]["linear_type"] == false);
  CHECK(rees["citations"].size() > 0);
  CHECK(find_op(r, "ft_check", {{"t", 1}})["result"]["verdict"] == false);
  CHECK(find_op(r, "is_cohen_macaulay", {{"algebra", "rees"}})["result"]["value"] == false);
  for (const auto& o : r.json["operations"]) {
    CHECK(o["timing"].contains("s_pairs"));
    CHECK_FALSE(o["timing"].contains("wall_seconds"));
  }
}

TEST_CASE("non-graded input degrades to not-checkable") {
  auto r = tf::run_example("node", opts());
  check_schema(r);
  CHECK(r.status == tf::Status::NotCheckable);
  CHECK(find_op(r, "rees_algebra")["result"]["linear_type"] == false);
  CHECK(find_op(r, "is_cohen_macaulay", {{"algebra", "base"}})["result"]["status"] == "not-checkable");
}

TEST_CASE("limits produce not-checkable, never a crash") {
  auto o = opts();
  o.timeout_seconds = 1e-9;
  auto r = tf::run_example("veronese", o);
  check_schema(r);
  CHECK(r.status == tf::Status::NotCheckable);
  auto d = opts();
  d.max_degree = 2;
  auto s = tf::run_example("veronese", d);
  CHECK(s.status == tf::Status::NotCheckable);
  CHECK(find_op(s, "mu_mod_cube")["result"]["value"] == 6);
}

TEST_CASE("check statements and error reports") {
  auto r = tf::evaluate("ring x y z;\nideal I = x*y - z^2;\ncheck cm;\ncheck edim 1;\ncheck betti;\ncheck hilbert;\n"
                        "check depth;\ncheck koszul_h1;\ncheck spread;\ncheck quadric_spread;\ncheck gorenstein;",
                        "inline", opts());
  check_schema(r);
  CHECK(r.status == tf::Status::Complete);
  CHECK(r.json["operations"].size() == 9);
  CHECK(find_op(r, "is_cohen_macaulay")["result"]["value"] == true);
  CHECK(find_op(r, "edim_criterion")["result"]["verdict"] == true);  // edim 3 <= 2 * 2 - 1 at the origin
  CHECK(find_op(r, "depth")["result"]["depth"] == 2);
  auto bad = tf::evaluate("ring x y;\nideal I =;", "bad", opts());
  check_schema(bad);
  CHECK(bad.status == tf::Status::Error);
  CHECK(bad.json["operations"][0]["result"]["reason"].get<std::string>().rfind("2:10:", 0) == 0);
  auto unknown = tf::evaluate("ring x;\nideal I = x;\ncheck frobnicate;", "u", opts());
  CHECK(unknown.status == tf::Status::Error);
  auto over = opts();
  over.characteristic = 0;
  auto q = tf::evaluate("char 7; ring x y; ideal I = x*y;", "q", over);
  CHECK(q.json["session"]["characteristic"] == 0);
}

TEST_CASE("text rendering") {
  auto r = tf::evaluate("ring x y; ideal I = x*y; check cm;", "demo", opts());
  auto t = r.text();
  CHECK(t.find("session demo") == 0);
  CHECK(t.find("is_cohen_macaulay") != std::string::npos);
  auto d = r.dump_json();
  CHECK(d.back() == '\n');
  CHECK(json::parse(d) == r.json);
}

TEST_CASE("audits") {
  auto src = [](const std::string& n) { return *tf::corpus_source(n); };
  auto ver = tf::audit("reduced-vs-torsionfree", src("veronese"), "veronese", opts());
  check_schema(ver);
  CHECK(ver.status == tf::Status::HypothesisNotMet);
  CHECK(audit_status(ver) == "hypothesis-not-met");
  CHECK(ver.json["operations"][0]["citations"] == json::array({"reduced-vs-torsionfree"}));

  CHECK(tf::audit("cm-rees-forces-F1", src("cusp"), "cusp", opts()).status == tf::Status::Consistent);
  CHECK(tf::audit("codim2-linear-type", src("generic-2x3"), "g", opts()).status == tf::Status::Consistent);
  CHECK(tf::audit("ecodim2-omega-cm", src("generic-2x3"), "g", opts()).status == tf::Status::Consistent);
  CHECK(tf::audit("cy-complete-intersection", src("fermat-5-5"), "f", opts()).status == tf::Status::PaperPredicts);
  CHECK(tf::audit("codim3-gorenstein", src("catalecticant-1"), "c", opts()).status == tf::Status::HypothesisNotMet);
  CHECK(tf::audit("reduced-vs-torsionfree", src("cusp"), "cusp", opts()).status == tf::Status::Consistent);
  CHECK(tf::audit("cy-ecodim3", src("fermat-5-5"), "f", opts()).status == tf::Status::HypothesisNotMet);
  CHECK_THROWS_AS(tf::audit("no-such-tag", src("cusp"), "cusp", opts()), tf::Error);

  // Every tag runs to a status on every corpus example without throwing.
  for (const auto& tag : tf::audit_tags()) {
    for (const auto& n : tf::corpus_names()) {
      CAPTURE(tag);
      CAPTURE(n);
      auto r = tf::audit(tag, src(n), n, opts());
      CHECK(r.status != tf::Status::Error);
      CHECK(r.status != tf::Status::Inconsistent);
    }
  }
}

TEST_CASE("reports are deterministic and the cache does not change them") {
  auto dir = std::filesystem::temp_directory_path() / "tf-cli-cache";
  std::filesystem::remove_all(dir);
  tf::set_gb_cache_enabled(false);
  auto a = tf::run_example("catalecticant-2", opts()).dump_json();
  auto b = tf::run_example("catalecticant-2", opts()).dump_json();
  CHECK(a == b);
  tf::set_gb_cache_enabled(true);
  tf::set_gb_cache_directory(dir.string());
  auto cold = tf::run_example("catalecticant-2", opts());
  auto warm = tf::run_example("catalecticant-2", opts());
  // A hit credits the recorded work counters, so even timing agrees.
  CHECK(cold.dump_json() == a);
  CHECK(warm.dump_json() == a);
  tf::set_gb_cache_directory("");
  tf::set_gb_cache_enabled(false);
  std::filesystem::remove_all(dir);
}

TEST_CASE("command-line exit codes") {
  auto ver = write_temp("tf-ver.tf", *tf::corpus_source("veronese"));
  auto g23 = write_temp("tf-g23.tf", *tf::corpus_source("generic-2x3"));
  auto bad = write_temp("tf-bad.tf", "ring x y;\nideal I =;\n");
  CHECK(run_tool("list") == 0);
  CHECK(run_tool("run cusp --no-cache") == 0);
  CHECK(run_tool("run node --no-cache --json") == 3);
  CHECK(run_tool("audit reduced-vs-torsionfree " + ver.string() + " --no-cache") == 2);
  CHECK(run_tool("audit codim2-linear-type " + g23.string() + " --no-cache") == 0);
  CHECK(run_tool("eval " + bad.string() + " --no-cache") == 1);
  CHECK(run_tool("run nope --no-cache") == 1);
  CHECK(run_tool("audit reduced-vs-torsionfree /nonexistent/file --no-cache") == 1);
  CHECK(run_tool("run cusp --char 4 --no-cache") == 1);
}
