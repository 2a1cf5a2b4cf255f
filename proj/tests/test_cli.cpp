// End-to-end tests of the installed command surface: golden outputs,
// exit codes, and schema conformance of every JSON-emitting subcommand.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PENNEY_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

json load_schema(const std::string& name) {
  std::ifstream in(std::string(PENNEY_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

// Minimal draft-07 subset validator: enough for the shipped schemas
// (type, required, properties, items, enum, const, pattern, minimum,
// allOf, oneOf, not, if/then, $ref within the shipped documents).
class Validator {
 public:
  explicit Validator(const std::vector<std::string>& files) {
    for (const auto& f : files) docs_[f] = load_schema(f);
  }

  bool validate(const json& value, const std::string& doc) {
    return check(value, docs_.at(doc), doc);
  }

 private:
  std::map<std::string, json> docs_;

  const json resolve(const std::string& ref, const std::string& current,
                     std::string& doc_out) {
    std::string doc = current, pointer = ref;
    if (auto hash = ref.find('#'); hash != std::string::npos) {
      if (hash > 0) doc = ref.substr(0, hash);
      pointer = ref.substr(hash + 1);
    }
    doc_out = doc;
    json node = docs_.at(doc);
    std::stringstream ss(pointer);
    std::string part;
    while (std::getline(ss, part, '/')) {
      if (part.empty()) continue;
      node = node.at(part);
    }
    return node;
  }

  bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  bool check(const json& value, const json& schema, const std::string& doc) {
    if (schema.is_boolean()) return schema.get<bool>();
    if (schema.contains("$ref")) {
      std::string target_doc;
      json target = resolve(schema["$ref"], doc, target_doc);
      if (!check(value, target, target_doc)) return false;
    }
    if (schema.contains("type") && !type_matches(value, schema["type"])) return false;
    if (schema.contains("const") && value != schema["const"]) return false;
    if (schema.contains("enum")) {
      bool hit = false;
      for (const auto& e : schema["enum"])
        if (value == e) hit = true;
      if (!hit) return false;
    }
    if (schema.contains("pattern") && value.is_string()) {
      if (!std::regex_search(value.get<std::string>(),
                             std::regex(schema["pattern"].get<std::string>())))
        return false;
    }
    if (schema.contains("minimum") && value.is_number()) {
      if (value.get<double>() < schema["minimum"].get<double>()) return false;
    }
    if (value.is_object()) {
      if (schema.contains("required"))
        for (const auto& key : schema["required"])
          if (!value.contains(key.get<std::string>())) return false;
      if (schema.contains("properties"))
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
          if (value.contains(it.key()) && !check(value.at(it.key()), it.value(), doc))
            return false;
    }
    if (value.is_array() && schema.contains("items")) {
      for (const auto& item : value)
        if (!check(item, schema["items"], doc)) return false;
    }
    if (schema.contains("allOf"))
      for (const auto& sub : schema["allOf"])
        if (!check(value, sub, doc)) return false;
    if (schema.contains("oneOf")) {
      int hits = 0;
      for (const auto& sub : schema["oneOf"])
        if (check(value, sub, doc)) ++hits;
      if (hits != 1) return false;
    }
    if (schema.contains("not") && check(value, schema["not"], doc)) return false;
    if (schema.contains("if")) {
      if (check(value, schema["if"], doc) && schema.contains("then"))
        if (!check(value, schema["then"], doc)) return false;
    }
    return true;
  }
};

Validator& validator() {
  static Validator v({"common.schema.json", "win.schema.json", "corr.schema.json",
                      "check.schema.json", "oracle.schema.json",
                      "search.schema.json", "census.schema.json"});
  return v;
}

json run_json(const std::string& args, const std::string& schema) {
  RunResult r = run(args);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(validator().validate(j, schema));
  return j;
}

}  // namespace

TEST_CASE("win: worked example with exact evaluation") {
  json j = run_json("win 1101110 0110 --at 1/2", "win.schema.json");
  CHECK(j["value"] == "5/72");
  CHECK(j["win"]["text"] == "(1 + 1p^1 - 1p^2)*p^4 / (1 + 1p^3)");
  CHECK(j["symmetry"]["odd"] == false);
}

TEST_CASE("win: decimal probabilities convert by literal digits") {
  json j = run_json("win 1000 0110 --at 0.45", "win.schema.json");
  CHECK(j["at"] == "9/20");
  CHECK(j["value"] == "11/20");  // 1 - p at p = 9/20
  json j2 = run_json("win 1000 0110 --at 0.045", "win.schema.json");
  CHECK(j2["at"] == "9/200");
}

TEST_CASE("win: domain errors exit 1 with a one-line message") {
  RunResult r = run("win 11 11");
  CHECK(r.exit_code == 1);
  CHECK(r.out.substr(0, 7) == "error: ");
  CHECK(r.out.find("identical") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);

  CHECK(run("win 10 210").exit_code == 1);
  CHECK(run("win 110 011 --at 0/1").exit_code == 1);
  CHECK(run("win 110 011 --at 1/1").exit_code == 1);
  CHECK(run("win 110 011 --at 5/3").exit_code == 1);
  CHECK(run("win 0101 01").exit_code == 1);
}

TEST_CASE("corr: worked example tables") {
  json j = run_json("corr 1101110 0110", "corr.schema.json");
  CHECK(j["vv"]["lengths"] == json::array({3, 7}));
  CHECK(j["wv"]["lengths"] == json::array({3}));
  CHECK(j["d_vw"] == json::array({"110111"}));
  CHECK(j["f"] == json::array({"0", "011", "1101", "110111"}));
}

TEST_CASE("check: verdicts and witnesses") {
  CHECK(run_json("check r 000100 001110", "check.schema.json")["verdict"] == true);
  CHECK(run_json("check r 1000 0110", "check.schema.json")["verdict"] == false);

  json e = run_json("check e 01100101 01010110", "check.schema.json");
  CHECK(e["verdict"] == true);
  CHECK(e["witness"]["a"] == "0110");
  CHECK(e["witness"]["b"] == "0101");

  json phi = run_json("check phi 01100101 01010110 --max-len 16", "check.schema.json");
  CHECK(phi["verdict"] == true);
  CHECK(phi["omega_v_count"] == phi["omega_w_count"]);

  // no witness: phi is undefined, a domain error
  CHECK(run("check phi 1100 1010").exit_code == 1);
  CHECK(run("check q 1100 1010").exit_code == 1);
}

TEST_CASE("graph: DOT on stdout matches the figure labels") {
  RunResult r = run("graph 1100 1010");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(r.out.find("(1100,100)") != std::string::npos);
  CHECK(r.out.find("(10,1010)") != std::string::npos);
  // deterministic
  CHECK(run("graph 1100 1010").out == r.out);
}

TEST_CASE("oracle: exact fractions for absorption and hitting times") {
  json j = run_json("oracle 1100 1010 --at 1/2", "oracle.schema.json");
  CHECK(j["absorption_win"] == "5/9");  // (1 + 1/4)/(2 + 1/4)
  json single = run_json("oracle 11 --at 1/2", "oracle.schema.json");
  CHECK(single["expected_hitting_time"] == "6");
}

TEST_CASE("search: theorem checks pass and report JSON validates") {
  json j = run_json("search longer-by-one --n 3", "search.schema.json");
  CHECK(j["pass"] == true);
  json g = run_json("search gap-bound --n 4 --k 1", "search.schema.json");
  CHECK(g["pass"] == true);
  json t = run_json("search threshold --k 2", "search.schema.json");
  CHECK(t.contains("lo"));
  json b = run_json("search bounds --k 1 --at 0.45", "search.schema.json");
  CHECK(b["high_branch"] == "20/31");
  CHECK(b["applicable"] == 1);
  json d = run_json("search density --n 4", "search.schema.json");
  CHECK(d["r_density"] == "5/32");
  json a = run_json("search argmax --n 4 --k 1 --at 1/10", "search.schema.json");
  CHECK(a["matches_conjecture"] == true);
  CHECK(run("search bogus").exit_code == 1);
  CHECK(run("search density --n 13").exit_code == 1);  // long run unconfirmed
}

TEST_CASE("search curve: CSV header and shape") {
  RunResult r = run("search curve --max-len 5 --grid 1/4,2/5");
  CHECK(r.exit_code == 0);
  std::stringstream ss(r.out);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line == "p,proportion,ci_half_width,n_pairs");
  int rows = 0;
  while (std::getline(ss, line)) ++rows;
  CHECK(rows == 2);

  // JSON variant validates against the search schema
  json j = run_json("search curve --max-len 5 --grid 1/4 --format json",
                    "search.schema.json");
  CHECK(j["points"].size() == 1);

  // sampled runs echo the seed and are reproducible
  RunResult s1 = run("search curve --max-len 10 --grid 1/4 --samples 2000 --seed 7");
  RunResult s2 = run("search curve --max-len 10 --grid 1/4 --samples 2000 --seed 7");
  CHECK(s1.out == s2.out);
}

TEST_CASE("census: n = 4 buckets validate and include the named pairs") {
  json j = run_json("census --n 4", "census.schema.json");
  CHECK(j["pairs_checked"] == 240);
  CHECK(j["even_only"]["total"].get<int>() > 0);
  CHECK(j["weight_invariant_ok"] == true);
}
