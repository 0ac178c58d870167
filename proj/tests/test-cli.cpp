#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "ordsg/cli.hpp"

namespace ordsg {

  namespace {
    RunResult run_json(char const* text) {
      return run(run_config_from_json(Json::parse(text)));
    }

    Json without_timing(Json j) {
      j.erase("timing-ms");
      return j;
    }
  }  // namespace

  TEST_CASE("config: unknown keys and bad types are rejected", "[cli]") {
    REQUIRE_THROWS_AS(run_config_from_json(Json::parse(R"({"operation":"product","colour":1})")),
                      InvalidArgument);
    REQUIRE_THROWS_AS(run_config_from_json(Json::parse(R"({"kmin":"two"})")),
                      InvalidArgument);
    REQUIRE_THROWS_AS(run_config_from_json(Json::parse(R"({"kmin":-1})")),
                      InvalidArgument);
    REQUIRE_THROWS_AS(run_config_from_json(Json::parse("[]")), InvalidArgument);
  }

  TEST_CASE("config: round trip", "[cli]") {
    auto j = Json::parse(R"({"operation":"scan theorem","instance":"free_monoid",
      "alphabet-size":2,"seed":4,"cap-product":10,"cap-enum":99,"format":"text",
      "max-word-len":2,"kmin":2,"kmax":3})");
    auto c = run_config_from_json(j);
    REQUIRE(run_config_to_json(c) == j);
  }

  TEST_CASE("validate", "[cli]") {
    RunConfig c;
    c.operation = "frobnicate";
    REQUIRE_THROWS_AS(validate(c), InvalidArgument);
    c.operation = "product";
    REQUIRE_THROWS_AS(validate(c), InvalidArgument);  // no set
    c.set = Json::array({"a"});
    REQUIRE_NOTHROW(validate(c));
    c.y = Json("a");
    REQUIRE_THROWS_AS(validate(c), InvalidArgument);  // y not for product
    c.y.reset();
    c.instance = "free_group";
    REQUIRE_THROWS_AS(validate(c), InvalidArgument);
    c.instance = "free_monoid";
    c.format   = "xml";
    REQUIRE_THROWS_AS(validate(c), InvalidArgument);

    RunConfig s;
    s.operation = "scan theorem";
    s.kmin      = 1;
    REQUIRE_THROWS_AS(validate(s), InvalidArgument);
    s.kmin     = 2;
    s.instance = "upper_triangular";
    REQUIRE_THROWS_AS(validate(s), InvalidArgument);  // needs a universe
    s.universe_sample = 10;
    REQUIRE_NOTHROW(validate(s));
    s.max_word_len = 2;
    REQUIRE_THROWS_AS(validate(s), InvalidArgument);

    RunConfig b;
    b.operation = "bound";
    b.kind      = "ys-sy";
    b.set       = Json::array({"a"});
    REQUIRE_THROWS_AS(validate(b), InvalidArgument);  // y missing
    b.y = Json("b");
    REQUIRE_NOTHROW(validate(b));
    b.sizes = Json::array({1});
    REQUIRE_THROWS_AS(validate(b), InvalidArgument);
  }

  TEST_CASE("run: product example", "[cli]") {
    auto r = run_json(R"({"operation":"product","sets":[["a","b"],["a","b"]]})");
    REQUIRE(r.status == 0);
    REQUIRE(r.report["result"]["product"].dump() == R"(["aa","ab","ba","bb"])");
    REQUIRE(r.report["violations"] == 0);
    REQUIRE(r.report.contains("timing-ms"));
    REQUIRE(r.report["config"]["operation"] == "product");
  }

  TEST_CASE("run: scan theorem example", "[cli]") {
    auto r = run_json(R"({"operation":"scan theorem","max-word-len":3,"kmin":2,"kmax":4})");
    REQUIRE(r.status == 0);
    REQUIRE(r.report["violations"] == 0);
    REQUIRE(r.report["result"]["report"]["subsets-examined"] == 1925);
  }

  TEST_CASE("run: reports are stable modulo timing", "[cli]") {
    char const* cfg = R"({"operation":"laws","instance":"upper_triangular","dim":2,
                          "trials":200,"seed":3})";
    auto a = run_json(cfg), b = run_json(cfg);
    REQUIRE(without_timing(a.report).dump() == without_timing(b.report).dump());
    auto c = run_config_from_json(Json::parse(
        R"({"operation":"scan theorem","max-word-len":3})"));
    auto d = c;
    d.jobs = 3;
    REQUIRE(without_timing(run(c).report).dump()
            == without_timing(run(d).report).dump());
  }

  TEST_CASE("run: witness pagano", "[cli]") {
    auto r = run_json(R"({"operation":"witness pagano","n":2})");
    REQUIRE(r.status == 0);
    REQUIRE(r.report["result"]["alpha"].dump() == R"([["1","1"],["1","1"]])");
    REQUIRE(r.report["result"]["alpha^2"].dump() == R"([["2","2"],["2","2"]])");
    REQUIRE(run_json(R"({"operation":"witness pagano","n":1})").status == 2);
  }

  TEST_CASE("run: status codes", "[cli]") {
    // violations on a non-orderable instance
    REQUIRE(run_json(R"({"operation":"laws","instance":"left_zero","trials":50})").status
            == 1);
    REQUIRE(run_json(R"({"operation":"verdict","instance":"left_zero","set":["p","q"]})")
                .status
            == 1);
    // cap exceeded
    auto cap = run_json(R"({"operation":"scan theorem","max-word-len":4,"cap-enum":100})");
    REQUIRE(cap.status == 2);
    REQUIRE(cap.report["error"].get<std::string>().find("cap") != std::string::npos);
    // value and syntax errors
    REQUIRE(run_json(R"({"operation":"verdict","set":["abc"]})").status == 2);
    REQUIRE(run_json(R"({"operation":"verdict","set":["a-"]})").status == 2);
    REQUIRE(run_json(R"({"operation":"verdict","instance":"upper_triangular","dim":2,
                         "set":[[["1","0"],["0","3"]]]})").status == 2);
    // precondition
    REQUIRE(run_json(R"({"operation":"bound","kind":"disjoint","set":["a"],"y":"aa"})")
                .status
            == 2);
  }

  TEST_CASE("run: every operation on a shipped instance", "[cli]") {
    char const* cfgs[] = {
        R"({"operation":"bound","kind":"superadditivity","sets":[["a","b"],["a"]]})",
        R"({"operation":"bound","kind":"ys-sy","set":["a","aa"],"y":"b"})",
        R"({"operation":"bound","kind":"disjoint","set":["a","aa"],"y":"b"})",
        R"({"operation":"bound","kind":"union","set":["a","aa"],"y":"b"})",
        R"({"operation":"bound","kind":"sharpness","a":"ab","sizes":[2,2,2]})",
        R"({"operation":"verdict","set":["a","b"]})",
        R"({"operation":"centralizer","set":["ab"],"max-word-len":2})",
        R"({"operation":"normalizer","set":["a","b"]})",
        R"({"operation":"chain","a":"b","b":"a","n":4})",
        R"({"operation":"powerscan","a":"a","b":"b"})",
        R"({"operation":"period","a":"ab"})",
        R"({"operation":"scan freiman","max-word-len":2,"kmax":3})",
        R"({"operation":"laws","instance":"semigroup_semiring","trials":50})",
        R"({"operation":"laws","instance":"nat_add","trials":50})",
        R"({"operation":"normalizer","instance":"nat_add","set":["2"],"universe":[1,2,3]})",
        R"({"operation":"centralizer","instance":"lower_triangular","dim":2,
            "set":[[["1","0"],["1","1"]]],"universe-sample":5})",
    };
    for (auto cfg : cfgs) {
      INFO(cfg);
      auto r = run_json(cfg);
      INFO(r.report.dump());
      REQUIRE(r.status == 0);
    }
    auto chain = run_json(cfgs[8]);
    REQUIRE(chain.report["result"]["note"] == "a and b swapped so that ab < ba");
    REQUIRE(chain.report["result"]["result"]["chain"].dump()
            == R"(["aaaab","aaaba","aabaa","abaaa","baaaa"])");
  }

  TEST_CASE("batch", "[cli]") {
    auto doc = Json::parse(R"([
      {"operation":"product","set":["a","b"]},
      {"operation":"laws","instance":"left_zero","trials":10}
    ])");
    auto r = run_batch(doc);
    REQUIRE(r.status == 1);
    REQUIRE(r.report["result"]["runs"].size() == 2);
    REQUIRE(r.report["result"]["runs"][0]["result"]["size"] == 4);

    REQUIRE_THROWS_AS(run_batch(Json::parse(R"([{"operation":"product"}])")),
                      InvalidArgument);

    char const* path = "ordsg-test-batch.json";
    {
      std::ofstream out(path);
      out << R"({"runs":[{"operation":"witness pagano","n":3}]})";
    }
    RunConfig c;
    c.operation = "batch";
    c.file      = path;
    auto f      = run(c);
    REQUIRE(f.status == 0);
    REQUIRE(f.report["result"]["runs"][0]["result"]["n"] == 3);
    std::remove(path);
    c.file = "does-not-exist.json";
    REQUIRE(run(c).status == 2);
  }

  TEST_CASE("flag text helpers", "[cli]") {
    REQUIRE(set_text_to_json("a,b").dump() == R"(["a","b"])");
    REQUIRE(set_text_to_json("a,").dump() == R"(["a",""])");
    REQUIRE(set_text_to_json(R"(["a"])").dump() == R"(["a"])");
    REQUIRE(sets_text_to_json("a,b;b").dump() == R"([["a","b"],["b"]])");
    REQUIRE(sizes_text_to_json("1,2,3").dump() == "[1,2,3]");
    REQUIRE_THROWS_AS(sizes_text_to_json("1,x"), ParseError);
    REQUIRE(element_text_to_json("ab").dump() == R"("ab")");
    REQUIRE(element_text_to_json(R"([["1"]])").dump() == R"([["1"]])");
    REQUIRE(format_report(Json{{"a", 1}}, "text") == "a: 1\n");
  }

}  // namespace ordsg
