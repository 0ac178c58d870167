#include <algorithm>  // for find
#include <map>        // for map
#include <set>        // for set
#include <sstream>    // for istringstream

#include "ordsg/cli.hpp"

namespace ordsg {

  namespace {
    std::set<std::string> const common_keys{"operation",
                                            "instance",
                                            "alphabet-size",
                                            "dim",
                                            "carrier",
                                            "seed",
                                            "cap-product",
                                            "cap-enum",
                                            "jobs",
                                            "format",
                                            "out"};

    std::set<std::string> const universe_keys{"universe",
                                              "universe-sample",
                                              "max-word-len"};

    std::map<std::string, std::set<std::string>> const operation_keys{
        {"product", {"set", "sets"}},
        {"bound", {"kind", "set", "sets", "y", "a", "sizes"}},
        {"verdict", {"set"}},
        {"centralizer", {"set"}},
        {"normalizer", {"set"}},
        {"chain", {"a", "b", "n"}},
        {"powerscan", {"a", "b", "max-n"}},
        {"period", {"a", "max-n"}},
        {"scan theorem", {"kmin", "kmax"}},
        {"scan freiman", {"kmax"}},
        {"laws", {"trials", "depth"}},
        {"witness pagano", {"n"}},
        {"batch", {"file"}}};

    std::set<std::string> const universe_operations{
        "centralizer", "normalizer", "scan theorem", "scan freiman"};

    std::map<std::string, std::set<std::string>> const bound_kind_keys{
        {"superadditivity", {"sets"}},
        {"ys-sy", {"set", "y"}},
        {"disjoint", {"set", "y"}},
        {"union", {"set", "y"}},
        {"sharpness", {"a", "sizes"}}};

    std::set<std::string> const instance_names{"free_monoid",
                                               "upper_triangular",
                                               "lower_triangular",
                                               "nat_add",
                                               "left_zero",
                                               "semigroup_semiring"};

    std::size_t get_count(Json const& j, std::string const& key) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw InvalidArgument("config key \"" + key
                              + "\" must be a non-negative integer, got "
                              + j.dump());
      }
      return j.get<std::size_t>();
    }

    std::string get_string(Json const& j, std::string const& key) {
      if (!j.is_string()) {
        throw InvalidArgument("config key \"" + key + "\" must be a string, got "
                              + j.dump());
      }
      return j.get<std::string>();
    }

    // Keys present in the config, in the JSON spelling.
    std::set<std::string> present_keys(RunConfig const& c) {
      std::set<std::string> keys;
      auto                  mark = [&](auto const& opt, char const* key) {
        if (opt) {
          keys.insert(key);
        }
      };
      mark(c.max_word_len, "max-word-len");
      mark(c.universe, "universe");
      mark(c.universe_sample, "universe-sample");
      mark(c.kmin, "kmin");
      mark(c.kmax, "kmax");
      mark(c.trials, "trials");
      mark(c.depth, "depth");
      mark(c.n, "n");
      mark(c.max_n, "max-n");
      mark(c.kind, "kind");
      mark(c.set, "set");
      mark(c.sets, "sets");
      mark(c.sizes, "sizes");
      mark(c.y, "y");
      mark(c.a, "a");
      mark(c.b, "b");
      mark(c.file, "file");
      return keys;
    }

    void require(bool cond, std::string const& what) {
      if (!cond) {
        throw InvalidArgument(what);
      }
    }

    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> out;
      std::string              item;
      std::istringstream       is(text);
      while (std::getline(is, item, sep)) {
        out.push_back(item);
      }
      if (!text.empty() && text.back() == sep) {
        out.emplace_back();
      }
      return out;
    }

    bool looks_like_json(std::string const& text) {
      auto const first = text.find_first_not_of(" \t\n");
      return first != std::string::npos
             && (text[first] == '[' || text[first] == '{');
    }
  }  // namespace

  std::vector<std::string> const& operation_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& [k, v] : operation_keys) {
        out.push_back(k);
      }
      return out;
    }();
    return names;
  }

  RunConfig run_config_from_json(Json const& j) {
    if (!j.is_object()) {
      throw InvalidArgument("a config must be a JSON object");
    }
    RunConfig c;
    for (auto const& [key, v] : j.items()) {
      if (key == "operation") {
        c.operation = get_string(v, key);
      } else if (key == "instance") {
        c.instance = get_string(v, key);
      } else if (key == "alphabet-size") {
        c.alphabet_size = get_count(v, key);
      } else if (key == "dim") {
        c.dim = get_count(v, key);
      } else if (key == "carrier") {
        require(v.is_array(), "config key \"carrier\" must be an array");
        c.carrier.clear();
        for (auto const& x : v) {
          c.carrier.push_back(get_string(x, key));
        }
      } else if (key == "seed") {
        require(v.is_number_unsigned(),
                "config key \"seed\" must be a non-negative integer");
        c.seed = v.get<std::uint64_t>();
      } else if (key == "cap-product") {
        c.cap_product = get_count(v, key);
      } else if (key == "cap-enum") {
        c.cap_enum = get_count(v, key);
      } else if (key == "jobs") {
        c.jobs = static_cast<unsigned>(get_count(v, key));
      } else if (key == "format") {
        c.format = get_string(v, key);
      } else if (key == "out") {
        c.out = get_string(v, key);
      } else if (key == "max-word-len") {
        c.max_word_len = get_count(v, key);
      } else if (key == "universe") {
        c.universe = v;
      } else if (key == "universe-sample") {
        c.universe_sample = get_count(v, key);
      } else if (key == "kmin") {
        c.kmin = get_count(v, key);
      } else if (key == "kmax") {
        c.kmax = get_count(v, key);
      } else if (key == "trials") {
        c.trials = get_count(v, key);
      } else if (key == "depth") {
        c.depth = get_count(v, key);
      } else if (key == "n") {
        c.n = get_count(v, key);
      } else if (key == "max-n") {
        c.max_n = get_count(v, key);
      } else if (key == "kind") {
        c.kind = get_string(v, key);
      } else if (key == "set") {
        c.set = v;
      } else if (key == "sets") {
        c.sets = v;
      } else if (key == "sizes") {
        c.sizes = v;
      } else if (key == "y") {
        c.y = v;
      } else if (key == "a") {
        c.a = v;
      } else if (key == "b") {
        c.b = v;
      } else if (key == "file") {
        c.file = get_string(v, key);
      } else {
        throw InvalidArgument("unknown config key \"" + key + "\"");
      }
    }
    return c;
  }

  Json run_config_to_json(RunConfig const& c) {
    Json j{{"operation", c.operation}, {"instance", c.instance}};
    if (c.instance == "free_monoid" || c.instance == "semigroup_semiring") {
      j["alphabet-size"] = c.alphabet_size;
    } else if (c.instance == "upper_triangular"
               || c.instance == "lower_triangular") {
      j["dim"] = c.dim;
    } else if (c.instance == "left_zero") {
      j["carrier"] = c.carrier;
    }
    j["seed"]        = c.seed;
    j["cap-product"] = c.cap_product;
    j["cap-enum"]    = c.cap_enum;
    j["format"]      = c.format;
    if (!c.out.empty()) {
      j["out"] = c.out;
    }
    auto put = [&](auto const& opt, char const* key) {
      if (opt) {
        j[key] = *opt;
      }
    };
    put(c.max_word_len, "max-word-len");
    put(c.universe, "universe");
    put(c.universe_sample, "universe-sample");
    put(c.kmin, "kmin");
    put(c.kmax, "kmax");
    put(c.trials, "trials");
    put(c.depth, "depth");
    put(c.n, "n");
    put(c.max_n, "max-n");
    put(c.kind, "kind");
    put(c.set, "set");
    put(c.sets, "sets");
    put(c.sizes, "sizes");
    put(c.y, "y");
    put(c.a, "a");
    put(c.b, "b");
    put(c.file, "file");
    // jobs is left out so that reports do not depend on it
    return j;
  }

  void validate(RunConfig const& c) {
    auto const op = operation_keys.find(c.operation);
    require(op != operation_keys.end(),
            "unknown operation \"" + c.operation + "\"");
    if (c.operation == "batch") {
      require(c.file.has_value(), "batch: \"file\" is required");
      return;
    }
    require(instance_names.count(c.instance) != 0,
            "unknown instance \"" + c.instance + "\"");
    require(c.format == "json" || c.format == "text",
            "format must be \"json\" or \"text\"");
    require(c.jobs >= 1, "jobs must be at least 1");
    require(c.cap_product >= 1, "cap-product must be at least 1");
    require(c.cap_enum >= 1, "cap-enum must be at least 1");
    if (c.instance == "free_monoid" || c.instance == "semigroup_semiring") {
      require(c.alphabet_size >= 1
                  && c.alphabet_size <= FreeMonoid::max_alphabet_size,
              "alphabet-size must be in 1..26");
    }
    if (c.instance == "upper_triangular" || c.instance == "lower_triangular") {
      require(c.dim >= 1, "dim must be at least 1");
    }
    if (c.instance == "left_zero") {
      require(!c.carrier.empty(), "carrier must be non-empty");
    }

    bool const takes_universe = universe_operations.count(c.operation) != 0;
    for (auto const& key : present_keys(c)) {
      bool const ok = op->second.count(key) != 0
                      || (takes_universe && universe_keys.count(key) != 0);
      require(ok,
              "key \"" + key + "\" does not apply to operation \""
                  + c.operation + "\"");
    }
    if (takes_universe) {
      int given = c.universe.has_value() + c.universe_sample.has_value()
                  + c.max_word_len.has_value();
      require(given <= 1,
              "give at most one of universe, universe-sample, max-word-len");
      require(!c.max_word_len || c.instance == "free_monoid",
              "max-word-len applies to free_monoid only");
      require(!c.universe_sample || *c.universe_sample >= 1,
              "universe-sample must be at least 1");
      require(!c.universe || c.universe->is_array(),
              "universe must be an array of elements");
      require(given == 1 || c.instance == "free_monoid"
                  || c.instance == "left_zero",
              "this instance needs universe or universe-sample");
    }

    auto const& o = c.operation;
    if (o == "product") {
      require(c.set.has_value() != c.sets.has_value(),
              "product: give exactly one of set, sets");
    } else if (o == "bound") {
      require(c.kind.has_value(), "bound: \"kind\" is required");
      auto const k = bound_kind_keys.find(*c.kind);
      require(k != bound_kind_keys.end(),
              "bound: unknown kind \"" + *c.kind
                  + "\" (superadditivity, ys-sy, disjoint, union, sharpness)");
      for (auto const& key : present_keys(c)) {
        require(key == "kind" || k->second.count(key) != 0,
                "key \"" + key + "\" does not apply to bound kind \"" + *c.kind
                    + "\"");
      }
      for (auto const& key : k->second) {
        require(present_keys(c).count(key) != 0,
                "bound " + *c.kind + ": \"" + key + "\" is required");
      }
    } else if (o == "verdict" || o == "centralizer" || o == "normalizer") {
      require(c.set.has_value(), o + ": \"set\" is required");
    } else if (o == "chain" || o == "powerscan") {
      require(c.a && c.b, o + ": \"a\" and \"b\" are required");
      require(!c.n || *c.n >= 1, "chain: n must be at least 1");
      require(!c.max_n || *c.max_n >= 1, "powerscan: max-n must be at least 1");
    } else if (o == "period") {
      require(c.a.has_value(), "period: \"a\" is required");
      require(!c.max_n || *c.max_n >= 2, "period: max-n must be at least 2");
    } else if (o == "scan theorem") {
      std::size_t const lo = c.kmin.value_or(2), hi = c.kmax.value_or(4);
      require(lo >= 2 && lo <= hi, "scan theorem: need 2 <= kmin <= kmax");
    } else if (o == "scan freiman") {
      require(c.kmax.value_or(4) >= 2, "scan freiman: kmax must be at least 2");
    } else if (o == "laws") {
      require(c.trials.value_or(1) >= 1, "laws: trials must be at least 1");
      require(c.depth.value_or(1) >= 1, "laws: depth must be at least 1");
    } else if (o == "witness pagano") {
      require(c.n.value_or(2) >= 2, "witness pagano: n must be at least 2");
    }
  }

  Json element_text_to_json(std::string const& text) {
    return looks_like_json(text) ? parse_json(text) : Json(text);
  }

  Json set_text_to_json(std::string const& text) {
    if (looks_like_json(text)) {
      return parse_json(text);
    }
    Json out = Json::array();
    for (auto const& item : split(text, ',')) {
      out.push_back(item);
    }
    return out;
  }

  Json sets_text_to_json(std::string const& text) {
    if (looks_like_json(text)) {
      return parse_json(text);
    }
    Json out = Json::array();
    for (auto const& group : split(text, ';')) {
      out.push_back(set_text_to_json(group));
    }
    return out;
  }

  Json sizes_text_to_json(std::string const& text) {
    if (looks_like_json(text)) {
      return parse_json(text);
    }
    Json out = Json::array();
    for (auto const& item : split(text, ',')) {
      std::size_t used = 0;
      long long   v    = -1;
      try {
        v = std::stoll(item, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != item.size() || v < 0) {
        throw ParseError("expected a comma separated list of sizes", 0);
      }
      out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  }

  std::string format_report(Json const& report, std::string const& format) {
    if (format == "text") {
      return json_to_text(report);
    }
    return report.dump(2) + "\n";
  }

}  // namespace ordsg
