#include <chrono>       // for steady_clock
#include <fstream>      // for ifstream
#include <sstream>      // for ostringstream
#include <type_traits>  // for is_same_v
#include <variant>      // for variant, visit

#include "ordsg/cli.hpp"
#include "ordsg/random.hpp"

namespace ordsg {

  namespace {
    using KA = SemigroupSemiring<NonNegRationals, FreeMonoid>;
    using AnyInstance
        = std::variant<FreeMonoid, TriangularSemigroup, NatAdd, LeftZero, KA>;

    AnyInstance make_instance(RunConfig const& c) {
      if (c.instance == "free_monoid") {
        return FreeMonoid(c.alphabet_size);
      } else if (c.instance == "upper_triangular") {
        return upper_triangular(c.dim);
      } else if (c.instance == "lower_triangular") {
        return lower_triangular(c.dim);
      } else if (c.instance == "nat_add") {
        return nat_add();
      } else if (c.instance == "left_zero") {
        return left_zero(c.carrier);
      }
      return semigroup_semiring(NonNegRationals{}, FreeMonoid(c.alphabet_size));
    }

    struct Outcome {
      Json        result;
      std::size_t violations = 0;
      Json        witnesses  = Json::array();
    };

    template <OrderedSemigroup S>
    Universe<element_t<S>> universe_for(S const& inst, RunConfig const& c) {
      if (c.universe) {
        auto xs = subset_from_json(inst, *c.universe);
        auto n  = xs.size();
        return {std::move(xs),
                "explicit list of " + std::to_string(n) + " elements"};
      }
      if (c.universe_sample) {
        Rng rng(c.seed);
        return make_universe(inst,
                             random_elements(inst, rng, *c.universe_sample),
                             "distinct elements among "
                                 + std::to_string(*c.universe_sample)
                                 + " seeded random draws (seed "
                                 + std::to_string(c.seed) + ")");
      }
      if constexpr (std::is_same_v<S, FreeMonoid>) {
        return words_universe(inst, c.max_word_len.value_or(3));
      } else if constexpr (std::is_same_v<S, LeftZero>) {
        return make_universe(inst, inst.elements(), "the whole carrier");
      }
      throw InvalidArgument("this instance needs universe or universe-sample");
    }

    template <OrderedSemigroup S>
    std::vector<FiniteSubset<element_t<S>>> sets_from_json(S const&    inst,
                                                           Json const& j) {
      if (!j.is_array() || j.empty()) {
        throw InvalidArgument("sets must be a non-empty array of sets");
      }
      std::vector<FiniteSubset<element_t<S>>> out;
      for (auto const& s : j) {
        out.push_back(subset_from_json(inst, s));
      }
      return out;
    }

    std::vector<std::size_t> sizes_from_json(Json const& j) {
      if (!j.is_array()) {
        throw InvalidArgument("sizes must be an array of counts");
      }
      std::vector<std::size_t> out;
      for (auto const& x : j) {
        if (!x.is_number_unsigned()) {
          throw InvalidArgument("sizes must be non-negative integers");
        }
        out.push_back(x.get<std::size_t>());
      }
      return out;
    }

    template <OrderedSemigroup S>
    void mark_applicability(S const& inst, Json& result) {
      result["applicable"] = inst.linearly_ordered();
    }

    template <RandomlySampled S>
    Outcome execute(S const& inst, RunConfig const& c) {
      using E = element_t<S>;
      ProductOptions const popts{c.cap_product};
      ScanOptions          sopts;
      sopts.enum_cap    = c.cap_enum;
      sopts.product_cap = c.cap_product;
      sopts.jobs        = c.jobs;

      // Parse every element-valued input before computing anything.
      std::optional<FiniteSubset<E>>         set;
      std::vector<FiniteSubset<E>>           sets;
      std::optional<E>                       y, a, b;
      std::optional<Universe<E>>             universe;
      if (c.set) {
        set = subset_from_json(inst, *c.set);
        if (set->empty()) {
          throw InvalidArgument("set must be non-empty");
        }
      }
      if (c.sets) {
        sets = sets_from_json(inst, *c.sets);
      }
      if (c.y) {
        y = element_from_json(inst, *c.y);
      }
      if (c.a) {
        a = element_from_json(inst, *c.a);
      }
      if (c.b) {
        b = element_from_json(inst, *c.b);
      }
      auto const& o = c.operation;
      if (o == "centralizer" || o == "normalizer" || o == "scan theorem"
          || o == "scan freiman") {
        universe = universe_for(inst, c);
      }

      Outcome out;
      Json&   r = out.result;
      r["instance"] = inst.name();

      if (o == "product") {
        if (set) {
          sets = {*set, *set};
        }
        auto const p = product_set(
            inst, std::span<FiniteSubset<E> const>(sets), popts);
        Json factors = Json::array();
        for (auto const& s : sets) {
          factors.push_back(subset_to_json(inst, s));
        }
        r["sets"]    = factors;
        r["product"] = subset_to_json(inst, p);
        r["size"]    = p.size();
      } else if (o == "bound") {
        r["kind"] = *c.kind;
        mark_applicability(inst, r);
        if (*c.kind == "superadditivity") {
          auto const b = superadditivity_check(
              inst, std::span<FiniteSubset<E> const>(sets), popts);
          r["check"] = bound_to_json(b);
          if (!b.holds) {
            out.violations = 1;
            out.witnesses.push_back(*c.sets);
          }
        } else if (*c.kind == "sharpness") {
          auto const sizes = sizes_from_json(*c.sizes);
          r["element"]     = element_to_json(inst, *a);
          r["sizes"]       = sizes;
          try {
            auto const w = sharpness_witness(
                inst, *a, std::span<std::size_t const>(sizes), popts);
            Json factors = Json::array();
            for (auto const& s : w.sets) {
              factors.push_back(subset_to_json(inst, s));
            }
            r["sets"]         = factors;
            r["product-size"] = w.product.size();
            r["bound"]        = w.bound;
            r["equality"]     = true;
          } catch (PostconditionError const& e) {
            r["equality"]  = false;
            r["diagnostic"] = e.what();
            out.violations = 1;
            out.witnesses.push_back(element_to_json(inst, *a));
          }
        } else if (*c.kind == "disjoint") {
          auto const d = disjointness_check(inst, *set, *y, popts);
          r["disjoint"]     = d.disjoint;
          r["intersection"] = subset_to_json(inst, d.intersection);
          if (!d.disjoint) {
            out.violations = d.intersection.size();
            out.witnesses.push_back(subset_to_json(inst, d.intersection));
          }
        } else {
          auto const b = *c.kind == "ys-sy" ? ys_sy_bound(inst, *set, *y)
                                            : union_bound_check(inst, *set, *y, popts);
          r["check"] = bound_to_json(b);
          if (!b.holds) {
            out.violations = 1;
            out.witnesses.push_back(
                {{"set", subset_to_json(inst, *set)},
                 {"y", element_to_json(inst, *y)}});
          }
        }
      } else if (o == "verdict") {
        auto const v = small_doubling_verdict(inst, *set, popts);
        r["set"]     = subset_to_json(inst, *set);
        r["verdict"] = verdict_to_json(inst, v);
        mark_applicability(inst, r);
        if (!v.theorem_consistent) {
          out.violations = 1;
          out.witnesses.push_back(subset_to_json(inst, *set));
        }
      } else if (o == "centralizer" || o == "normalizer") {
        r["set"]             = subset_to_json(inst, *set);
        r["universe-recipe"] = universe->recipe;
        r["universe-size"]   = universe->size();
        auto const cen       = centralizer(inst, *set, *universe);
        r["centralizer"]     = subset_to_json(inst, cen);
        if (o == "normalizer") {
          r["normalizer"] = subset_to_json(inst, normalizer(inst, *set, *universe));
          auto const law  = check_normalizer_equals_centralizer(inst, *set, *universe);
          r["check"]      = law_report_to_json(inst, law);
          out.violations  = law.failures;
          if (law.witness) {
            out.witnesses.push_back(elements_to_json(inst, *law.witness));
          }
        }
      } else if (o == "chain") {
        auto const ab = inst.op(*a, *b), ba = inst.op(*b, *a);
        if (ab == ba) {
          throw PreconditionError("chain: a and b commute");
        }
        if (less(inst, ba, ab)) {
          std::swap(*a, *b);
          r["note"] = "a and b swapped so that ab < ba";
        }
        auto const ch = neumann_chain(inst, *a, *b, c.n.value_or(8));
        r["a"]        = element_to_json(inst, *a);
        r["b"]        = element_to_json(inst, *b);
        r["n"]        = c.n.value_or(8);
        r["result"]   = chain_to_json(inst, ch);
        mark_applicability(inst, r);
        if (!ch.strictly_increasing) {
          out.violations = 1;
          out.witnesses.push_back(elements_to_json(inst, {*a, *b}));
        }
      } else if (o == "powerscan") {
        auto const law = power_commutation_scan(inst, *a, *b, c.max_n.value_or(8));
        r["check"]     = law_report_to_json(inst, law);
        out.violations = law.failures;
        if (law.witness) {
          out.witnesses.push_back(elements_to_json(inst, *law.witness));
        }
      } else if (o == "period") {
        auto const rec = periodicity(inst, *a, c.max_n.value_or(16));
        bool const idem = inst.op(*a, *a) == *a;
        r["record"]     = periodicity_to_json(inst, rec);
        r["idempotent"] = idem;
        mark_applicability(inst, r);
        // torsion-free: only idempotents are periodic
        if (rec.periodic() && !idem && inst.linearly_ordered()) {
          out.violations = 1;
          out.witnesses.push_back(element_to_json(inst, *a));
        }
      } else if (o == "scan theorem" || o == "scan freiman") {
        auto const rep
            = o == "scan theorem"
                  ? exhaustive_theorem_scan(inst, *universe, c.kmin.value_or(2),
                                            c.kmax.value_or(4), sopts)
                  : freiman_progression_explorer(inst, *universe,
                                                 c.kmax.value_or(4), sopts);
        r["report"]    = scan_report_to_json(inst, rep);
        out.violations = rep.violations;
        for (auto const& h : rep.violation_hits) {
          out.witnesses.push_back(elements_to_json(inst, h.elements));
        }
      } else if (o == "laws") {
        SuiteOptions so;
        so.depth = c.depth.value_or(std::is_same_v<S, KA> ? 3 : 8);
        auto const rep
            = randomized_law_suite(inst, c.trials.value_or(1000), c.seed, so);
        r["report"]    = scan_report_to_json(inst, rep);
        out.violations = rep.violations;
        for (auto const& h : rep.violation_hits) {
          out.witnesses.push_back({{"law", h.annotation},
                                   {"elements", elements_to_json(inst, h.elements)}});
        }
      }
      return out;
    }

    Json error_report(Json config, std::string const& what) {
      return {{"config", std::move(config)}, {"error", what}};
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InvalidArgument("cannot open " + path);
      }
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    }
  }  // namespace

  RunResult run(RunConfig const& cfg) {
    auto const start  = std::chrono::steady_clock::now();
    Json const config = run_config_to_json(cfg);
    RunResult  res;
    try {
      validate(cfg);
      if (cfg.operation == "batch") {
        res = run_batch(parse_json(read_file(*cfg.file)));
        res.report["config"] = config;
        return res;
      }
      Outcome out;
      if (cfg.operation == "witness pagano") {
        out.result = pagano_to_json(pagano_witness(cfg.n.value_or(2)));
      } else {
        auto const inst = make_instance(cfg);
        out = std::visit([&](auto const& s) { return execute(s, cfg); }, inst);
      }
      auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      res.status = out.violations == 0 ? 0 : 1;
      res.report = {{"config", config},
                    {"result", std::move(out.result)},
                    {"violations", out.violations},
                    {"witnesses", std::move(out.witnesses)},
                    {"timing-ms", ms}};
    } catch (PostconditionError const& e) {
      res.status = 1;
      res.report = error_report(config, e.what());
    } catch (std::exception const& e) {
      res.status = 2;
      res.report = error_report(config, e.what());
    }
    return res;
  }

  RunResult run_batch(Json const& doc) {
    auto const start = std::chrono::steady_clock::now();
    Json       entries;
    if (doc.is_array()) {
      entries = doc;
    } else if (doc.is_object() && doc.contains("runs")) {
      if (doc.size() != 1) {
        throw InvalidArgument("a batch object may only hold \"runs\"");
      }
      entries = doc["runs"];
    } else {
      entries = Json::array({doc});
    }
    if (!entries.is_array()) {
      throw InvalidArgument("\"runs\" must be an array of configs");
    }
    // All configs are checked before any of them runs.
    std::vector<RunConfig> configs;
    for (auto const& e : entries) {
      configs.push_back(run_config_from_json(e));
      if (configs.back().operation == "batch") {
        throw InvalidArgument("batch files cannot contain batch operations");
      }
      validate(configs.back());
    }
    RunResult   res;
    Json        runs       = Json::array();
    std::size_t violations = 0;
    for (auto const& c : configs) {
      auto r     = run(c);
      res.status = std::max(res.status, r.status);
      if (r.report.contains("violations")) {
        violations += r.report["violations"].get<std::size_t>();
      }
      runs.push_back(std::move(r.report));
    }
    auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    res.report = {{"config", {{"operation", "batch"}}},
                  {"result", {{"runs", std::move(runs)}}},
                  {"violations", violations},
                  {"witnesses", Json::array()},
                  {"timing-ms", ms}};
    return res;
  }

}  // namespace ordsg
