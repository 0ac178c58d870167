// Exhaustive and randomized verification harnesses.
//
// Every harness returns a ScanReport whose contents depend only on the
// instance, the universe, the subset-size range, the seed and the caps; the
// number of worker threads never changes a report.

#ifndef ORDSG_SEARCH_HPP_
#define ORDSG_SEARCH_HPP_

#include <algorithm>  // for sort, lower_bound, min
#include <cstddef>    // for size_t
#include <cstdint>    // for int64_t, uint64_t
#include <exception>  // for exception_ptr
#include <map>        // for map
#include <optional>   // for optional
#include <string>     // for string
#include <thread>     // for thread
#include <vector>     // for vector

#include "commute.hpp"
#include "core.hpp"
#include "error.hpp"
#include "products.hpp"
#include "random.hpp"
#include "subset.hpp"

namespace ordsg {

  template <typename E>
  struct ScanHit {
    std::vector<E> elements;
    std::string    annotation;
  };

  template <typename E>
  struct ScanReport {
    std::string scan_name;
    std::string instance_name;
    std::string universe_recipe;
    std::size_t kmin             = 0;
    std::size_t kmax             = 0;
    std::size_t subsets_examined = 0;
    std::size_t violations       = 0;
    std::size_t extremal_count   = 0;
    // At most ScanOptions::max_recorded of each, in enumeration order.
    std::vector<ScanHit<E>> violation_hits;
    std::vector<ScanHit<E>> extremal_hits;
    std::vector<ScanHit<E>> observations;
    std::map<std::string, std::string> parameters;
    std::map<std::string, std::size_t> counters;
    std::vector<std::string>           notes;
    // False when the scanned statement is not asserted for the instance.
    bool applicable = true;
  };

  struct ScanOptions {
    std::size_t enum_cap     = 10'000'000;
    std::size_t product_cap  = 1'000'000;
    std::size_t max_recorded = 1000;
    unsigned    jobs         = 1;
  };

  //! C(n, k), saturating at UINT64_MAX.
  std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

  namespace detail {
    // Products of all ordered pairs of universe elements, as dense ids so
    // that |S^2| of a subset is a count of distinct small integers.
    template <OrderedSemigroup S>
    struct ProductTable {
      std::size_t               n = 0;
      std::vector<std::size_t>  id;  // id[i * n + j] of u_i u_j
      std::vector<char>         commute;

      ProductTable(S const& inst, std::vector<element_t<S>> const& u,
                   std::size_t cap)
          : n(u.size()), id(n * n), commute(n * n) {
        if (n * n > cap) {
          throw CapExceeded("product table of " + std::to_string(n * n)
                            + " entries exceeds the product cap "
                            + std::to_string(cap));
        }
        std::vector<element_t<S>> prods;
        prods.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            prods.push_back(inst.op(u[i], u[j]));
          }
        }
        std::vector<std::size_t> order(n * n);
        for (std::size_t i = 0; i < order.size(); ++i) {
          order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
          return inst.cmp(prods[x], prods[y]) == Ordering::LT;
        });
        std::size_t next = 0;
        for (std::size_t r = 0; r < order.size(); ++r) {
          if (r > 0 && !(prods[order[r]] == prods[order[r - 1]])) {
            ++next;
          }
          id[order[r]] = next;
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            commute[i * n + j] = id[i * n + j] == id[j * n + i];
          }
        }
      }

      std::size_t square_size(std::vector<std::size_t> const& idx,
                              std::vector<std::size_t>&       scratch) const {
        scratch.clear();
        for (auto i : idx) {
          for (auto j : idx) {
            scratch.push_back(id[i * n + j]);
          }
        }
        std::sort(scratch.begin(), scratch.end());
        return static_cast<std::size_t>(
            std::unique(scratch.begin(), scratch.end()) - scratch.begin());
      }

      std::optional<std::pair<std::size_t, std::size_t>>
      noncommuting(std::vector<std::size_t> const& idx) const {
        for (std::size_t a = 0; a < idx.size(); ++a) {
          for (std::size_t b = a + 1; b < idx.size(); ++b) {
            if (!commute[idx[a] * n + idx[b]]) {
              return std::pair{idx[a], idx[b]};
            }
          }
        }
        return std::nullopt;
      }
    };

    // Advances idx to the next k-combination of {0..n-1} in lexicographic
    // order whose first entry is still `first`; false when exhausted.
    bool next_combination_with_first(std::vector<std::size_t>& idx,
                                     std::size_t               n);

    // Runs f(first, out) for every first index in [0, n) on `jobs` threads
    // and returns the per-first results in index order.
    template <typename Result, typename F>
    std::vector<Result> run_partitioned(std::size_t n, unsigned jobs, F f) {
      std::vector<Result> slots(n);
      jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
      if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          f(i, slots[i]);
        }
        return slots;
      }
      std::vector<std::thread> workers;
      std::vector<std::exception_ptr> errors(jobs);
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < n; i += jobs) {
              f(i, slots[i]);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : workers) {
        t.join();
      }
      for (auto& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      return slots;
    }

    template <OrderedSemigroup S>
    std::vector<element_t<S>> pick(std::vector<element_t<S>> const& u,
                                   std::vector<std::size_t> const&  idx) {
      std::vector<element_t<S>> out;
      out.reserve(idx.size());
      for (auto i : idx) {
        out.push_back(u[i]);
      }
      return out;
    }

    inline void check_enumeration(std::size_t n, std::size_t kmin,
                                  std::size_t kmax, std::size_t cap) {
      for (std::size_t k = kmin; k <= kmax; ++k) {
        auto c = binomial(n, k);
        if (c > cap) {
          throw CapExceeded("C(" + std::to_string(n) + ", " + std::to_string(k)
                            + ") = " + std::to_string(c)
                            + " subsets exceeds the enumeration cap "
                            + std::to_string(cap)
                            + "; shrink the universe or the size range");
        }
      }
    }
  }  // namespace detail

  //! Enumerates every S in U with kmin <= |S| <= kmax (lexicographically in
  //! universe index order) and tests "S not pairwise commuting implies
  //! |S^2| >= 3|S| - 2". Non-commuting sets attaining 3|S| - 2 are recorded
  //! as extremal hits.
  template <OrderedSemigroup S>
  ScanReport<element_t<S>> exhaustive_theorem_scan(S const&                      inst,
                                                   Universe<element_t<S>> const& u,
                                                   std::size_t                   kmin,
                                                   std::size_t                   kmax,
                                                   ScanOptions const& opts = {}) {
    using E = element_t<S>;
    check_instance(inst, u.elements);
    if (kmin < 2 || kmin > kmax) {
      throw InvalidArgument("exhaustive_theorem_scan: need 2 <= kmin <= kmax");
    }
    std::size_t const n = u.size();
    detail::check_enumeration(n, kmin, kmax, opts.enum_cap);

    ScanReport<E> report;
    report.scan_name       = "theorem";
    report.instance_name   = inst.name();
    report.universe_recipe = u.recipe;
    report.kmin            = kmin;
    report.kmax            = kmax;
    report.parameters      = {{"enum_cap", std::to_string(opts.enum_cap)},
                              {"product_cap", std::to_string(opts.product_cap)},
                              {"max_recorded", std::to_string(opts.max_recorded)}};
    if (!inst.linearly_ordered()) {
      report.applicable = false;
      report.notes.push_back(inst.name()
                             + " is not linearly ordered; violations are "
                               "expected and do not refute the theorem");
    }

    auto const&                    elems = u.elements.elements();
    detail::ProductTable<S> const table(inst, elems, opts.product_cap);

    struct Partial {
      std::size_t                examined = 0, violations = 0, extremal = 0;
      std::vector<ScanHit<E>>    violation_hits, extremal_hits;
      std::map<std::string, std::size_t> counters;
    };

    for (std::size_t k = kmin; k <= kmax; ++k) {
      auto slots = detail::run_partitioned<Partial>(
          n, opts.jobs, [&](std::size_t first, Partial& out) {
            if (first + k > n) {
              return;
            }
            std::vector<std::size_t> idx(k), scratch;
            for (std::size_t i = 0; i < k; ++i) {
              idx[i] = first + i;
            }
            auto const bound = 3 * static_cast<std::int64_t>(k) - 2;
            std::size_t min_noncomm = SIZE_MAX;
            do {
              ++out.examined;
              auto pair = table.noncommuting(idx);
              if (!pair) {
                continue;
              }
              ++out.counters["noncommuting"];
              auto sq = table.square_size(idx, scratch);
              min_noncomm = std::min(min_noncomm, sq);
              auto const ssq = static_cast<std::int64_t>(sq);
              if (ssq < bound) {
                ++out.violations;
                if (out.violation_hits.size() < opts.max_recorded) {
                  out.violation_hits.push_back(
                      {detail::pick<S>(elems, idx),
                       "|S^2| = " + std::to_string(sq) + " < 3|S| - 2 = "
                           + std::to_string(bound)});
                }
              } else if (ssq == bound) {
                ++out.extremal;
                if (out.extremal_hits.size() < opts.max_recorded) {
                  out.extremal_hits.push_back(
                      {detail::pick<S>(elems, idx),
                       "|S^2| = " + std::to_string(sq) + " = 3|S| - 2"});
                }
              }
            } while (detail::next_combination_with_first(idx, n));
            if (min_noncomm != SIZE_MAX) {
              out.counters["min_square_noncommuting"] = min_noncomm;
            }
          });
      std::string const tag = "k=" + std::to_string(k) + " ";
      std::size_t       min_noncomm = SIZE_MAX;
      for (auto& p : slots) {
        report.subsets_examined += p.examined;
        report.violations += p.violations;
        report.extremal_count += p.extremal;
        report.counters[tag + "subsets"] += p.examined;
        report.counters[tag + "noncommuting"] += p.counters["noncommuting"];
        if (p.counters.count("min_square_noncommuting")) {
          min_noncomm
              = std::min(min_noncomm, p.counters["min_square_noncommuting"]);
        }
        for (auto& h : p.violation_hits) {
          if (report.violation_hits.size() < opts.max_recorded) {
            report.violation_hits.push_back(std::move(h));
          }
        }
        for (auto& h : p.extremal_hits) {
          if (report.extremal_hits.size() < opts.max_recorded) {
            report.extremal_hits.push_back(std::move(h));
          }
        }
      }
      if (min_noncomm != SIZE_MAX) {
        report.counters[tag + "min |S^2| noncommuting"] = min_noncomm;
      }
    }
    return report;
  }

  //! For each pairwise commuting S in U with 2 <= |S| <= kmax and
  //! t = |S^2| <= 3|S| - 4, looks for a commuting pair (a, b) in U with
  //! S contained in {a, ab, ab^2, ..., ab^(t-s)}. Purely informational.
  template <OrderedSemigroup S>
  ScanReport<element_t<S>>
  freiman_progression_explorer(S const&                      inst,
                               Universe<element_t<S>> const& u,
                               std::size_t                   kmax,
                               ScanOptions const&            opts = {}) {
    using E = element_t<S>;
    check_instance(inst, u.elements);
    if (kmax < 2) {
      throw InvalidArgument("freiman_progression_explorer: kmax must be >= 2");
    }
    std::size_t const n = u.size();
    detail::check_enumeration(n, 2, kmax, opts.enum_cap);

    ScanReport<E> report;
    report.scan_name       = "freiman";
    report.instance_name   = inst.name();
    report.universe_recipe = u.recipe;
    report.kmin            = 2;
    report.kmax            = kmax;
    report.parameters      = {{"enum_cap", std::to_string(opts.enum_cap)},
                              {"product_cap", std::to_string(opts.product_cap)},
                              {"max_recorded", std::to_string(opts.max_recorded)}};
    report.notes.push_back(
        "progression read as {a b^i : 0 <= i <= t - s} with ab = ba, a and b "
        "drawn from the universe");
    report.notes.push_back("exploratory: no outcome is asserted");

    auto const&                   elems = u.elements.elements();
    detail::ProductTable<S> const table(inst, elems, opts.product_cap);

    std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table.commute[i * n + j]) {
          commuting_pairs.emplace_back(i, j);
        }
      }
    }

    std::vector<std::size_t> scratch;
    for (std::size_t k = 2; k <= std::min(kmax, n); ++k) {
      std::vector<std::size_t> idx(k);
      for (std::size_t first = 0; first + k <= n; ++first) {
        for (std::size_t i = 0; i < k; ++i) {
          idx[i] = first + i;
        }
        do {
          ++report.subsets_examined;
          if (table.noncommuting(idx)) {
            ++report.counters["noncommuting"];
            continue;
          }
          auto const t = table.square_size(idx, scratch);
          if (static_cast<std::int64_t>(t) > 3 * static_cast<std::int64_t>(k) - 4) {
            ++report.counters["out_of_hypothesis"];
            continue;
          }
          ++report.counters["in_hypothesis"];
          auto const members = detail::pick<S>(elems, idx);
          auto const target  = make_subset(inst, members);
          std::size_t const len = t - k;
          std::optional<std::pair<std::size_t, std::size_t>> found;
          for (auto [ia, ib] : commuting_pairs) {
            std::vector<E> prog{elems[ia]};
            for (std::size_t i = 0; i < len; ++i) {
              prog.push_back(inst.op(prog.back(), elems[ib]));
            }
            auto const p       = make_subset(inst, std::move(prog));
            bool       covered = true;
            for (auto const& x : target) {
              covered = covered && contains(inst, p, x);
            }
            if (covered) {
              found = std::pair{ia, ib};
              break;
            }
          }
          std::string note = "t = " + std::to_string(t) + ", s = "
                             + std::to_string(k) + ": ";
          if (found) {
            ++report.counters["progression_found"];
            note += "covered with a = u[" + std::to_string(found->first)
                    + "], b = u[" + std::to_string(found->second) + "]";
          } else {
            ++report.counters["progression_not_found"];
            note += "no covering progression with a, b in the universe";
          }
          if (report.observations.size() < opts.max_recorded) {
            auto elems_out = members;
            if (found) {
              elems_out.push_back(elems[found->first]);
              elems_out.push_back(elems[found->second]);
              note += " (last two elements listed are a, b)";
            }
            report.observations.push_back({std::move(elems_out), note});
          }
        } while (detail::next_combination_with_first(idx, n));
      }
    }
    return report;
  }

  struct SuiteOptions {
    // Largest exponent used by the power, chain and power-commutation laws.
    std::size_t depth = 8;
  };

  //! The invariant battery on `trials` seeded random triples (a, b, c):
  //! structure (associativity, order axioms), translation, cancellativity,
  //! powers, contracting elements, Neumann chains and power commutation;
  //! plus, in semiring mode, the semiring axioms and the additive and
  //! positive-multiplicative order laws. Multiplicative laws only use
  //! elements in the positive cone.
  template <RandomlySampled S>
  ScanReport<element_t<S>> randomized_law_suite(S const&            inst,
                                                std::size_t         trials,
                                                std::uint64_t       seed,
                                                SuiteOptions const& opts = {}) {
    using E = element_t<S>;
    if (trials == 0) {
      throw InvalidArgument("randomized_law_suite: trials must be >= 1");
    }
    if (opts.depth == 0) {
      throw InvalidArgument("randomized_law_suite: depth must be >= 1");
    }
    ScanReport<E> report;
    report.scan_name     = "laws";
    report.instance_name = inst.name();
    report.universe_recipe
        = "seeded random elements (seed " + std::to_string(seed) + ")";
    report.parameters = {{"trials", std::to_string(trials)},
                         {"seed", std::to_string(seed)},
                         {"depth", std::to_string(opts.depth)}};
    if (!inst.linearly_ordered()) {
      report.applicable = false;
      report.notes.push_back(inst.name()
                             + " is not linearly ordered; violations are "
                               "expected");
    }

    std::vector<std::string> laws{"structure",
                                  "translation",
                                  "cancellativity",
                                  "powers",
                                  "contracting-element",
                                  "neumann-chain",
                                  "power-commutation"};
    if constexpr (OrderedSemiring<S>) {
      laws.insert(laws.end(),
                  {"semiring-axioms", "additive-translation",
                   "positive-multiplication"});
    }
    for (auto const& law : laws) {
      report.counters[law + ".trials"]   = 0;
      report.counters[law + ".failures"] = 0;
    }
    auto record = [&](std::string const& law, bool ok, std::vector<E> w) {
      ++report.counters[law + ".trials"];
      if (!ok) {
        ++report.violations;
        if (report.counters[law + ".failures"]++ == 0) {
          report.violation_hits.push_back({std::move(w), law});
        }
      }
    };

    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      auto a = random_element(inst, rng);
      auto b = random_element(inst, rng);
      auto c = random_element(inst, rng);
      ++report.subsets_examined;

      {
        Ordering ab = inst.cmp(a, b), bc = inst.cmp(b, c);
        bool     ok = ab == reverse(inst.cmp(b, a))
                  && ((ab == Ordering::EQ) == (a == b))
                  && inst.op(inst.op(a, b), c) == inst.op(a, inst.op(b, c));
        if (ab == Ordering::LT && bc == Ordering::LT) {
          ok = ok && inst.cmp(a, c) == Ordering::LT;
        }
        record("structure", ok, {a, b, c});
      }

      if constexpr (OrderedSemiring<S>) {
        auto const zero = inst.zero();
        bool       ok   = inst.add(inst.add(a, b), c) == inst.add(a, inst.add(b, c))
                  && inst.add(a, b) == inst.add(b, a) && inst.add(a, zero) == a
                  && inst.op(a, zero) == zero && inst.op(zero, a) == zero
                  && inst.op(a, inst.add(b, c))
                         == inst.add(inst.op(a, b), inst.op(a, c))
                  && inst.op(inst.add(a, b), c)
                         == inst.add(inst.op(a, c), inst.op(b, c));
        record("semiring-axioms", ok, {a, b, c});
        if (!(a == b)) {
          auto const& f = less(inst, a, b) ? a : b;
          auto const& g = less(inst, a, b) ? b : a;
          record("additive-translation",
                 less(inst, inst.add(f, c), inst.add(g, c)),
                 {f, g, c});
          if (less(inst, zero, c)) {
            record("positive-multiplication",
                   less(inst, inst.op(f, c), inst.op(g, c))
                       && less(inst, inst.op(c, f), inst.op(c, g)),
                   {f, g, c});
          }
        }
      }

      bool const positive = in_positive_cone(inst, a)
                            && in_positive_cone(inst, b)
                            && in_positive_cone(inst, c);
      if (!positive) {
        continue;
      }

      if (!(a == b)) {
        auto const& lo = less(inst, a, b) ? a : b;
        auto const& hi = less(inst, a, b) ? b : a;
        record("translation",
               less(inst, inst.op(lo, c), inst.op(hi, c))
                   && less(inst, inst.op(c, lo), inst.op(c, hi)),
               {lo, hi, c});
        record("cancellativity",
               !(inst.op(c, lo) == inst.op(c, hi))
                   && !(inst.op(lo, c) == inst.op(hi, c)),
               {c, lo, hi});
        auto pl = lo, ph = hi;
        bool ok = true;
        for (std::size_t n = 2; n <= opts.depth && ok; ++n) {
          pl = inst.op(pl, lo);
          ph = inst.op(ph, hi);
          ok = less(inst, pl, ph);
        }
        record("powers", ok, {lo, hi});
      }

      if (less(inst, inst.op(a, a), a)) {
        auto ab = inst.op(a, b);
        record("contracting-element",
               less(inst, ab, b) && less(inst, inst.op(ab, a), b),
               {a, b});
      }

      auto const ab = inst.op(a, b), ba = inst.op(b, a);
      if (!(ab == ba)) {
        auto const& x = less(inst, ab, ba) ? a : b;
        auto const& y = less(inst, ab, ba) ? b : a;
        record("neumann-chain",
               neumann_chain(inst, x, y, opts.depth).strictly_increasing,
               {x, y});
      }
      record("power-commutation",
             power_commutation_scan(inst, a, b, opts.depth).ok(),
             {a, b});
    }
    if (report.counters["contracting-element.trials"] == 0) {
      report.notes.push_back(
          "contracting-element law vacuous: no drawn a satisfied a^2 < a");
    }
    return report;
  }

}  // namespace ordsg

#endif  // ORDSG_SEARCH_HPP_
