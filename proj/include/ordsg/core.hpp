// The ordered-semigroup abstraction and the instance-agnostic law checkers.
//
// An instance is any type modelling OrderedSemigroup: it names its element
// type, provides a total binary operation `op`, a total order `cmp`, and a
// domain check `validate` that throws DomainError on foreign elements.
// Elements are held in canonical form, so `==` on elements coincides with
// `cmp(x, y) == Ordering::EQ`.

#ifndef ORDSG_CORE_HPP_
#define ORDSG_CORE_HPP_

#include <algorithm>    // for sort, unique
#include <concepts>     // for same_as, convertible_to
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <random>       // for mt19937_64
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "error.hpp"

namespace ordsg {

  enum class Ordering { LT, EQ, GT };

  constexpr std::string_view to_string(Ordering o) noexcept {
    switch (o) {
      case Ordering::LT:
        return "LT";
      case Ordering::EQ:
        return "EQ";
      default:
        return "GT";
    }
  }

  template <typename T>
  Ordering three_way(T const& x, T const& y) {
    auto c = x <=> y;
    return c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
  }

  constexpr Ordering reverse(Ordering o) noexcept {
    return o == Ordering::LT ? Ordering::GT
                             : (o == Ordering::GT ? Ordering::LT : o);
  }

  template <typename S>
  concept OrderedSemigroup = requires(S const&                      s,
                                      typename S::element_type const& x) {
    { s.name() } -> std::convertible_to<std::string>;
    { s.op(x, x) } -> std::same_as<typename S::element_type>;
    { s.cmp(x, x) } -> std::same_as<Ordering>;
    { s.validate(x) };
    { s.linearly_ordered() } -> std::same_as<bool>;
    { x == x } -> std::convertible_to<bool>;
  };

  //! Semiring mode: a second, commutative operation with an identity that
  //! annihilates under `op`.
  template <typename S>
  concept OrderedSemiring
      = OrderedSemigroup<S>
        && requires(S const& s, typename S::element_type const& x) {
             { s.add(x, x) } -> std::same_as<typename S::element_type>;
             { s.zero() } -> std::same_as<typename S::element_type>;
           };

  template <OrderedSemigroup S>
  using element_t = typename S::element_type;

  //! Strict-less predicate for sorting under an instance's order.
  template <OrderedSemigroup S>
  struct InstanceLess {
    S const* inst;
    bool     operator()(element_t<S> const& x, element_t<S> const& y) const {
      return inst->cmp(x, y) == Ordering::LT;
    }
  };

  template <OrderedSemigroup S>
  Ordering compare(S const& inst, element_t<S> const& x,
                   element_t<S> const& y) {
    inst.validate(x);
    inst.validate(y);
    return inst.cmp(x, y);
  }

  template <OrderedSemigroup S>
  bool less(S const& inst, element_t<S> const& x, element_t<S> const& y) {
    return inst.cmp(x, y) == Ordering::LT;
  }

  //! x^n for n >= 1.
  template <OrderedSemigroup S>
  element_t<S> power(S const& inst, element_t<S> const& x, std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("power: exponent must be at least 1");
    }
    element_t<S> result = x;
    for (std::size_t i = 1; i < n; ++i) {
      result = inst.op(result, x);
    }
    return result;
  }

  //! x^1, ..., x^n.
  template <OrderedSemigroup S>
  std::vector<element_t<S>> powers(S const&            inst,
                                   element_t<S> const& x,
                                   std::size_t         n) {
    std::vector<element_t<S>> result;
    result.reserve(n);
    if (n > 0) {
      result.push_back(x);
    }
    while (result.size() < n) {
      result.push_back(inst.op(result.back(), x));
    }
    return result;
  }

  //! Deduplicates and sorts a sample under the instance order, validating
  //! every element on the way.
  template <OrderedSemigroup S>
  std::vector<element_t<S>> canonical_sample(S const&                       inst,
                                             std::span<element_t<S> const> xs) {
    std::vector<element_t<S>> out(xs.begin(), xs.end());
    for (auto const& x : out) {
      inst.validate(x);
    }
    std::sort(out.begin(), out.end(), InstanceLess<S>{&inst});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // LawReport
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct LawReport {
    std::string                   law;
    std::size_t                   trials   = 0;
    std::size_t                   failures = 0;
    std::optional<std::vector<E>> witness;
    // False when the checked statement is not asserted for the instance,
    // e.g. theorems about linearly ordered semigroups run on left_zero.
    bool        applicable = true;
    std::string note;

    bool ok() const noexcept {
      return failures == 0;
    }

    void record(bool passed, std::vector<E> const& tuple) {
      ++trials;
      if (!passed) {
        if (failures == 0) {
          witness = tuple;
        }
        ++failures;
      }
    }
  };

  enum class LawMode { translation, powers, idempotent_power };

  constexpr std::string_view to_string(LawMode mode) noexcept {
    switch (mode) {
      case LawMode::translation:
        return "translation";
      case LawMode::powers:
        return "powers";
      default:
        return "idempotent-power";
    }
  }

  struct LawCheckOptions {
    // Samples up to this size are checked on every tuple; larger samples are
    // checked on `random_trials` uniformly drawn tuples.
    std::size_t   exhaustive_threshold = 20;
    std::size_t   random_trials        = 10'000;
    std::uint64_t seed                 = 0;
    std::size_t   max_power            = 8;
  };

  namespace detail {
    // Visits index triples (i, j, k) over a sample of size n, either all of
    // them in lexicographic order or `trials` random ones.
    template <typename F>
    void for_each_triple(std::size_t n, LawCheckOptions const& opts, F&& f) {
      if (n <= opts.exhaustive_threshold) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              f(i, j, k);
            }
          }
        }
        return;
      }
      std::mt19937_64 rng(opts.seed);
      for (std::size_t t = 0; t < opts.random_trials; ++t) {
        std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
        f(i, j, k);
      }
    }

    template <typename F>
    void for_each_pair(std::size_t n, LawCheckOptions const& opts, F&& f) {
      if (n <= opts.exhaustive_threshold) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            f(i, j);
          }
        }
        return;
      }
      std::mt19937_64 rng(opts.seed);
      for (std::size_t t = 0; t < opts.random_trials; ++t) {
        std::size_t i = rng() % n, j = rng() % n;
        f(i, j);
      }
    }
  }  // namespace detail

  //! Checks the strict compatibility laws of a linearly ordered semigroup on
  //! a finite sample.
  //!
  //! * translation: a < b implies ac < bc and ca < cb; witness (a, b, c).
  //! * powers: a < b implies a^n < b^n for 2 <= n <= max_power;
  //!   witness (a, b, a^n, b^n).
  //! * idempotent_power: a^2 < a implies a^n < a^m for m < n <= max_power;
  //!   witness (a, a^m, a^n).
  //!
  //! `trials` counts the tuples whose hypothesis held.
  template <OrderedSemigroup S>
  LawReport<element_t<S>> check_order_laws(S const&                      inst,
                                           std::span<element_t<S> const> sample,
                                           LawMode                       mode,
                                           LawCheckOptions const& opts = {}) {
    if (sample.empty()) {
      throw InvalidArgument("check_order_laws: empty sample");
    }
    auto const              xs = canonical_sample(inst, sample);
    LawReport<element_t<S>> report;
    report.law = std::string(to_string(mode));
    switch (mode) {
      case LawMode::translation:
        detail::for_each_triple(
            xs.size(), opts, [&](std::size_t i, std::size_t j, std::size_t k) {
              auto const &a = xs[i], &b = xs[j], &c = xs[k];
              if (!less(inst, a, b)) {
                return;
              }
              bool ok = less(inst, inst.op(a, c), inst.op(b, c))
                        && less(inst, inst.op(c, a), inst.op(c, b));
              report.record(ok, {a, b, c});
            });
        break;
      case LawMode::powers:
        detail::for_each_pair(
            xs.size(), opts, [&](std::size_t i, std::size_t j) {
              auto const &a = xs[i], &b = xs[j];
              if (!less(inst, a, b)) {
                return;
              }
              auto an = a, bn = b;
              bool ok = true;
              for (std::size_t n = 2; n <= opts.max_power && ok; ++n) {
                an = inst.op(an, a);
                bn = inst.op(bn, b);
                ok = less(inst, an, bn);
              }
              report.record(ok, ok ? std::vector{a, b}
                                   : std::vector{a, b, an, bn});
            });
        break;
      case LawMode::idempotent_power:
        for (auto const& a : xs) {
          if (!less(inst, inst.op(a, a), a)) {
            continue;
          }
          auto const ps = powers(inst, a, opts.max_power);
          bool       ok = true;
          std::vector<element_t<S>> w{a};
          for (std::size_t m = 0; m < ps.size() && ok; ++m) {
            for (std::size_t n = m + 1; n < ps.size() && ok; ++n) {
              if (!less(inst, ps[n], ps[m])) {
                ok = false;
                w  = {a, ps[m], ps[n]};
              }
            }
          }
          report.record(ok, w);
        }
        if (report.trials == 0) {
          report.note = "vacuous: no sampled element satisfies a^2 < a";
        }
        break;
    }
    if (!inst.linearly_ordered()) {
      report.applicable = false;
    }
    return report;
  }

  //! Checks ax = ay => x = y and xa = ya => x = y over the sample; witness
  //! (a, x, y) with x < y.
  template <OrderedSemigroup S>
  LawReport<element_t<S>>
  check_cancellativity(S const&                      inst,
                       std::span<element_t<S> const> sample,
                       LawCheckOptions const&        opts = {}) {
    if (sample.empty()) {
      throw InvalidArgument("check_cancellativity: empty sample");
    }
    auto const              xs = canonical_sample(inst, sample);
    LawReport<element_t<S>> report;
    report.law = "cancellativity";
    detail::for_each_triple(
        xs.size(), opts, [&](std::size_t i, std::size_t j, std::size_t k) {
          if (j >= k) {
            return;
          }
          auto const &a = xs[i], &x = xs[j], &y = xs[k];
          bool        ok = !(inst.op(a, x) == inst.op(a, y))
                    && !(inst.op(x, a) == inst.op(y, a));
          report.record(ok, {a, x, y});
        });
    if (!inst.linearly_ordered()) {
      report.applicable = false;
    }
    return report;
  }

  //! Antisymmetry, transitivity and totality of `cmp`, plus associativity of
  //! `op`, on every sampled triple. Witness is the offending triple.
  template <OrderedSemigroup S>
  LawReport<element_t<S>>
  check_structure(S const&                      inst,
                  std::span<element_t<S> const> sample,
                  LawCheckOptions const&        opts = {}) {
    if (sample.empty()) {
      throw InvalidArgument("check_structure: empty sample");
    }
    std::vector<element_t<S>> xs(sample.begin(), sample.end());
    for (auto const& x : xs) {
      inst.validate(x);
    }
    LawReport<element_t<S>> report;
    report.law = "structure";
    detail::for_each_triple(
        xs.size(), opts, [&](std::size_t i, std::size_t j, std::size_t k) {
          auto const &a = xs[i], &b = xs[j], &c = xs[k];
          Ordering    ab = inst.cmp(a, b), ba = inst.cmp(b, a);
          bool        ok = ab == reverse(ba) && ((ab == Ordering::EQ) == (a == b));
          if (ab == Ordering::LT && inst.cmp(b, c) == Ordering::LT) {
            ok = ok && inst.cmp(a, c) == Ordering::LT;
          }
          ok = ok && inst.op(inst.op(a, b), c) == inst.op(a, inst.op(b, c));
          report.record(ok, {a, b, c});
        });
    return report;
  }

  //! Semiring axioms on sampled triples: associativity and commutativity of
  //! addition, zero as additive identity and multiplicative annihilator, and
  //! two-sided distributivity.
  template <OrderedSemiring S>
  LawReport<element_t<S>>
  check_semiring_axioms(S const&                      inst,
                        std::span<element_t<S> const> sample,
                        LawCheckOptions const&        opts = {}) {
    if (sample.empty()) {
      throw InvalidArgument("check_semiring_axioms: empty sample");
    }
    std::vector<element_t<S>> xs(sample.begin(), sample.end());
    auto const                zero = inst.zero();
    LawReport<element_t<S>>   report;
    report.law = "semiring-axioms";
    detail::for_each_triple(
        xs.size(), opts, [&](std::size_t i, std::size_t j, std::size_t k) {
          auto const &a = xs[i], &b = xs[j], &c = xs[k];
          bool ok = inst.add(inst.add(a, b), c) == inst.add(a, inst.add(b, c))
                    && inst.add(a, b) == inst.add(b, a)
                    && inst.add(a, zero) == a && inst.op(a, zero) == zero
                    && inst.op(zero, a) == zero
                    && inst.op(a, inst.add(b, c))
                           == inst.add(inst.op(a, b), inst.op(a, c))
                    && inst.op(inst.add(a, b), c)
                           == inst.add(inst.op(a, c), inst.op(b, c));
          report.record(ok, {a, b, c});
        });
    return report;
  }

  //! The linearly ordered semiring laws: f < g implies f + h < g + h, and for
  //! zero < h, f < g implies fh < gh and hf < hg. Witness (f, g, h).
  template <OrderedSemiring S>
  LawReport<element_t<S>>
  check_semiring_order_laws(S const&                      inst,
                            std::span<element_t<S> const> sample,
                            LawCheckOptions const&        opts = {}) {
    if (sample.empty()) {
      throw InvalidArgument("check_semiring_order_laws: empty sample");
    }
    auto const              xs   = canonical_sample(inst, sample);
    auto const              zero = inst.zero();
    LawReport<element_t<S>> report;
    report.law = "semiring-order";
    detail::for_each_triple(
        xs.size(), opts, [&](std::size_t i, std::size_t j, std::size_t k) {
          auto const &f = xs[i], &g = xs[j], &h = xs[k];
          if (!less(inst, f, g)) {
            return;
          }
          bool ok = less(inst, inst.add(f, h), inst.add(g, h));
          if (less(inst, zero, h)) {
            ok = ok && less(inst, inst.op(f, h), inst.op(g, h))
                 && less(inst, inst.op(h, f), inst.op(h, g));
          }
          report.record(ok, {f, g, h});
        });
    return report;
  }

}  // namespace ordsg

#endif  // ORDSG_CORE_HPP_
