// Centralizers and normalizers over finite windows of a carrier, and the
// commutation and power statements that hold in linearly ordered semigroups.

#ifndef ORDSG_COMMUTE_HPP_
#define ORDSG_COMMUTE_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <variant>  // for variant
#include <vector>   // for vector

#include "core.hpp"
#include "error.hpp"
#include "products.hpp"
#include "subset.hpp"
#include "word.hpp"

namespace ordsg {

  //! A finite, deterministic window onto an (infinite) carrier.
  template <typename E>
  struct Universe {
    FiniteSubset<E> elements;
    std::string     recipe;

    std::size_t size() const noexcept {
      return elements.size();
    }
  };

  template <OrderedSemigroup S>
  Universe<element_t<S>> make_universe(S const&                  inst,
                                       std::vector<element_t<S>> xs,
                                       std::string               recipe) {
    return {make_subset(inst, std::move(xs)), std::move(recipe)};
  }

  inline Universe<Word> words_universe(FreeMonoid const& inst,
                                       std::size_t       max_len) {
    return make_universe(inst,
                         inst.words_up_to(max_len),
                         "words of length <= " + std::to_string(max_len)
                             + " over " + std::to_string(inst.alphabet_size())
                             + " letters");
  }

  struct Periodic {
    std::size_t index;
    std::size_t period;
    friend bool operator==(Periodic const&, Periodic const&) = default;
  };

  struct AperiodicUpTo {
    std::size_t bound;
    friend bool operator==(AperiodicUpTo const&, AperiodicUpTo const&) = default;
  };

  template <typename E>
  struct PeriodicityRecord {
    E                                      element;
    std::variant<Periodic, AperiodicUpTo> status;

    bool periodic() const noexcept {
      return std::holds_alternative<Periodic>(status);
    }
  };

  template <typename E>
  struct NeumannChain {
    std::vector<E> chain;
    bool           strictly_increasing;
  };

  template <OrderedSemigroup S>
  bool commutes(S const& inst, element_t<S> const& a, element_t<S> const& b) {
    inst.validate(a);
    inst.validate(b);
    return inst.op(a, b) == inst.op(b, a);
  }

  //! {u in U : us = su for every s in S}.
  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>> centralizer(S const&                          inst,
                                         FiniteSubset<element_t<S>> const& xs,
                                         Universe<element_t<S>> const&     u) {
    check_instance(inst, xs);
    if (xs.empty()) {
      throw InvalidArgument("centralizer: empty set");
    }
    std::vector<element_t<S>> out;
    for (auto const& x : u.elements) {
      if (centralizes(inst, x, xs)) {
        out.push_back(x);
      }
    }
    return subset_from_sorted(inst, std::move(out));
  }

  //! {u in U : uS = Su as sets}.
  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>> normalizer(S const&                          inst,
                                        FiniteSubset<element_t<S>> const& xs,
                                        Universe<element_t<S>> const&     u) {
    check_instance(inst, xs);
    if (xs.empty()) {
      throw InvalidArgument("normalizer: empty set");
    }
    std::vector<element_t<S>> out;
    for (auto const& x : u.elements) {
      if (translate(inst, x, xs, true) == translate(inst, x, xs, false)) {
        out.push_back(x);
      }
    }
    return subset_from_sorted(inst, std::move(out));
  }

  //! Compares normalizer and centralizer of S on U. Each element of U is one
  //! trial; the witness is the first element on which they disagree.
  template <OrderedSemigroup S>
  LawReport<element_t<S>>
  check_normalizer_equals_centralizer(S const&                          inst,
                                      FiniteSubset<element_t<S>> const& xs,
                                      Universe<element_t<S>> const&     u) {
    auto const              n = normalizer(inst, xs, u);
    auto const              c = centralizer(inst, xs, u);
    LawReport<element_t<S>> report;
    report.law = "normalizer-equals-centralizer";
    for (auto const& x : u.elements) {
      report.record(contains(inst, n, x) == contains(inst, c, x), {x});
    }
    if (!inst.linearly_ordered()) {
      report.applicable = false;
      report.note = inst.name() + " is not linearly ordered; equality is not "
                                  "asserted";
    }
    return report;
  }

  //! |yS u Sy| against |S| + 1 for y outside the centralizer of S.
  template <OrderedSemigroup S>
  BoundCheck ys_sy_bound(S const&                          inst,
                         FiniteSubset<element_t<S>> const& xs,
                         element_t<S> const&               y) {
    check_instance(inst, xs);
    inst.validate(y);
    if (xs.empty()) {
      throw InvalidArgument("ys_sy_bound: empty set");
    }
    if (centralizes(inst, y, xs)) {
      throw PreconditionError(
          "ys_sy_bound: y commutes with every element of the set");
    }
    auto const sides = set_union(
        inst, translate(inst, y, xs, true), translate(inst, y, xs, false));
    auto const bound = static_cast<std::int64_t>(xs.size()) + 1;
    return {bound, sides.size(), static_cast<std::int64_t>(sides.size()) >= bound};
  }

  //! a^i b a^j, with a^0 omitted.
  template <OrderedSemigroup S>
  element_t<S> sandwich(S const&                         inst,
                        std::vector<element_t<S>> const& pows,
                        element_t<S> const&              b,
                        std::size_t                      i,
                        std::size_t                      j) {
    element_t<S> out = i == 0 ? b : inst.op(pows[i - 1], b);
    return j == 0 ? out : inst.op(out, pows[j - 1]);
  }

  //! [a^n b, a^{n-1} b a, ..., b a^n] for ab < ba.
  template <OrderedSemigroup S>
  NeumannChain<element_t<S>> neumann_chain(S const&            inst,
                                           element_t<S> const& a,
                                           element_t<S> const& b,
                                           std::size_t         n) {
    inst.validate(a);
    inst.validate(b);
    if (n == 0) {
      throw InvalidArgument("neumann_chain: n must be at least 1");
    }
    if (inst.cmp(inst.op(a, b), inst.op(b, a)) != Ordering::LT) {
      throw PreconditionError("neumann_chain: requires ab < ba (swap a and b)");
    }
    auto const                 pows = powers(inst, a, n);
    NeumannChain<element_t<S>> result{{}, true};
    for (std::size_t k = 0; k <= n; ++k) {
      result.chain.push_back(sandwich(inst, pows, b, n - k, k));
      if (k > 0
          && inst.cmp(result.chain[k - 1], result.chain[k]) != Ordering::LT) {
        result.strictly_increasing = false;
      }
    }
    return result;
  }

  //! If ab != ba then a^n b != b a^n for 1 <= n <= max_n, and if ab = ba
  //! then a^n b = b a^n. Witness (a, b, a^n) at the first failing n.
  template <OrderedSemigroup S>
  LawReport<element_t<S>> power_commutation_scan(S const&            inst,
                                                 element_t<S> const& a,
                                                 element_t<S> const& b,
                                                 std::size_t         max_n) {
    inst.validate(a);
    inst.validate(b);
    if (max_n == 0) {
      throw InvalidArgument("power_commutation_scan: N must be at least 1");
    }
    bool const              commuting = inst.op(a, b) == inst.op(b, a);
    LawReport<element_t<S>> report;
    report.law  = "power-commutation";
    report.note = commuting ? "ab = ba" : "ab != ba";
    auto an     = a;
    for (std::size_t n = 1; n <= max_n; ++n) {
      if (n > 1) {
        an = inst.op(an, a);
      }
      bool equal = inst.op(an, b) == inst.op(b, an);
      report.record(equal == commuting, {a, b, an});
    }
    if (!inst.linearly_ordered()) {
      report.applicable = false;
    }
    return report;
  }

  //! Looks for the least index n and period p with a^n = a^{n+p} among
  //! a^1, ..., a^{max_n}.
  template <OrderedSemigroup S>
  PeriodicityRecord<element_t<S>>
  periodicity(S const& inst, element_t<S> const& a, std::size_t max_n) {
    inst.validate(a);
    if (max_n < 2) {
      throw InvalidArgument("periodicity: maxN must be at least 2");
    }
    std::map<element_t<S>, std::size_t, InstanceLess<S>> seen(
        InstanceLess<S>{&inst});
    auto x = a;
    for (std::size_t k = 1; k <= max_n; ++k) {
      if (k > 1) {
        x = inst.op(x, a);
      }
      auto [it, inserted] = seen.emplace(x, k);
      if (!inserted) {
        return {a, Periodic{it->second, k - it->second}};
      }
    }
    return {a, AperiodicUpTo{max_n}};
  }

  //! For idempotent a: ab = ba = b for every b in the sample. Throws
  //! PreconditionError if a^2 != a.
  template <OrderedSemigroup S>
  LawReport<element_t<S>>
  idempotent_identity_check(S const&                      inst,
                            element_t<S> const&           a,
                            std::span<element_t<S> const> sample) {
    inst.validate(a);
    if (!(inst.op(a, a) == a)) {
      throw PreconditionError(
          "idempotent_identity_check: the element is not idempotent");
    }
    LawReport<element_t<S>> report;
    report.law = "idempotent-is-identity";
    for (auto const& b : canonical_sample(inst, sample)) {
      report.record(inst.op(a, b) == b && inst.op(b, a) == b, {a, b});
    }
    if (!inst.linearly_ordered()) {
      report.applicable = false;
      report.note       = inst.name()
                    + " is not cancellative; the identity law is not asserted";
    }
    return report;
  }

  //! If a^2 < a then ab < b and aba < b for every sampled b. On instances
  //! with no such a the check is vacuous and says so in the note.
  template <OrderedSemigroup S>
  LawReport<element_t<S>>
  check_contracting_elements(S const&                      inst,
                             std::span<element_t<S> const> sample) {
    auto const              xs = canonical_sample(inst, sample);
    LawReport<element_t<S>> report;
    report.law = "contracting-element";
    for (auto const& a : xs) {
      if (!less(inst, inst.op(a, a), a)) {
        continue;
      }
      for (auto const& b : xs) {
        auto ab = inst.op(a, b);
        report.record(less(inst, ab, b) && less(inst, inst.op(ab, a), b),
                      {a, b});
      }
    }
    if (report.trials == 0) {
      report.note = "vacuous: no sampled element satisfies a^2 < a";
    }
    return report;
  }

}  // namespace ordsg

#endif  // ORDSG_COMMUTE_HPP_
