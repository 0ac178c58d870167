// Product sets S_1 S_2 ... S_n and the cardinality bounds they satisfy in a
// linearly ordered semigroup.

#ifndef ORDSG_PRODUCTS_HPP_
#define ORDSG_PRODUCTS_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t
#include <optional>  // for optional
#include <set>       // for set
#include <span>      // for span
#include <utility>   // for pair
#include <vector>    // for vector

#include "core.hpp"
#include "error.hpp"
#include "subset.hpp"

namespace ordsg {

  struct ProductOptions {
    // Largest product set that will be materialised.
    std::size_t cap = 1'000'000;
  };

  //! Result of comparing a cardinality with a lower bound.
  struct BoundCheck {
    std::int64_t bound;
    std::size_t  actual;
    bool         holds;
  };

  template <typename E>
  struct DoublingVerdict {
    std::size_t size;
    std::size_t square_size;
    bool        pairwise_commuting;
    // |S^2| <= 3|S| - 3
    bool small_doubling;
    // NOT (small_doubling AND NOT pairwise_commuting)
    bool                          theorem_consistent;
    std::optional<std::pair<E, E>> noncommuting_witness;
  };

  template <typename E>
  struct DisjointnessResult {
    bool            disjoint;
    FiniteSubset<E> intersection;
  };

  template <typename E>
  struct SharpnessWitness {
    std::vector<FiniteSubset<E>> sets;
    FiniteSubset<E>              product;
    std::int64_t                 bound;
  };

  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>>
  product_set(S const&                                      inst,
              std::span<FiniteSubset<element_t<S>> const>   sets,
              ProductOptions const&                         opts = {}) {
    if (sets.empty()) {
      throw InvalidArgument("product_set: empty list of sets");
    }
    for (auto const& s : sets) {
      check_instance(inst, s);
      if (s.empty()) {
        throw InvalidArgument("product_set: empty factor");
      }
    }
    FiniteSubset<element_t<S>> acc = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) {
      std::set<element_t<S>, InstanceLess<S>> next(InstanceLess<S>{&inst});
      for (auto const& x : acc) {
        for (auto const& y : sets[i]) {
          next.insert(inst.op(x, y));
          if (next.size() > opts.cap) {
            throw CapExceeded("product_set: more than "
                              + std::to_string(opts.cap)
                              + " distinct products");
          }
        }
      }
      acc = subset_from_sorted(
          inst, std::vector<element_t<S>>(next.begin(), next.end()));
    }
    return acc;
  }

  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>> product_set(S const&                          inst,
                                         FiniteSubset<element_t<S>> const& xs,
                                         FiniteSubset<element_t<S>> const& ys,
                                         ProductOptions const& opts = {}) {
    FiniteSubset<element_t<S>> const sets[] = {xs, ys};
    return product_set(inst, std::span(sets), opts);
  }

  //! {y} S, or S {y} when `left` is false.
  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>> translate(S const&                          inst,
                                       element_t<S> const&               y,
                                       FiniteSubset<element_t<S>> const& xs,
                                       bool                              left) {
    std::vector<element_t<S>> out;
    out.reserve(xs.size());
    for (auto const& x : xs) {
      out.push_back(left ? inst.op(y, x) : inst.op(x, y));
    }
    return make_subset(inst, std::move(out));
  }

  //! The first pair (x, y), x < y, in S with xy != yx, if any.
  template <OrderedSemigroup S>
  std::optional<std::pair<element_t<S>, element_t<S>>>
  noncommuting_pair(S const& inst, FiniteSubset<element_t<S>> const& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (!(inst.op(xs[i], xs[j]) == inst.op(xs[j], xs[i]))) {
          return std::pair{xs[i], xs[j]};
        }
      }
    }
    return std::nullopt;
  }

  //! Whether y commutes with every element of S.
  template <OrderedSemigroup S>
  bool centralizes(S const&                          inst,
                   element_t<S> const&               y,
                   FiniteSubset<element_t<S>> const& xs) {
    for (auto const& x : xs) {
      if (!(inst.op(x, y) == inst.op(y, x))) {
        return false;
      }
    }
    return true;
  }

  //! |S_1 ... S_n| against 1 - n + sum |S_i|.
  template <OrderedSemigroup S>
  BoundCheck superadditivity_check(S const&                                    inst,
                                   std::span<FiniteSubset<element_t<S>> const> sets,
                                   ProductOptions const& opts = {}) {
    auto const   product = product_set(inst, sets, opts);
    std::int64_t bound   = 1 - static_cast<std::int64_t>(sets.size());
    for (auto const& s : sets) {
      bound += static_cast<std::int64_t>(s.size());
    }
    return {bound,
            product.size(),
            static_cast<std::int64_t>(product.size()) >= bound};
  }

  //! S_i = {a, a^2, ..., a^{s_i}}, for which the superadditivity bound is an
  //! equality. Throws PostconditionError if the powers of a are not distinct
  //! or the equality fails.
  template <OrderedSemigroup S>
  SharpnessWitness<element_t<S>>
  sharpness_witness(S const&                     inst,
                    element_t<S> const&          a,
                    std::span<std::size_t const> sizes,
                    ProductOptions const&        opts = {}) {
    if (sizes.empty()) {
      throw InvalidArgument("sharpness_witness: empty list of sizes");
    }
    inst.validate(a);
    SharpnessWitness<element_t<S>> w;
    w.bound = 1 - static_cast<std::int64_t>(sizes.size());
    for (auto s : sizes) {
      if (s == 0) {
        throw InvalidArgument("sharpness_witness: sizes must be >= 1");
      }
      w.sets.push_back(make_subset(inst, powers(inst, a, s)));
      if (w.sets.back().size() != s) {
        throw PostconditionError("sharpness_witness: powers of the element "
                                 "are not pairwise distinct");
      }
      w.bound += static_cast<std::int64_t>(s);
    }
    w.product = product_set(
        inst, std::span<FiniteSubset<element_t<S>> const>(w.sets), opts);
    if (static_cast<std::int64_t>(w.product.size()) != w.bound) {
      throw PostconditionError("sharpness_witness: product has "
                               + std::to_string(w.product.size())
                               + " elements, expected "
                               + std::to_string(w.bound));
    }
    return w;
  }

  namespace detail {
    template <OrderedSemigroup S>
    void require_commuting_and_not_central(S const&                          inst,
                                           FiniteSubset<element_t<S>> const& xs,
                                           element_t<S> const&               y,
                                           char const*                       what) {
      check_instance(inst, xs);
      inst.validate(y);
      if (xs.empty()) {
        throw InvalidArgument(std::string(what) + ": empty set");
      }
      if (noncommuting_pair(inst, xs)) {
        throw PreconditionError(std::string(what)
                                + ": the set is not pairwise commuting");
      }
      if (centralizes(inst, y, xs)) {
        throw PreconditionError(std::string(what)
                                + ": y commutes with every element of the set");
      }
    }
  }  // namespace detail

  //! S^2 against yS u Sy, for pairwise commuting S and y outside the
  //! centralizer of S (both checked).
  template <OrderedSemigroup S>
  DisjointnessResult<element_t<S>>
  disjointness_check(S const&                          inst,
                     FiniteSubset<element_t<S>> const& xs,
                     element_t<S> const&               y,
                     ProductOptions const&             opts = {}) {
    detail::require_commuting_and_not_central(inst, xs, y, "disjointness_check");
    auto const square = product_set(inst, xs, xs, opts);
    auto const sides  = set_union(
        inst, translate(inst, y, xs, true), translate(inst, y, xs, false));
    auto meet = set_intersection(inst, square, sides);
    return {meet.empty(), std::move(meet)};
  }

  //! |S^2 u yS u Sy| against 3|S|, under the hypotheses of
  //! disjointness_check.
  template <OrderedSemigroup S>
  BoundCheck union_bound_check(S const&                          inst,
                               FiniteSubset<element_t<S>> const& xs,
                               element_t<S> const&               y,
                               ProductOptions const&             opts = {}) {
    detail::require_commuting_and_not_central(inst, xs, y, "union_bound_check");
    auto const all = set_union(inst,
                               product_set(inst, xs, xs, opts),
                               set_union(inst,
                                         translate(inst, y, xs, true),
                                         translate(inst, y, xs, false)));
    auto const bound = 3 * static_cast<std::int64_t>(xs.size());
    return {bound, all.size(), static_cast<std::int64_t>(all.size()) >= bound};
  }

  //! Whether S is consistent with "|S^2| <= 3|S| - 3 implies <S> abelian".
  //! <S> is abelian exactly when the elements of S pairwise commute.
  template <OrderedSemigroup S>
  DoublingVerdict<element_t<S>>
  small_doubling_verdict(S const&                          inst,
                         FiniteSubset<element_t<S>> const& xs,
                         ProductOptions const&             opts = {}) {
    if (xs.empty()) {
      throw InvalidArgument("small_doubling_verdict: empty set");
    }
    DoublingVerdict<element_t<S>> v;
    v.size                 = xs.size();
    v.square_size          = product_set(inst, xs, xs, opts).size();
    v.noncommuting_witness = noncommuting_pair(inst, xs);
    v.pairwise_commuting   = !v.noncommuting_witness.has_value();
    v.small_doubling       = static_cast<std::int64_t>(v.square_size)
                       <= 3 * static_cast<std::int64_t>(v.size) - 3;
    v.theorem_consistent = !(v.small_doubling && !v.pairwise_commuting);
    return v;
  }

}  // namespace ordsg

#endif  // ORDSG_PRODUCTS_HPP_
