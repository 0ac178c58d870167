// Finite subsets of an instance's carrier, held sorted under the instance
// order and free of duplicates.

#ifndef ORDSG_SUBSET_HPP_
#define ORDSG_SUBSET_HPP_

#include <algorithm>  // for binary_search, set_union, set_intersection
#include <cstddef>    // for size_t
#include <iterator>   // for back_inserter
#include <string>     // for string
#include <vector>     // for vector

#include "core.hpp"

namespace ordsg {

  template <typename E>
  class FiniteSubset {
   public:
    using value_type     = E;
    using const_iterator = typename std::vector<E>::const_iterator;

    FiniteSubset() = default;

    //! Trusts that `sorted` is strictly increasing under the named
    //! instance's order; prefer make_subset.
    FiniteSubset(std::string instance, std::vector<E> sorted)
        : _instance(std::move(instance)), _elements(std::move(sorted)) {}

    std::string const& instance_name() const noexcept {
      return _instance;
    }
    std::vector<E> const& elements() const noexcept {
      return _elements;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    bool empty() const noexcept {
      return _elements.empty();
    }
    const_iterator begin() const noexcept {
      return _elements.begin();
    }
    const_iterator end() const noexcept {
      return _elements.end();
    }
    E const& operator[](std::size_t i) const {
      return _elements[i];
    }

    friend bool operator==(FiniteSubset const&, FiniteSubset const&) = default;

   private:
    std::string    _instance;
    std::vector<E> _elements;
  };

  //! Validates, sorts and deduplicates.
  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>> make_subset(S const&                  inst,
                                         std::vector<element_t<S>> xs) {
    for (auto const& x : xs) {
      inst.validate(x);
    }
    std::sort(xs.begin(), xs.end(), InstanceLess<S>{&inst});
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return FiniteSubset<element_t<S>>(inst.name(), std::move(xs));
  }

  //! For input already strictly increasing under the instance order.
  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>> subset_from_sorted(S const&                  inst,
                                                std::vector<element_t<S>> xs) {
    return FiniteSubset<element_t<S>>(inst.name(), std::move(xs));
  }

  template <OrderedSemigroup S>
  bool contains(S const&                          inst,
                FiniteSubset<element_t<S>> const& xs,
                element_t<S> const&               x) {
    return std::binary_search(xs.begin(), xs.end(), x, InstanceLess<S>{&inst});
  }

  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>> set_union(S const&                          inst,
                                       FiniteSubset<element_t<S>> const& xs,
                                       FiniteSubset<element_t<S>> const& ys) {
    std::vector<element_t<S>> out;
    std::set_union(xs.begin(),
                   xs.end(),
                   ys.begin(),
                   ys.end(),
                   std::back_inserter(out),
                   InstanceLess<S>{&inst});
    return subset_from_sorted(inst, std::move(out));
  }

  template <OrderedSemigroup S>
  FiniteSubset<element_t<S>>
  set_intersection(S const&                          inst,
                   FiniteSubset<element_t<S>> const& xs,
                   FiniteSubset<element_t<S>> const& ys) {
    std::vector<element_t<S>> out;
    std::set_intersection(xs.begin(),
                          xs.end(),
                          ys.begin(),
                          ys.end(),
                          std::back_inserter(out),
                          InstanceLess<S>{&inst});
    return subset_from_sorted(inst, std::move(out));
  }

  //! Throws InvalidArgument if xs was not built over inst.
  template <OrderedSemigroup S>
  void check_instance(S const& inst, FiniteSubset<element_t<S>> const& xs) {
    if (xs.instance_name() != inst.name()) {
      throw InvalidArgument("instance mismatch: subset of "
                            + xs.instance_name() + " used with "
                            + inst.name());
    }
  }

}  // namespace ordsg

#endif  // ORDSG_SUBSET_HPP_
