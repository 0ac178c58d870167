// Seeded element generators for each shipped instance. All draws go through
// Rng::below, which is specified here rather than by the standard library,
// so a seed reproduces the same elements on every platform.

#ifndef ORDSG_RANDOM_HPP_
#define ORDSG_RANDOM_HPP_

#include <algorithm>  // for find
#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64
#include <vector>   // for vector

#include "core.hpp"
#include "rational.hpp"
#include "semiring.hpp"
#include "small-instances.hpp"
#include "subset.hpp"
#include "tri-matrix.hpp"
#include "word.hpp"

namespace ordsg {

  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    //! Uniform on [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n);

    //! Uniform on [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
      return lo + static_cast<std::int64_t>(
                 below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

   private:
    std::mt19937_64 _engine;
  };

  //! p / q with 1 <= p, q <= 9.
  Rational random_positive_rational(Rng& rng);

  //! Length 0..6, each further letter drawn with probability 2/3.
  Word random_element(FreeMonoid const& inst, Rng& rng);
  //! Entries on the triangle drawn by random_positive_rational.
  TriMatrix       random_element(TriangularSemigroup const& inst, Rng& rng);
  //! Uniform on 1..100.
  Rational        random_element(NatAdd const& inst, Rng& rng);
  LeftZeroElement random_element(LeftZero const& inst, Rng& rng);
  //! Zero with probability 1/10, otherwise random_positive_rational.
  Rational random_element(NonNegRationals const& inst, Rng& rng);

  //! Support size uniform on 0..4.
  template <OrderedSemiring K, OrderedSemigroup A>
  element_t<SemigroupSemiring<K, A>>
  random_element(SemigroupSemiring<K, A> const& inst, Rng& rng) {
    std::size_t const support = rng.below(5);
    std::vector<typename SemigroupSemiring<K, A>::term_type> terms;
    for (std::size_t i = 0; i < support; ++i) {
      auto c = random_element(inst.coefficients(), rng);
      while (c == inst.coefficients().zero()) {
        c = random_element(inst.coefficients(), rng);
      }
      terms.emplace_back(random_element(inst.base(), rng), std::move(c));
    }
    return inst.make(std::move(terms));
  }

  template <typename S>
  concept RandomlySampled = OrderedSemigroup<S> && requires(S const& s, Rng& r) {
    { random_element(s, r) } -> std::same_as<element_t<S>>;
  };

  //! In semiring mode, elements strictly above zero; otherwise all elements.
  template <OrderedSemigroup S>
  bool in_positive_cone(S const& inst, element_t<S> const& x) {
    if constexpr (OrderedSemiring<S>) {
      return inst.cmp(inst.zero(), x) == Ordering::LT;
    } else {
      return true;
    }
  }

  template <RandomlySampled S>
  std::vector<element_t<S>> random_elements(S const&    inst,
                                            Rng&        rng,
                                            std::size_t count) {
    std::vector<element_t<S>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(random_element(inst, rng));
    }
    return out;
  }

  //! {a^e : e in E} for a random a and up to max_size distinct exponents
  //! drawn from 1..2 max_size. Such sets always pairwise commute.
  template <RandomlySampled S>
  FiniteSubset<element_t<S>> random_commuting_subset(S const&    inst,
                                                     Rng&        rng,
                                                     std::size_t max_size) {
    auto const  a = random_element(inst, rng);
    std::size_t k = 1 + rng.below(max_size);
    std::vector<std::size_t> exps;
    while (exps.size() < k) {
      std::size_t e = 1 + rng.below(2 * max_size);
      if (std::find(exps.begin(), exps.end(), e) == exps.end()) {
        exps.push_back(e);
      }
    }
    std::vector<element_t<S>> xs;
    for (auto e : exps) {
      xs.push_back(power(inst, a, e));
    }
    return make_subset(inst, std::move(xs));
  }

}  // namespace ordsg

#endif  // ORDSG_RANDOM_HPP_
