// Two small instances: the positive integers under addition (an abelian
// baseline), and the left-zero semigroup on a finite carrier, which is
// totally ordered but not linearly orderable once it has two elements.

#ifndef ORDSG_SMALL_INSTANCES_HPP_
#define ORDSG_SMALL_INSTANCES_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"
#include "rational.hpp"

namespace ordsg {

  //! (Z_{>0}, +, <=). Elements are integral Rationals.
  class NatAdd {
   public:
    using element_type = Rational;

    std::string name() const {
      return "nat_add";
    }
    Rational op(Rational const& x, Rational const& y) const {
      return x + y;
    }
    Ordering cmp(Rational const& x, Rational const& y) const {
      return three_way(x, y);
    }
    void validate(Rational const& x) const;
    bool linearly_ordered() const noexcept {
      return true;
    }

    //! The integers lo, ..., hi.
    std::vector<Rational> range(std::int64_t lo, std::int64_t hi) const;

    friend bool operator==(NatAdd const&, NatAdd const&) = default;
  };

  //! Elements of a left-zero semigroup are positions in its carrier; the
  //! total order is carrier order.
  struct LeftZeroElement {
    std::size_t index;
    friend bool operator==(LeftZeroElement const&,
                           LeftZeroElement const&) = default;
  };

  class LeftZero {
   public:
    using element_type = LeftZeroElement;

    //! Carrier names must be non-empty and distinct.
    explicit LeftZero(std::vector<std::string> carrier);

    std::string name() const;
    LeftZeroElement op(LeftZeroElement const& x, LeftZeroElement const&) const {
      return x;
    }
    Ordering cmp(LeftZeroElement const& x, LeftZeroElement const& y) const {
      return three_way(x.index, y.index);
    }
    void validate(LeftZeroElement const& x) const;
    //! Only the one-element left-zero semigroup is linearly ordered.
    bool linearly_ordered() const noexcept {
      return _carrier.size() == 1;
    }

    std::vector<std::string> const& carrier() const noexcept {
      return _carrier;
    }
    std::vector<LeftZeroElement> elements() const;

    LeftZeroElement parse(std::string_view text) const;
    std::string     render(LeftZeroElement const& x) const;

    friend bool operator==(LeftZero const&, LeftZero const&) = default;

   private:
    std::vector<std::string> _carrier;
  };

  inline LeftZero left_zero(std::vector<std::string> carrier) {
    return LeftZero(std::move(carrier));
  }

  inline NatAdd nat_add() {
    return NatAdd{};
  }

}  // namespace ordsg

#endif  // ORDSG_SMALL_INSTANCES_HPP_
