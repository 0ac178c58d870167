#include "ordsg/error.hpp"
#include "ordsg/small-instances.hpp"

namespace ordsg {

  void NatAdd::validate(Rational const& x) const {
    if (!x.is_integer() || !x.is_positive()) {
      throw DomainError(x.to_string() + " is not a positive integer");
    }
  }

  std::vector<Rational> NatAdd::range(std::int64_t lo, std::int64_t hi) const {
    if (lo < 1) {
      throw InvalidArgument("nat_add range must start at 1 or above");
    }
    std::vector<Rational> out;
    for (std::int64_t k = lo; k <= hi; ++k) {
      out.emplace_back(k);
    }
    return out;
  }

}  // namespace ordsg
