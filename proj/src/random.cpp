#include "ordsg/random.hpp"

#include <limits>  // for numeric_limits

namespace ordsg {

  std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
      throw InvalidArgument("Rng::below: empty range");
    }
    std::uint64_t const max   = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t const limit = max - (max % n + 1) % n;
    std::uint64_t       x;
    do {
      x = _engine();
    } while (x > limit);
    return x % n;
  }

  Rational random_positive_rational(Rng& rng) {
    auto p = rng.between(1, 9);
    auto q = rng.between(1, 9);
    return Rational(p, q);
  }

  Word random_element(FreeMonoid const& inst, Rng& rng) {
    std::vector<Word::symbol_type> syms;
    while (syms.size() < 6 && rng.below(3) != 0) {
      syms.push_back(
          static_cast<Word::symbol_type>(rng.below(inst.alphabet_size())));
    }
    return Word(std::move(syms));
  }

  TriMatrix random_element(TriangularSemigroup const& inst, Rng& rng) {
    Matrix m(inst.dim());
    for (std::size_t i = 0; i < inst.dim(); ++i) {
      for (std::size_t j = 0; j < inst.dim(); ++j) {
        if (on_triangle(inst.shape(), i, j)) {
          m.at(i, j) = random_positive_rational(rng);
        }
      }
    }
    return inst.make(m);
  }

  Rational random_element(NatAdd const&, Rng& rng) {
    return Rational(rng.between(1, 100));
  }

  LeftZeroElement random_element(LeftZero const& inst, Rng& rng) {
    return {static_cast<std::size_t>(rng.below(inst.carrier().size()))};
  }

  Rational random_element(NonNegRationals const&, Rng& rng) {
    if (rng.below(10) == 0) {
      return Rational();
    }
    return random_positive_rational(rng);
  }

}  // namespace ordsg
