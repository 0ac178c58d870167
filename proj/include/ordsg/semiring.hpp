// Semigroup semirings K[A]: finitely supported maps from a linearly ordered
// semigroup A to a linearly ordered semiring K, with pointwise addition and
// the Cauchy (convolution) product
//
//   (f g)(a) = sum of f(b) g(c) over all b, c with b c = a.
//
// Two distinct maps are ordered by their coefficients at the A-least point
// where they disagree. Terms are stored sorted by A's order with zero
// coefficients pruned, so that point is found in a single merge.

#ifndef ORDSG_SEMIRING_HPP_
#define ORDSG_SEMIRING_HPP_

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <map>        // for map
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "core.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace ordsg {

  //! (Q_{>=0}, +, *, <=).
  class NonNegRationals {
   public:
    using element_type = Rational;

    std::string name() const {
      return "nonneg_rationals";
    }
    Rational op(Rational const& x, Rational const& y) const {
      return x * y;
    }
    Rational add(Rational const& x, Rational const& y) const {
      return x + y;
    }
    Rational zero() const {
      return Rational();
    }
    Ordering cmp(Rational const& x, Rational const& y) const {
      return three_way(x, y);
    }
    void validate(Rational const& x) const {
      if (x.is_negative()) {
        throw DomainError("coefficient " + x.to_string() + " is negative");
      }
    }
    bool linearly_ordered() const noexcept {
      return true;
    }
    friend bool operator==(NonNegRationals const&,
                           NonNegRationals const&) = default;
  };

  template <typename Key, typename Coeff>
  class FinSuppMap {
   public:
    using term_type = std::pair<Key, Coeff>;

    FinSuppMap() = default;

    //! Terms must already be canonical: keys strictly increasing in the
    //! base order, no zero coefficients. Use SemigroupSemiring::make to
    //! canonicalise arbitrary input.
    explicit FinSuppMap(std::vector<term_type> terms)
        : _terms(std::move(terms)) {}

    std::vector<term_type> const& terms() const noexcept {
      return _terms;
    }
    std::size_t support_size() const noexcept {
      return _terms.size();
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    friend bool operator==(FinSuppMap const&, FinSuppMap const&) = default;

   private:
    std::vector<term_type> _terms;
  };

  template <OrderedSemiring K, OrderedSemigroup A>
  class SemigroupSemiring {
   public:
    using coeff_type   = element_t<K>;
    using key_type     = element_t<A>;
    using element_type = FinSuppMap<key_type, coeff_type>;
    using term_type    = typename element_type::term_type;

    SemigroupSemiring(K coeffs, A base)
        : _coeffs(std::move(coeffs)), _base(std::move(base)) {}

    std::string name() const {
      return _coeffs.name() + "[" + _base.name() + "]";
    }
    K const& coefficients() const noexcept {
      return _coeffs;
    }
    A const& base() const noexcept {
      return _base;
    }
    bool linearly_ordered() const noexcept {
      return _coeffs.linearly_ordered() && _base.linearly_ordered();
    }

    element_type zero() const {
      return element_type();
    }

    //! The single term c * key.
    element_type monomial(key_type const& key, coeff_type const& c) const {
      return make({{key, c}});
    }

    //! Canonicalises arbitrary terms: validates, sorts by the base order,
    //! sums coefficients of repeated keys and drops zeros.
    element_type make(std::vector<term_type> terms) const {
      for (auto const& [k, c] : terms) {
        _base.validate(k);
        _coeffs.validate(c);
      }
      std::stable_sort(
          terms.begin(), terms.end(), [this](auto const& x, auto const& y) {
            return _base.cmp(x.first, y.first) == Ordering::LT;
          });
      std::vector<term_type> out;
      for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first) {
          out.back().second = _coeffs.add(out.back().second, t.second);
        } else {
          out.push_back(std::move(t));
        }
      }
      std::erase_if(out, [this](auto const& t) {
        return t.second == _coeffs.zero();
      });
      return element_type(std::move(out));
    }

    void validate(element_type const& f) const {
      auto const& ts = f.terms();
      for (std::size_t i = 0; i < ts.size(); ++i) {
        _base.validate(ts[i].first);
        _coeffs.validate(ts[i].second);
        if (ts[i].second == _coeffs.zero()) {
          throw DomainError("zero coefficient stored in an element of "
                            + name());
        }
        if (i > 0 && _base.cmp(ts[i - 1].first, ts[i].first) != Ordering::LT) {
          throw DomainError("keys not strictly increasing in an element of "
                            + name());
        }
      }
    }

    element_type add(element_type const& f, element_type const& g) const {
      auto const&            a = f.terms();
      auto const&            b = g.terms();
      std::vector<term_type> out;
      out.reserve(a.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        Ordering o = i == a.size()
                         ? Ordering::GT
                         : (j == b.size() ? Ordering::LT
                                          : _base.cmp(a[i].first, b[j].first));
        if (o == Ordering::LT) {
          out.push_back(a[i++]);
        } else if (o == Ordering::GT) {
          out.push_back(b[j++]);
        } else {
          auto c = _coeffs.add(a[i].second, b[j].second);
          if (!(c == _coeffs.zero())) {
            out.emplace_back(a[i].first, std::move(c));
          }
          ++i;
          ++j;
        }
      }
      return element_type(std::move(out));
    }

    //! Cauchy product. The result is non-commutative whenever A is.
    element_type op(element_type const& f, element_type const& g) const {
      std::map<key_type, coeff_type, KeyLess> acc(KeyLess{&_base});
      for (auto const& [b, fb] : f.terms()) {
        for (auto const& [c, gc] : g.terms()) {
          auto key = _base.op(b, c);
          auto val = _coeffs.op(fb, gc);
          auto it  = acc.find(key);
          if (it == acc.end()) {
            acc.emplace(std::move(key), std::move(val));
          } else {
            it->second = _coeffs.add(it->second, val);
          }
        }
      }
      std::vector<term_type> out;
      out.reserve(acc.size());
      for (auto& [k, v] : acc) {
        if (!(v == _coeffs.zero())) {
          out.emplace_back(k, v);
        }
      }
      return element_type(std::move(out));
    }

    //! Compares f and g by their coefficients at the least disagreement
    //! point of A; an absent key has coefficient zero.
    Ordering cmp(element_type const& f, element_type const& g) const {
      auto const& a    = f.terms();
      auto const& b    = g.terms();
      auto const  zero = _coeffs.zero();
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        Ordering o = i == a.size()
                         ? Ordering::GT
                         : (j == b.size() ? Ordering::LT
                                          : _base.cmp(a[i].first, b[j].first));
        Ordering c;
        if (o == Ordering::LT) {
          c = _coeffs.cmp(a[i++].second, zero);
        } else if (o == Ordering::GT) {
          c = _coeffs.cmp(zero, b[j++].second);
        } else {
          c = _coeffs.cmp(a[i++].second, b[j++].second);
        }
        if (c != Ordering::EQ) {
          return c;
        }
      }
      return Ordering::EQ;
    }

    friend bool operator==(SemigroupSemiring const&,
                           SemigroupSemiring const&) = default;

   private:
    struct KeyLess {
      A const* base;
      bool     operator()(key_type const& x, key_type const& y) const {
        return base->cmp(x, y) == Ordering::LT;
      }
    };

    K _coeffs;
    A _base;
  };

  template <OrderedSemiring K, OrderedSemigroup A>
  SemigroupSemiring<K, A> semigroup_semiring(K coeffs, A base) {
    return SemigroupSemiring<K, A>(std::move(coeffs), std::move(base));
  }

}  // namespace ordsg

#endif  // ORDSG_SEMIRING_HPP_
