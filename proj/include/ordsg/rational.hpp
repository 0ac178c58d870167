// Exact rational numbers, always held in lowest terms with a positive
// denominator so that equality is structural.

#ifndef ORDSG_RATIONAL_HPP_
#define ORDSG_RATIONAL_HPP_

#include <compare>      // for strong_ordering
#include <cstdint>      // for int64_t
#include <string>       // for string
#include <string_view>  // for string_view

#include <gmpxx.h>  // for mpq_class

namespace ordsg {

  class Rational {
   public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(runtime/explicit)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class v);

    //! Parses "p", "-p" or "p/q". Fractions are reduced; a zero denominator,
    //! stray characters or an empty string raise ParseError.
    static Rational parse(std::string_view text);

    //! Canonical rendering: "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    bool is_zero() const {
      return sgn(_value) == 0;
    }
    bool is_positive() const {
      return sgn(_value) > 0;
    }
    bool is_negative() const {
      return sgn(_value) < 0;
    }
    bool is_integer() const {
      return _value.get_den() == 1;
    }

    mpq_class const& value() const noexcept {
      return _value;
    }

    Rational& operator+=(Rational const& other);
    Rational& operator*=(Rational const& other);

    friend Rational operator+(Rational lhs, Rational const& rhs) {
      lhs += rhs;
      return lhs;
    }
    friend Rational operator*(Rational lhs, Rational const& rhs) {
      lhs *= rhs;
      return lhs;
    }
    friend Rational operator-(Rational const& lhs, Rational const& rhs);

    friend bool operator==(Rational const& lhs, Rational const& rhs) {
      return lhs._value == rhs._value;
    }
    friend std::strong_ordering operator<=>(Rational const& lhs,
                                            Rational const& rhs) {
      int c = cmp(lhs._value, rhs._value);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

   private:
    mpq_class _value;
  };

}  // namespace ordsg

#endif  // ORDSG_RATIONAL_HPP_
