#include "ordsg/rational.hpp"

#include <cctype>   // for isdigit
#include <utility>  // for move

#include "ordsg/error.hpp"

namespace ordsg {

  namespace {
    mpz_class from_int64(std::int64_t n) {
      // mpz_class has no portable int64_t constructor.
      return mpz_class(std::to_string(n));
    }

    // Returns the index one past the digits starting at pos, or throws.
    std::size_t scan_digits(std::string_view text, std::size_t pos) {
      std::size_t i = pos;
      while (i < text.size()
             && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (i == pos) {
        throw ParseError("expected a digit in rational \"" + std::string(text)
                             + "\"",
                         pos);
      }
      return i;
    }
  }  // namespace

  Rational::Rational(std::int64_t n) : _value(from_int64(n)) {}

  Rational::Rational(std::int64_t num, std::int64_t den)
      : _value(from_int64(num), from_int64(den)) {
    if (den == 0) {
      throw InvalidArgument("rational with zero denominator");
    }
    _value.canonicalize();
  }

  Rational::Rational(mpq_class v) : _value(std::move(v)) {
    _value.canonicalize();
  }

  Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      ++pos;
    }
    std::size_t num_end = scan_digits(text, pos);
    std::string digits(text.substr(0, num_end));
    if (digits.front() == '+') {
      digits.erase(0, 1);
    }
    mpz_class   num(digits);
    mpz_class   den(1);
    std::size_t end = num_end;
    if (end < text.size() && text[end] == '/') {
      std::size_t den_end = scan_digits(text, end + 1);
      den = mpz_class(std::string(text.substr(end + 1, den_end - end - 1)));
      if (den == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"",
                         end + 1);
      }
      end = den_end;
    }
    if (end != text.size()) {
      throw ParseError("unexpected character in rational \""
                           + std::string(text) + "\"",
                       end);
    }
    return Rational(mpq_class(num, den));
  }

  std::string Rational::to_string() const {
    return _value.get_str();
  }

  Rational& Rational::operator+=(Rational const& other) {
    _value += other._value;
    return *this;
  }

  Rational& Rational::operator*=(Rational const& other) {
    _value *= other._value;
    return *this;
  }

  Rational operator-(Rational const& lhs, Rational const& rhs) {
    return Rational(mpq_class(lhs._value - rhs._value));
  }

}  // namespace ordsg
