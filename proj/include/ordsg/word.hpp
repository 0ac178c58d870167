// The free monoid on a finite alphabet {0, ..., k-1}, ordered by shortlex.
// Symbols are rendered as the letters 'a', 'b', ... in text form.

#ifndef ORDSG_WORD_HPP_
#define ORDSG_WORD_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"

namespace ordsg {

  class Word {
   public:
    using symbol_type = std::uint32_t;

    Word() = default;
    explicit Word(std::vector<symbol_type> symbols)
        : _symbols(std::move(symbols)) {}
    Word(std::initializer_list<symbol_type> symbols) : _symbols(symbols) {}

    std::vector<symbol_type> const& symbols() const noexcept {
      return _symbols;
    }
    std::size_t size() const noexcept {
      return _symbols.size();
    }
    bool empty() const noexcept {
      return _symbols.empty();
    }

    friend bool operator==(Word const&, Word const&) = default;

   private:
    std::vector<symbol_type> _symbols;
  };

  //! Shortlex: shorter words first, equal lengths compared symbol by symbol.
  Ordering shortlex_compare(Word const& x, Word const& y) noexcept;

  Word concatenate(Word const& x, Word const& y);

  class FreeMonoid {
   public:
    using element_type = Word;

    // Alphabets beyond 26 letters have no text rendering.
    static constexpr std::size_t max_alphabet_size = 26;

    explicit FreeMonoid(std::size_t alphabet_size);

    std::string name() const;
    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }

    Word op(Word const& x, Word const& y) const {
      return concatenate(x, y);
    }
    Ordering cmp(Word const& x, Word const& y) const noexcept {
      return shortlex_compare(x, y);
    }
    void validate(Word const& w) const;
    bool linearly_ordered() const noexcept {
      return true;
    }
    Word identity() const {
      return Word();
    }

    //! "abba" -> [0, 1, 1, 0]; throws ParseError on letters outside the
    //! alphabet.
    Word        parse(std::string_view text) const;
    std::string render(Word const& w) const;

    //! Every word of length <= max_len, in shortlex order.
    std::vector<Word> words_up_to(std::size_t max_len) const;

    friend bool operator==(FreeMonoid const&, FreeMonoid const&) = default;

   private:
    std::size_t _alphabet_size;
  };

}  // namespace ordsg

#endif  // ORDSG_WORD_HPP_
