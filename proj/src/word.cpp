#include "ordsg/word.hpp"

#include <algorithm>  // for lexicographical_compare_three_way

#include "ordsg/error.hpp"

namespace ordsg {

  Ordering shortlex_compare(Word const& x, Word const& y) noexcept {
    if (x.size() != y.size()) {
      return x.size() < y.size() ? Ordering::LT : Ordering::GT;
    }
    auto c = std::lexicographical_compare_three_way(x.symbols().begin(),
                                                    x.symbols().end(),
                                                    y.symbols().begin(),
                                                    y.symbols().end());
    return c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
  }

  Word concatenate(Word const& x, Word const& y) {
    std::vector<Word::symbol_type> out;
    out.reserve(x.size() + y.size());
    out.insert(out.end(), x.symbols().begin(), x.symbols().end());
    out.insert(out.end(), y.symbols().begin(), y.symbols().end());
    return Word(std::move(out));
  }

  FreeMonoid::FreeMonoid(std::size_t alphabet_size)
      : _alphabet_size(alphabet_size) {
    if (alphabet_size == 0) {
      throw InvalidArgument("free_monoid: alphabet size must be at least 1");
    }
    if (alphabet_size > max_alphabet_size) {
      throw InvalidArgument("free_monoid: alphabet size must be at most "
                            + std::to_string(max_alphabet_size));
    }
  }

  std::string FreeMonoid::name() const {
    return "free_monoid(" + std::to_string(_alphabet_size) + ")";
  }

  void FreeMonoid::validate(Word const& w) const {
    for (auto s : w.symbols()) {
      if (s >= _alphabet_size) {
        throw DomainError("symbol " + std::to_string(s)
                          + " outside the alphabet of " + name());
      }
    }
  }

  Word FreeMonoid::parse(std::string_view text) const {
    std::vector<Word::symbol_type> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < 'a' || c > 'z') {
        throw ParseError("'" + std::string(1, c) + "' is not a letter", i);
      }
      if (static_cast<std::size_t>(c - 'a') >= _alphabet_size) {
        throw DomainError("letter '" + std::string(1, c) + "' at position "
                          + std::to_string(i) + " is not in the alphabet of "
                          + name());
      }
      out.push_back(static_cast<Word::symbol_type>(c - 'a'));
    }
    return Word(std::move(out));
  }

  std::string FreeMonoid::render(Word const& w) const {
    std::string out;
    out.reserve(w.size());
    for (auto s : w.symbols()) {
      out.push_back(static_cast<char>('a' + s));
    }
    return out;
  }

  std::vector<Word> FreeMonoid::words_up_to(std::size_t max_len) const {
    std::vector<Word> out{Word()};
    std::size_t       level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t level_end = out.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (std::size_t s = 0; s < _alphabet_size; ++s) {
          auto syms = out[i].symbols();
          syms.push_back(static_cast<Word::symbol_type>(s));
          out.emplace_back(std::move(syms));
        }
      }
      level_begin = level_end;
    }
    return out;
  }

}  // namespace ordsg
