// Conversions from library values to the oracle representations.

#ifndef ORDSG_TESTS_SUPPORT_HPP_
#define ORDSG_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordsg/semiring.hpp"
#include "ordsg/subset.hpp"
#include "ordsg/tri-matrix.hpp"
#include "ordsg/word.hpp"

namespace support {

  inline std::string str(ordsg::Word const& w) {
    std::string out;
    for (auto s : w.symbols()) {
      out.push_back(static_cast<char>('a' + s));
    }
    return out;
  }

  inline oracle::WordSet strs(ordsg::FiniteSubset<ordsg::Word> const& xs) {
    oracle::WordSet out;
    for (auto const& w : xs) {
      out.insert(str(w));
    }
    return out;
  }

  inline oracle::Mat mat(ordsg::Matrix const& m) {
    oracle::Mat out(m.dim(), std::vector<mpq_class>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = 0; j < m.dim(); ++j) {
        out[i][j] = m.at(i, j).value();
      }
    }
    return out;
  }

  inline oracle::Mat transpose(oracle::Mat const& m) {
    oracle::Mat out = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        out[i][j] = m[j][i];
      }
    }
    return out;
  }

  template <typename F>
  oracle::Poly poly(F const& f) {
    oracle::Poly out;
    for (auto const& [k, c] : f.terms()) {
      out[str(k)] = c.value();
    }
    return out;
  }

  inline int sign(ordsg::Ordering o) {
    return o == ordsg::Ordering::LT ? -1 : (o == ordsg::Ordering::EQ ? 0 : 1);
  }

}  // namespace support

#endif  // ORDSG_TESTS_SUPPORT_HPP_
