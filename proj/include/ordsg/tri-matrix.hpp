// Dense rational matrices, and the semigroups U_n / L_n of upper / lower
// triangular matrices with strictly positive entries on the triangle, ordered
// by the zig-zag order.

#ifndef ORDSG_TRI_MATRIX_HPP_
#define ORDSG_TRI_MATRIX_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "core.hpp"
#include "rational.hpp"

namespace ordsg {

  class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : _n(n), _entries(n * n) {}
    //! Rows must all have length rows.size().
    explicit Matrix(std::vector<std::vector<Rational>> const& rows);

    static Matrix constant(std::size_t n, Rational const& value);

    std::size_t dim() const noexcept {
      return _n;
    }
    //! 0-based access.
    Rational const& at(std::size_t i, std::size_t j) const {
      return _entries[i * _n + j];
    }
    Rational& at(std::size_t i, std::size_t j) {
      return _entries[i * _n + j];
    }

    Matrix transpose() const;
    std::vector<std::vector<Rational>> rows() const;

    friend Matrix operator*(Matrix const& x, Matrix const& y);
    friend bool   operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t           _n = 0;
    std::vector<Rational> _entries;
  };

  ////////////////////////////////////////////////////////////////////////
  // Index pairs (i, j) with 1 <= i <= j <= n
  ////////////////////////////////////////////////////////////////////////

  struct IndexPair {
    std::size_t i;
    std::size_t j;
    friend bool operator==(IndexPair const&, IndexPair const&) = default;
  };

  //! The well-order on index pairs: by distance j - i from the diagonal,
  //! then by column j. Throws InvalidArgument for pairs outside 1..n or
  //! below the diagonal.
  Ordering index_pair_compare(std::size_t n, IndexPair p, IndexPair q);

  //! All index pairs of dimension n in increasing order.
  std::vector<IndexPair> index_pairs(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // TriMatrix
  ////////////////////////////////////////////////////////////////////////

  enum class Shape { upper, lower };

  std::string to_string(Shape shape);

  class TriMatrix {
   public:
    TriMatrix() = default;
    //! Throws DomainError unless entries on the triangle are > 0 and all
    //! other entries are exactly 0.
    TriMatrix(Shape shape, Matrix entries);

    Shape shape() const noexcept {
      return _shape;
    }
    std::size_t dim() const noexcept {
      return _entries.dim();
    }
    Matrix const& entries() const noexcept {
      return _entries;
    }
    Rational const& at(std::size_t i, std::size_t j) const {
      return _entries.at(i, j);
    }

    TriMatrix transpose() const;

    friend bool operator==(TriMatrix const&, TriMatrix const&) = default;

   private:
    Shape  _shape = Shape::upper;
    Matrix _entries;
  };

  //! Whether (0-based) (i, j) lies on the triangle of the given shape.
  constexpr bool on_triangle(Shape shape, std::size_t i, std::size_t j) {
    return shape == Shape::upper ? i <= j : j <= i;
  }

  //! U_n (upper) or L_n (lower) over the positive rationals.
  class TriangularSemigroup {
   public:
    using element_type = TriMatrix;

    TriangularSemigroup(Shape shape, std::size_t n);

    std::string name() const;
    Shape       shape() const noexcept {
      return _shape;
    }
    std::size_t dim() const noexcept {
      return _n;
    }

    //! Exact product; closure of the triangle is checked on the result.
    TriMatrix op(TriMatrix const& x, TriMatrix const& y) const;
    //! Zig-zag order; for L_n it is the order of the transposes in U_n.
    Ordering cmp(TriMatrix const& x, TriMatrix const& y) const;
    void     validate(TriMatrix const& x) const;
    bool     linearly_ordered() const noexcept {
      return true;
    }

    //! Builds an element from a full n x n matrix, checking shape.
    TriMatrix make(Matrix const& m) const;

    friend bool operator==(TriangularSemigroup const&,
                           TriangularSemigroup const&) = default;

   private:
    Shape                  _shape;
    std::size_t            _n;
    std::vector<IndexPair> _order;
  };

  inline TriangularSemigroup upper_triangular(std::size_t n) {
    return TriangularSemigroup(Shape::upper, n);
  }

  inline TriangularSemigroup lower_triangular(std::size_t n) {
    return TriangularSemigroup(Shape::lower, n);
  }

}  // namespace ordsg

#endif  // ORDSG_TRI_MATRIX_HPP_
