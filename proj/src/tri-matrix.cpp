#include "ordsg/tri-matrix.hpp"

#include "ordsg/error.hpp"

namespace ordsg {

  Matrix::Matrix(std::vector<std::vector<Rational>> const& rows)
      : Matrix(rows.size()) {
    for (std::size_t i = 0; i < _n; ++i) {
      if (rows[i].size() != _n) {
        throw InvalidArgument("matrix row " + std::to_string(i) + " has "
                              + std::to_string(rows[i].size())
                              + " entries, expected " + std::to_string(_n));
      }
      for (std::size_t j = 0; j < _n; ++j) {
        at(i, j) = rows[i][j];
      }
    }
  }

  Matrix Matrix::constant(std::size_t n, Rational const& value) {
    Matrix m(n);
    for (auto& x : m._entries) {
      x = value;
    }
    return m;
  }

  Matrix Matrix::transpose() const {
    Matrix t(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        t.at(j, i) = at(i, j);
      }
    }
    return t;
  }

  std::vector<std::vector<Rational>> Matrix::rows() const {
    std::vector<std::vector<Rational>> out(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      out[i].assign(_entries.begin() + i * _n, _entries.begin() + (i + 1) * _n);
    }
    return out;
  }

  Matrix operator*(Matrix const& x, Matrix const& y) {
    if (x._n != y._n) {
      throw InvalidArgument("matrix product: dimension mismatch ("
                            + std::to_string(x._n) + " vs "
                            + std::to_string(y._n) + ")");
    }
    std::size_t const n = x._n;
    Matrix            out(n);
    mpq_class         acc;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
          acc += x.at(i, k).value() * y.at(k, j).value();
        }
        out.at(i, j) = Rational(acc);
      }
    }
    return out;
  }

  Ordering index_pair_compare(std::size_t n, IndexPair p, IndexPair q) {
    for (auto const& r : {p, q}) {
      if (r.i < 1 || r.j > n || r.i > r.j) {
        throw InvalidArgument("index pair (" + std::to_string(r.i) + ", "
                              + std::to_string(r.j)
                              + ") is not valid for dimension "
                              + std::to_string(n));
      }
    }
    std::size_t dp = p.j - p.i, dq = q.j - q.i;
    if (dp != dq) {
      return dp < dq ? Ordering::LT : Ordering::GT;
    }
    return three_way(p.j, q.j);
  }

  std::vector<IndexPair> index_pairs(std::size_t n) {
    std::vector<IndexPair> out;
    out.reserve(n * (n + 1) / 2);
    for (std::size_t d = 0; d < n; ++d) {
      for (std::size_t j = d + 1; j <= n; ++j) {
        out.push_back({j - d, j});
      }
    }
    return out;
  }

  std::string to_string(Shape shape) {
    return shape == Shape::upper ? "upper" : "lower";
  }

  TriMatrix::TriMatrix(Shape shape, Matrix entries)
      : _shape(shape), _entries(std::move(entries)) {
    std::size_t const n = _entries.dim();
    if (n == 0) {
      throw DomainError("triangular matrix of dimension 0");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const& x = _entries.at(i, j);
        if (on_triangle(shape, i, j) && !x.is_positive()) {
          throw DomainError("entry (" + std::to_string(i + 1) + ", "
                            + std::to_string(j + 1) + ") = " + x.to_string()
                            + " must be positive in a " + to_string(shape)
                            + " triangular matrix");
        }
        if (!on_triangle(shape, i, j) && !x.is_zero()) {
          throw DomainError("entry (" + std::to_string(i + 1) + ", "
                            + std::to_string(j + 1) + ") = " + x.to_string()
                            + " must be 0 in a " + to_string(shape)
                            + " triangular matrix");
        }
      }
    }
  }

  TriMatrix TriMatrix::transpose() const {
    return TriMatrix(_shape == Shape::upper ? Shape::lower : Shape::upper,
                     _entries.transpose());
  }

  TriangularSemigroup::TriangularSemigroup(Shape shape, std::size_t n)
      : _shape(shape), _n(n), _order(index_pairs(n)) {
    if (n == 0) {
      throw InvalidArgument("triangular semigroup: dimension must be >= 1");
    }
  }

  std::string TriangularSemigroup::name() const {
    return to_string(_shape) + "_triangular(" + std::to_string(_n) + ")";
  }

  void TriangularSemigroup::validate(TriMatrix const& x) const {
    if (x.dim() != _n) {
      throw DomainError("matrix of dimension " + std::to_string(x.dim())
                        + " used with " + name());
    }
    if (x.shape() != _shape) {
      throw DomainError(to_string(x.shape()) + " triangular matrix used with "
                        + name());
    }
  }

  TriMatrix TriangularSemigroup::op(TriMatrix const& x,
                                    TriMatrix const& y) const {
    validate(x);
    validate(y);
    try {
      return TriMatrix(_shape, x.entries() * y.entries());
    } catch (DomainError const& e) {
      throw PostconditionError(std::string("triangular product left ")
                               + name() + ": " + e.what());
    }
  }

  Ordering TriangularSemigroup::cmp(TriMatrix const& x,
                                    TriMatrix const& y) const {
    bool const upper = _shape == Shape::upper;
    for (auto const& p : _order) {
      // Lower matrices are compared through their transposes.
      std::size_t r = upper ? p.i - 1 : p.j - 1;
      std::size_t c = upper ? p.j - 1 : p.i - 1;
      Ordering    o = three_way(x.at(r, c), y.at(r, c));
      if (o != Ordering::EQ) {
        return o;
      }
    }
    return Ordering::EQ;
  }

  TriMatrix TriangularSemigroup::make(Matrix const& m) const {
    if (m.dim() != _n) {
      throw DomainError("matrix of dimension " + std::to_string(m.dim())
                        + " used with " + name());
    }
    return TriMatrix(_shape, m);
  }

}  // namespace ordsg
