#include "ordsg/pagano.hpp"

#include "ordsg/error.hpp"

namespace ordsg {

  PaganoWitness pagano_witness(std::size_t n) {
    if (n < 2) {
      throw InvalidArgument("pagano_witness: n must be at least 2");
    }
    auto const sn    = static_cast<std::int64_t>(n);
    Matrix     alpha = Matrix::constant(n, Rational(1));
    Matrix     beta  = Matrix::constant(n, Rational(1, 2));
    for (std::size_t i = 0; i < n; ++i) {
      beta.at(i, i) = Rational(sn + 1, 2);
    }
    for (std::size_t j = 0; j < n; ++j) {
      Rational column;
      for (std::size_t i = 0; i < n; ++i) {
        column += beta.at(i, j);
      }
      if (column != Rational(sn)) {
        throw PostconditionError("pagano_witness: column " + std::to_string(j)
                                 + " sums to " + column.to_string());
      }
    }
    if (beta == alpha) {
      throw PostconditionError("pagano_witness: beta equals alpha");
    }
    PaganoWitness w{n, alpha, beta, alpha * alpha, alpha * beta};
    if (w.alpha_squared != w.alpha_beta) {
      throw PostconditionError("pagano_witness: alpha^2 != alpha beta");
    }
    return w;
  }

}  // namespace ordsg
