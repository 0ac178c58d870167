// A certificate that the n x n matrices with positive rational entries do not
// form a linearly orderable semigroup: with alpha the all-ones matrix and
// beta any positive matrix whose columns all sum to n, alpha^2 = alpha beta
// while alpha != beta, so the semigroup is not cancellative.

#ifndef ORDSG_PAGANO_HPP_
#define ORDSG_PAGANO_HPP_

#include <cstddef>  // for size_t

#include "tri-matrix.hpp"

namespace ordsg {

  struct PaganoWitness {
    std::size_t n;
    Matrix      alpha;
    Matrix      beta;
    Matrix      alpha_squared;
    Matrix      alpha_beta;
  };

  //! beta has (n + 1) / 2 on the diagonal and 1 / 2 elsewhere. The identity
  //! alpha^2 = alpha beta and beta != alpha are checked exactly; n < 2 throws
  //! InvalidArgument.
  PaganoWitness pagano_witness(std::size_t n);

}  // namespace ordsg

#endif  // ORDSG_PAGANO_HPP_
