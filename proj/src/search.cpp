#include "ordsg/search.hpp"

#include <limits>  // for numeric_limits

namespace ordsg {

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    constexpr auto max    = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t  result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      // result * (n - k + i) / i is exact at every step
      unsigned __int128 next
          = static_cast<unsigned __int128>(result) * (n - k + i) / i;
      if (next > max) {
        return max;
      }
      result = static_cast<std::uint64_t>(next);
    }
    return result;
  }

  namespace detail {
    bool next_combination_with_first(std::vector<std::size_t>& idx,
                                     std::size_t               n) {
      std::size_t const k = idx.size();
      if (k < 2) {
        return false;
      }
      std::size_t i = k - 1;
      while (i >= 1 && idx[i] == n - k + i) {
        --i;
      }
      if (i == 0) {
        return false;
      }
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
      return true;
    }
  }  // namespace detail

}  // namespace ordsg
