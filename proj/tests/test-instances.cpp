#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "ordsg/pagano.hpp"
#include "ordsg/random.hpp"
#include "ordsg/semiring.hpp"
#include "ordsg/small-instances.hpp"
#include "ordsg/tri-matrix.hpp"
#include "ordsg/word.hpp"
#include "support.hpp"

namespace ordsg {

  using support::sign;

  ////////////////////////////////////////////////////////////////////////
  // free monoid
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("FreeMonoid: parse, render and construction", "[instances][word]") {
    FreeMonoid fm(2);
    REQUIRE(fm.name() == "free_monoid(2)");
    REQUIRE(fm.parse("abba") == Word({0, 1, 1, 0}));
    REQUIRE(fm.render(Word({0, 1, 1, 0})) == "abba");
    REQUIRE(fm.parse("") == fm.identity());
    REQUIRE_THROWS_AS(fm.parse("abc"), DomainError);
    REQUIRE_THROWS_AS(fm.parse("ab1"), ParseError);
    try {
      fm.parse("ab1");
    } catch (ParseError const& e) {
      REQUIRE(e.position() == 2);
    }
    REQUIRE_THROWS_AS(FreeMonoid(0), InvalidArgument);
    REQUIRE_THROWS_AS(FreeMonoid(27), InvalidArgument);
    REQUIRE_THROWS_AS(fm.validate(Word({2})), DomainError);
  }

  TEST_CASE("FreeMonoid: shortlex examples", "[instances][word]") {
    FreeMonoid fm(2);
    auto w = [&](char const* s) { return fm.parse(s); };
    REQUIRE(fm.cmp(w("b"), w("aa")) == Ordering::LT);
    REQUIRE(fm.cmp(w("ab"), w("ba")) == Ordering::LT);
    REQUIRE(fm.cmp(w(""), w("a")) == Ordering::LT);
    REQUIRE(fm.cmp(w("aba"), w("aba")) == Ordering::EQ);
    REQUIRE(fm.op(w("ab"), w("ba")) == w("abba"));
  }

  TEST_CASE("FreeMonoid: words_up_to matches the oracle", "[instances][word]") {
    for (std::size_t k = 1; k <= 3; ++k) {
      FreeMonoid fm(k);
      std::string letters;
      for (std::size_t i = 0; i < k; ++i) {
        letters.push_back(static_cast<char>('a' + i));
      }
      for (std::size_t len = 0; len <= 4; ++len) {
        auto words = fm.words_up_to(len);
        auto ref   = oracle::all_words(len, letters);
        std::sort(ref.begin(), ref.end(), oracle::Shortlex{});
        REQUIRE(words.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
          REQUIRE(support::str(words[i]) == ref[i]);
        }
      }
    }
    REQUIRE(FreeMonoid(2).words_up_to(3).size() == 15);
  }

  TEST_CASE("FreeMonoid: order is a translation-invariant total order",
            "[instances][word][property]") {
    FreeMonoid fm(3);
    Rng        rng(101);
    for (int t = 0; t < 3000; ++t) {
      auto a = random_element(fm, rng), b = random_element(fm, rng),
           c = random_element(fm, rng);
      auto sa = support::str(a), sb = support::str(b);
      int  expect = sa == sb ? 0 : (oracle::Shortlex{}(sa, sb) ? -1 : 1);
      REQUIRE(sign(fm.cmp(a, b)) == expect);
      REQUIRE(support::str(fm.op(a, b)) == sa + sb);
      if (expect < 0) {
        REQUIRE(less(fm, fm.op(a, c), fm.op(b, c)));
        REQUIRE(less(fm, fm.op(c, a), fm.op(c, b)));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // triangular matrices
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("index pairs in zig-zag order", "[instances][matrix]") {
    auto ps = index_pairs(3);
    std::vector<IndexPair> expect{{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {1, 3}};
    REQUIRE(ps == expect);
    REQUIRE(index_pairs(1) == std::vector<IndexPair>{{1, 1}});
    REQUIRE(index_pairs(4).size() == 10);
    REQUIRE(index_pair_compare(3, {3, 3}, {1, 2}) == Ordering::LT);
    REQUIRE(index_pair_compare(3, {1, 2}, {2, 3}) == Ordering::LT);
    REQUIRE(index_pair_compare(3, {2, 3}, {2, 3}) == Ordering::EQ);
    REQUIRE_THROWS_AS(index_pair_compare(3, {2, 1}, {1, 1}), InvalidArgument);
    REQUIRE_THROWS_AS(index_pair_compare(3, {1, 4}, {1, 1}), InvalidArgument);
    REQUIRE_THROWS_AS(index_pair_compare(3, {0, 1}, {1, 1}), InvalidArgument);
  }

  TEST_CASE("index pair order is a well-order compatible with the listing",
            "[instances][matrix][property]") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto ps = index_pairs(n);
      REQUIRE(ps.size() == n * (n + 1) / 2);
      for (std::size_t x = 0; x < ps.size(); ++x) {
        for (std::size_t y = 0; y < ps.size(); ++y) {
          REQUIRE(sign(index_pair_compare(n, ps[x], ps[y]))
                  == (x < y ? -1 : (x == y ? 0 : 1)));
        }
      }
    }
  }

  TEST_CASE("TriMatrix: shape validation", "[instances][matrix]") {
    auto u = upper_triangular(2);
    auto ok = Matrix({{Rational(1), Rational(1, 2)}, {Rational(0), Rational(3)}});
    REQUIRE_NOTHROW(u.make(ok));
    auto zero_diag
        = Matrix({{Rational(1), Rational(0)}, {Rational(0), Rational(3)}});
    REQUIRE_THROWS_AS(u.make(zero_diag), DomainError);
    auto below
        = Matrix({{Rational(1), Rational(1)}, {Rational(1), Rational(3)}});
    REQUIRE_THROWS_AS(u.make(below), DomainError);
    auto negative
        = Matrix({{Rational(-1), Rational(1)}, {Rational(0), Rational(3)}});
    REQUIRE_THROWS_AS(u.make(negative), DomainError);
    REQUIRE_THROWS_AS(u.make(Matrix(3)), DomainError);
    REQUIRE_THROWS_AS(Matrix({{Rational(1)}, {Rational(1), Rational(2)}}),
                      InvalidArgument);
    auto l = lower_triangular(2);
    REQUIRE_NOTHROW(l.make(ok.transpose()));
    REQUIRE_THROWS_AS(l.make(ok), DomainError);
    REQUIRE(u.name() == "upper_triangular(2)");
    REQUIRE(l.name() == "lower_triangular(2)");
  }

  TEST_CASE("TriMatrix: product and order match the oracle",
            "[instances][matrix][property]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto u = upper_triangular(n);
      Rng  rng(200 + n);
      for (int t = 0; t < 300; ++t) {
        auto a = random_element(u, rng), b = random_element(u, rng);
        auto ma = support::mat(a.entries()), mb = support::mat(b.entries());
        REQUIRE(support::mat(u.op(a, b).entries()) == oracle::multiply(ma, mb));
        REQUIRE(sign(u.cmp(a, b)) == oracle::zigzag_upper(ma, mb));
      }
    }
  }

  TEST_CASE("TriMatrix: ties on the diagonal are broken above it",
            "[instances][matrix]") {
    auto u = upper_triangular(2);
    auto a = u.make(Matrix({{Rational(1), Rational(5)}, {Rational(0), Rational(1)}}));
    auto b = u.make(Matrix({{Rational(1), Rational(1)}, {Rational(0), Rational(2)}}));
    // (2,2) precedes (1,2): 1 < 2 decides although 5 > 1
    REQUIRE(u.cmp(a, b) == Ordering::LT);
  }

  TEST_CASE("L_n is ordered through the transpose",
            "[instances][matrix][property]") {
    auto u = upper_triangular(3);
    auto l = lower_triangular(3);
    Rng  rng(31);
    for (int t = 0; t < 500; ++t) {
      auto a = random_element(l, rng), b = random_element(l, rng),
           c = random_element(l, rng);
      REQUIRE(l.cmp(a, b) == u.cmp(a.transpose(), b.transpose()));
      REQUIRE(sign(l.cmp(a, b))
              == oracle::zigzag_upper(support::transpose(support::mat(a.entries())),
                                      support::transpose(support::mat(b.entries()))));
      if (less(l, a, b)) {
        REQUIRE(less(l, l.op(a, c), l.op(b, c)));
        REQUIRE(less(l, l.op(c, a), l.op(c, b)));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Pagano witness
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("Pagano witness matches the oracle", "[instances][pagano]") {
    for (std::size_t n = 2; n <= 6; ++n) {
      auto w = pagano_witness(n);
      // independent construction: all-ones and a column-stochastic-times-n
      oracle::Mat alpha(n, std::vector<mpq_class>(n, 1));
      oracle::Mat beta(n, std::vector<mpq_class>(n, mpq_class(1, 2)));
      for (std::size_t i = 0; i < n; ++i) {
        beta[i][i] = mpq_class(n + 1, 2);
        beta[i][i].canonicalize();
      }
      REQUIRE(support::mat(w.alpha) == alpha);
      REQUIRE(support::mat(w.beta) == beta);
      REQUIRE(oracle::multiply(alpha, alpha) == oracle::multiply(alpha, beta));
      REQUIRE(support::mat(w.alpha_squared) == oracle::multiply(alpha, alpha));
      REQUIRE(w.alpha_squared == w.alpha_beta);
      REQUIRE_FALSE(w.alpha == w.beta);
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class col = 0;
        for (std::size_t i = 0; i < n; ++i) {
          col += beta[i][j];
          REQUIRE(beta[i][j] > 0);
        }
        REQUIRE(col == n);
      }
    }
    REQUIRE_THROWS_AS(pagano_witness(1), InvalidArgument);
  }

  TEST_CASE("Pagano witness: n = 2 entries", "[instances][pagano]") {
    auto w = pagano_witness(2);
    REQUIRE(w.beta.at(0, 0) == Rational(3, 2));
    REQUIRE(w.beta.at(0, 1) == Rational(1, 2));
    REQUIRE(w.alpha_squared.at(1, 0) == Rational(2));
  }

  ////////////////////////////////////////////////////////////////////////
  // nat_add and left_zero
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("NatAdd", "[instances]") {
    NatAdd n;
    REQUIRE(n.op(Rational(2), Rational(3)) == Rational(5));
    REQUIRE(n.range(1, 4).size() == 4);
    REQUIRE_THROWS_AS(n.validate(Rational(0)), DomainError);
    REQUIRE_THROWS_AS(n.validate(Rational(3, 2)), DomainError);
    REQUIRE(n.linearly_ordered());
  }

  TEST_CASE("LeftZero", "[instances]") {
    LeftZero lz({"p", "q"});
    auto     p = lz.parse("p"), q = lz.parse("q");
    REQUIRE(lz.op(p, q) == p);
    REQUIRE(lz.op(q, p) == q);
    REQUIRE(lz.render(q) == "q");
    REQUIRE_FALSE(lz.linearly_ordered());
    REQUIRE(LeftZero({"x"}).linearly_ordered());
    REQUIRE(lz.name() == "left_zero(p,q)");
    REQUIRE_THROWS_AS(lz.parse("r"), DomainError);
    REQUIRE_THROWS_AS(LeftZero({}), InvalidArgument);
    REQUIRE_THROWS_AS(LeftZero({"p", "p"}), InvalidArgument);
    REQUIRE_THROWS_AS(lz.validate(LeftZeroElement{2}), DomainError);
  }

  ////////////////////////////////////////////////////////////////////////
  // semigroup semiring
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("K[A]: construction merges and drops zeros", "[instances][semiring]") {
    auto ka = semigroup_semiring(NonNegRationals{}, FreeMonoid(2));
    auto fm = ka.base();
    auto f  = ka.make({{fm.parse("b"), Rational(1)},
                       {fm.parse("a"), Rational(0)},
                       {fm.parse("b"), Rational(1, 2)}});
    REQUIRE(f.support_size() == 1);
    REQUIRE(f.terms()[0].second == Rational(3, 2));
    REQUIRE_THROWS_AS(ka.make({{fm.parse("a"), Rational(-1)}}), DomainError);
    REQUIRE(ka.name() == "nonneg_rationals[free_monoid(2)]");
    REQUIRE(ka.zero().is_zero());
  }

  TEST_CASE("K[A]: order examples", "[instances][semiring]") {
    auto ka = semigroup_semiring(NonNegRationals{}, FreeMonoid(2));
    auto fm = ka.base();
    auto m  = [&](char const* w, Rational c) { return ka.monomial(fm.parse(w), c); };
    // the least key where they differ is "a": 0 < 1
    REQUIRE(ka.cmp(m("b", 5), m("a", 1)) == Ordering::LT);
    REQUIRE(ka.cmp(ka.zero(), m("aa", Rational(1, 9))) == Ordering::LT);
    REQUIRE(ka.cmp(m("a", 1), m("a", 2)) == Ordering::LT);
    REQUIRE(ka.cmp(ka.add(m("a", 1), m("b", 1)), m("a", 1)) == Ordering::GT);
  }

  TEST_CASE("K[A]: operations and order match the map oracle",
            "[instances][semiring][property]") {
    auto ka = semigroup_semiring(NonNegRationals{}, FreeMonoid(2));
    Rng  rng(77);
    for (int t = 0; t < 1000; ++t) {
      auto f = random_element(ka, rng), g = random_element(ka, rng);
      REQUIRE_NOTHROW(ka.validate(f));
      auto pf = support::poly(f), pg = support::poly(g);
      REQUIRE(support::poly(ka.add(f, g)) == oracle::poly_add(pf, pg));
      REQUIRE(support::poly(ka.op(f, g)) == oracle::poly_mul(pf, pg));
      REQUIRE(sign(ka.cmp(f, g)) == oracle::poly_cmp(pf, pg));
    }
  }

}  // namespace ordsg
