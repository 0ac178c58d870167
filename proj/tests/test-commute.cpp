#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "ordsg/commute.hpp"
#include "ordsg/random.hpp"
#include "support.hpp"

namespace ordsg {

  namespace {
    FreeMonoid const fm(2);

    FiniteSubset<Word> words(std::vector<char const*> const& xs) {
      std::vector<Word> out;
      for (auto x : xs) {
        out.push_back(fm.parse(x));
      }
      return make_subset(fm, std::move(out));
    }

    // Brute-force centralizer and normalizer over strings.
    oracle::WordSet centralizer_oracle(oracle::WordSet const&          s,
                                       std::vector<std::string> const& u) {
      oracle::WordSet out;
      for (auto const& x : u) {
        bool ok = true;
        for (auto const& y : s) {
          ok = ok && x + y == y + x;
        }
        if (ok) {
          out.insert(x);
        }
      }
      return out;
    }

    oracle::WordSet normalizer_oracle(oracle::WordSet const&          s,
                                      std::vector<std::string> const& u) {
      oracle::WordSet out;
      for (auto const& x : u) {
        oracle::WordSet left, right;
        for (auto const& y : s) {
          left.insert(x + y);
          right.insert(y + x);
        }
        if (left == right) {
          out.insert(x);
        }
      }
      return out;
    }
  }  // namespace

  TEST_CASE("commutes: examples", "[commute]") {
    REQUIRE(commutes(fm, fm.parse("a"), fm.parse("aa")));
    REQUIRE_FALSE(commutes(fm, fm.parse("a"), fm.parse("b")));
    REQUIRE(commutes(fm, fm.identity(), fm.parse("abba")));
  }

  TEST_CASE("centralizer and normalizer: examples", "[commute]") {
    auto u2 = words_universe(fm, 2);
    REQUIRE(u2.size() == 7);
    REQUIRE(centralizer(fm, words({"ab"}), u2) == words({"", "ab"}));
    REQUIRE(normalizer(fm, words({"ab"}), u2) == words({"", "ab"}));
    REQUIRE(normalizer(fm, words({"a", "b"}), u2) == words({""}));
    REQUIRE(centralizer(fm, u2.elements, u2) == words({""}));
    auto single = make_universe(fm, {fm.parse("ab")}, "one word");
    REQUIRE(centralizer(fm, words({"ab"}), single) == words({"ab"}));
    REQUIRE_THROWS_AS(centralizer(fm, words({}), u2), InvalidArgument);
    REQUIRE_THROWS_AS(normalizer(fm, words({}), u2), InvalidArgument);
  }

  TEST_CASE("centralizer and normalizer match brute force",
            "[commute][property]") {
    auto const u    = words_universe(fm, 3);
    auto const ustr = oracle::all_words(3, "ab");
    Rng        rng(4);
    for (int t = 0; t < 150; ++t) {
      auto s  = make_subset(fm, random_elements(fm, rng, 1 + rng.below(4)));
      auto ss = support::strs(s);
      REQUIRE(support::strs(centralizer(fm, s, u)) == centralizer_oracle(ss, ustr));
      REQUIRE(support::strs(normalizer(fm, s, u)) == normalizer_oracle(ss, ustr));
      REQUIRE(check_normalizer_equals_centralizer(fm, s, u).ok());
    }
  }

  TEST_CASE("normalizer = centralizer on all small subsets", "[commute]") {
    auto const  u  = words_universe(fm, 3);
    auto const& xs = u.elements.elements();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i; j < xs.size(); ++j) {
        auto s = make_subset(fm, {xs[i], xs[j]});
        auto r = check_normalizer_equals_centralizer(fm, s, u);
        REQUIRE(r.ok());
        REQUIRE(r.trials == 15);
      }
    }
  }

  TEST_CASE("normalizer vs centralizer on left_zero is not applicable",
            "[commute]") {
    LeftZero lz({"p", "q"});
    auto     u = make_universe(lz, lz.elements(), "carrier");
    auto     s = make_subset(lz, lz.elements());
    auto     r = check_normalizer_equals_centralizer(lz, s, u);
    REQUIRE_FALSE(r.applicable);
    // pq = p and qp = q
    REQUIRE(centralizer(lz, s, u).empty());
  }

  TEST_CASE("ys_sy_bound: examples", "[commute]") {
    auto b = ys_sy_bound(fm, words({"a", "aa"}), fm.parse("b"));
    REQUIRE(b.bound == 3);
    REQUIRE(b.actual == 4);
    REQUIRE(b.holds);
    auto e = ys_sy_bound(fm, words({"a"}), fm.parse("b"));
    REQUIRE(e.bound == 2);
    REQUIRE(e.actual == 2);
    REQUIRE_THROWS_AS(ys_sy_bound(fm, words({"a"}), fm.parse("aa")),
                      PreconditionError);
  }

  TEST_CASE("ys_sy_bound holds for arbitrary S", "[commute][property]") {
    auto u = upper_triangular(2);
    Rng  rng(17);
    for (int t = 0; t < 300; ++t) {
      auto s = make_subset(fm, random_elements(fm, rng, 1 + rng.below(4)));
      auto y = random_element(fm, rng);
      if (!centralizes(fm, y, s)) {
        REQUIRE(ys_sy_bound(fm, s, y).holds);
      }
      auto m  = make_subset(u, random_elements(u, rng, 1 + rng.below(3)));
      auto my = random_element(u, rng);
      if (!centralizes(u, my, m)) {
        REQUIRE(ys_sy_bound(u, m, my).holds);
      }
    }
  }

  TEST_CASE("neumann_chain: examples", "[commute]") {
    auto ch = neumann_chain(fm, fm.parse("a"), fm.parse("b"), 2);
    REQUIRE(ch.chain
            == std::vector<Word>{fm.parse("aab"), fm.parse("aba"), fm.parse("baa")});
    REQUIRE(ch.strictly_increasing);
    auto one = neumann_chain(fm, fm.parse("a"), fm.parse("b"), 1);
    REQUIRE(one.chain == std::vector<Word>{fm.parse("ab"), fm.parse("ba")});

    auto u = upper_triangular(2);
    auto a = u.make(Matrix({{Rational(1), Rational(1)}, {Rational(0), Rational(2)}}));
    auto b = u.make(Matrix({{Rational(2), Rational(1)}, {Rational(0), Rational(1)}}));
    REQUIRE(less(u, u.op(a, b), u.op(b, a)));
    auto mc = neumann_chain(u, a, b, 3);
    REQUIRE(mc.chain.size() == 4);
    REQUIRE(mc.strictly_increasing);
    // first link is a^3 b
    REQUIRE(mc.chain[0] == u.op(power(u, a, 3), b));

    REQUIRE_THROWS_AS(neumann_chain(fm, fm.parse("b"), fm.parse("a"), 2),
                      PreconditionError);
    REQUIRE_THROWS_AS(neumann_chain(fm, fm.parse("a"), fm.parse("b"), 0),
                      InvalidArgument);
  }

  TEST_CASE("neumann chains against string concatenation",
            "[commute][property]") {
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
      auto a = random_element(fm, rng), b = random_element(fm, rng);
      auto sa = support::str(a), sb = support::str(b);
      if (sa + sb == sb + sa) {
        continue;
      }
      if (!oracle::Shortlex{}(sa + sb, sb + sa)) {
        std::swap(a, b);
        std::swap(sa, sb);
      }
      auto ch = neumann_chain(fm, a, b, 5);
      for (std::size_t k = 0; k <= 5; ++k) {
        std::string expect;
        for (std::size_t i = 0; i < 5 - k; ++i) {
          expect += sa;
        }
        expect += sb;
        for (std::size_t i = 0; i < k; ++i) {
          expect += sa;
        }
        REQUIRE(support::str(ch.chain[k]) == expect);
      }
      REQUIRE(ch.strictly_increasing);
    }
  }

  TEST_CASE("power_commutation_scan", "[commute]") {
    auto r = power_commutation_scan(fm, fm.parse("a"), fm.parse("b"), 8);
    REQUIRE(r.ok());
    REQUIRE(r.trials == 8);
    REQUIRE(r.note == "ab != ba");
    auto same = power_commutation_scan(fm, fm.parse("ab"), fm.parse("ab"), 8);
    REQUIRE(same.ok());
    REQUIRE(same.note == "ab = ba");

    auto u = upper_triangular(2);
    auto a = u.make(Matrix({{Rational(1), Rational(1)}, {Rational(0), Rational(2)}}));
    auto b = u.make(Matrix({{Rational(2), Rational(1)}, {Rational(0), Rational(1)}}));
    REQUIRE(power_commutation_scan(u, a, b, 6).ok());

    // in left_zero p^n q = p but q p^n = q, so the scan passes vacuously;
    // it is still flagged as not applicable
    LeftZero lz({"p", "q"});
    auto     lr = power_commutation_scan(lz, lz.parse("p"), lz.parse("q"), 4);
    REQUIRE_FALSE(lr.applicable);
    REQUIRE_THROWS_AS(power_commutation_scan(fm, fm.parse("a"), fm.parse("b"), 0),
                      InvalidArgument);
  }

  TEST_CASE("periodicity", "[commute]") {
    auto r = periodicity(fm, fm.parse("ab"), 10);
    REQUIRE_FALSE(r.periodic());
    REQUIRE(std::get<AperiodicUpTo>(r.status).bound == 10);
    auto e = periodicity(fm, fm.identity(), 10);
    REQUIRE(std::get<Periodic>(e.status) == Periodic{1, 1});
    LeftZero lz({"p", "q"});
    auto     p = periodicity(lz, lz.parse("p"), 10);
    REQUIRE(std::get<Periodic>(p.status) == Periodic{1, 1});
    REQUIRE_THROWS_AS(periodicity(fm, fm.parse("a"), 1), InvalidArgument);
  }

  TEST_CASE("periodicity in a finite cyclic semigroup", "[commute]") {
    // a broken instance: x -> x + 1 on {1..7} wrapping to 3, i.e. index 3
    // and period 5 for the generator 1
    struct Cyclic {
      using element_type = int;
      std::string name() const {
        return "cyclic(3,5)";
      }
      int op(int x, int y) const {
        int s = x + y;
        while (s > 7) {
          s -= 5;
        }
        return s;
      }
      Ordering cmp(int x, int y) const {
        return three_way(x, y);
      }
      void validate(int) const {}
      bool linearly_ordered() const {
        return false;
      }
      bool operator==(Cyclic const&) const = default;
    };
    Cyclic c;
    auto   r = periodicity(c, 1, 20);
    REQUIRE(std::get<Periodic>(r.status) == Periodic{3, 5});
  }

  TEST_CASE("idempotent_identity_check", "[commute]") {
    auto ws = fm.words_up_to(2);
    auto r  = idempotent_identity_check(fm, fm.identity(), std::span<Word const>(ws));
    REQUIRE(r.ok());
    REQUIRE_THROWS_AS(
        idempotent_identity_check(fm, fm.parse("a"), std::span<Word const>(ws)),
        PreconditionError);
    LeftZero lz({"p", "q"});
    auto     xs = lz.elements();
    auto     l  = idempotent_identity_check(lz, lz.parse("p"),
                                       std::span<LeftZeroElement const>(xs));
    REQUIRE_FALSE(l.ok());
    REQUIRE_FALSE(l.applicable);
    REQUIRE((*l.witness)[1] == lz.parse("q"));
  }

  TEST_CASE("contracting elements", "[commute]") {
    auto ws = fm.words_up_to(2);
    auto r  = check_contracting_elements(fm, std::span<Word const>(ws));
    REQUIRE(r.trials == 0);
    REQUIRE(r.note.find("vacuous") != std::string::npos);

    // in U_1 = (Q+, *) the element 1/2 contracts
    auto                   u = upper_triangular(1);
    std::vector<TriMatrix> xs;
    for (auto q : {Rational(1, 2), Rational(1), Rational(3), Rational(2, 7)}) {
      xs.push_back(u.make(Matrix({{q}})));
    }
    auto c = check_contracting_elements(u, std::span<TriMatrix const>(xs));
    REQUIRE(c.trials == 2 * 4);
    REQUIRE(c.ok());
  }

}  // namespace ordsg
