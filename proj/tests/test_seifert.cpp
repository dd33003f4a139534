#include <doctest.h>

#include <algorithm>
#include <random>

#include "nmsflow/errors.hpp"
#include "nmsflow/homology.hpp"
#include "nmsflow/seifert.hpp"

using namespace nmsflow;

namespace {

SeifertData random_seifert(std::mt19937& rng, Int max_alpha, Int max_beta, int max_fibers) {
  std::uniform_int_distribution<int> count(0, max_fibers);
  std::uniform_int_distribution<Int> alpha(1, max_alpha);
  std::uniform_int_distribution<Int> beta(-max_beta, max_beta);
  SeifertData s;
  int n = count(rng);
  while (static_cast<int>(s.fibers.size()) < n) {
    Fiber f{alpha(rng), beta(rng)};
    if (f.alpha >= 2 && gcd(f.alpha, f.beta) != 1) continue;
    s.fibers.push_back(f);
  }
  return s;
}

}  // namespace

TEST_CASE("seifert_normalize examples") {
  CHECK(seifert_normalize({{{2, 3}}}) == SeifertData{{{1, 1}, {2, 1}}});
  CHECK(seifert_normalize({{{2, 1}, {3, 1}}}) == SeifertData{{{2, 1}, {3, 1}}});
  CHECK(seifert_normalize({{{5, -2}}}) == SeifertData{{{1, -1}, {5, 3}}});
  CHECK(seifert_normalize({{{3, 1}, {1, 0}, {2, 1}}}) == SeifertData{{{2, 1}, {3, 1}}});
}

TEST_CASE("seifert_normalize rejects invalid fibers") {
  CHECK_THROWS_AS(seifert_normalize({{{4, 2}}}), InvalidFiber);
  CHECK_THROWS_AS(seifert_normalize({{{0, 1}}}), InvalidFiber);
  CHECK_THROWS_AS(seifert_normalize({{{-3, 1}}}), InvalidFiber);
}

TEST_CASE("euler_number examples") {
  CHECK(euler_number({{{2, 1}, {3, 1}}}) == Rational(5, 6));
  CHECK(euler_number({{{1, 1}, {2, 1}}}) == Rational(3, 2));
  CHECK(euler_number({}) == 0);
}

TEST_CASE("normalization is idempotent, Euler-preserving and isomorphism-preserving") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    SeifertData s = random_seifert(rng, 12, 40, 5);
    SeifertData n = seifert_normalize(s);
    REQUIRE(seifert_normalize(n) == n);
    REQUIRE(euler_number(n) == euler_number(s));
    REQUIRE(seifert_isomorphic(s, n));
    REQUIRE(std::count_if(n.fibers.begin(), n.fibers.end(), [](const Fiber& f) { return f.alpha == 1; }) <= 1);
    for (const auto& f : n.fibers) {
      if (f.exceptional()) REQUIRE((f.beta > 0 && f.beta < f.alpha));
    }
  }
}

TEST_CASE("seifert_isomorphic examples") {
  SeifertData a{{{2, 1}, {3, 1}, {5, 1}}};
  SeifertData b{{{5, 1}, {2, 1}, {3, 1}}};
  SeifertData c{{{3, 1}, {5, 1}, {2, 1}}};
  CHECK(seifert_isomorphic(a, b));
  CHECK(seifert_isomorphic(a, c));
  CHECK_FALSE(seifert_isomorphic({{{2, 1}, {3, 1}}}, {{{2, 1}, {3, 2}}}));
  CHECK(seifert_isomorphic({{{2, 1}}}, {{{1, 1}, {2, -1}}}));
  CHECK_FALSE(seifert_isomorphic({{{2, 1}}}, {{{3, 1}}}));
}

TEST_CASE("seifert_isomorphic is an equivalence relation, invariant under permutation") {
  std::mt19937 rng(7);
  std::vector<SeifertData> pool;
  // Small pool so that isomorphic pairs actually occur.
  for (int i = 0; i < 150; ++i) pool.push_back(random_seifert(rng, 4, 4, 3));
  for (const auto& a : pool) {
    CHECK(seifert_isomorphic(a, a));
    SeifertData shuffled = a;
    std::shuffle(shuffled.fibers.begin(), shuffled.fibers.end(), rng);
    CHECK(seifert_isomorphic(a, shuffled));
  }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      bool ab = seifert_isomorphic(a, b);
      REQUIRE(ab == seifert_isomorphic(b, a));
      if (!ab) continue;
      for (const auto& c : pool)
        if (seifert_isomorphic(b, c)) REQUIRE(seifert_isomorphic(a, c));
    }
}

TEST_CASE("orbital invariants") {
  CHECK(orbital_invariants({5, 2}) == OrbitalInvariants{5, 3});
  CHECK(orbital_invariants({1, 7}) == OrbitalInvariants{1, 0});
  CHECK(orbital_invariants({3, -1}) == OrbitalInvariants{3, 2});
}

TEST_CASE("seifert_to_lens examples") {
  CHECK(seifert_to_lens({}) == Manifold(S2xS1{}));
  CHECK(seifert_to_lens({{{3, 2}}}) == Manifold(RP3{}));
  CHECK(seifert_to_lens({{{2, 1}, {3, 1}}}) == Manifold(Sphere{}));
  // (1,b) alone: M(S2, (1,b)) = L(b,1)
  CHECK(seifert_to_lens({{{1, 5}}}) == lens_canonical(5, 1));
  CHECK(seifert_to_lens({{{1, 1}}}) == Manifold(Sphere{}));
  // integer term folds into the first fiber: (2,1),(1,1) -> (2,3) -> L(3,2)
  CHECK(seifert_to_lens({{{2, 1}, {1, 1}}}) == lens_canonical(3, 2));
  CHECK_THROWS_AS(seifert_to_lens({{{2, 1}, {3, 1}, {5, 1}}}), NotALens);
}

TEST_CASE("two-fiber conversion always produces valid lens parameters") {
  for (Int a1 = 2; a1 <= 9; ++a1)
    for (Int b1 = -9; b1 <= 9; ++b1)
      for (Int a2 = 2; a2 <= 9; ++a2)
        for (Int b2 = -9; b2 <= 9; ++b2) {
          if (gcd(a1, b1) != 1 || gcd(a2, b2) != 1) continue;
          CHECK_NOTHROW(seifert_to_lens({{{a1, b1}, {a2, b2}}}));
        }
}

TEST_CASE("not_lens_obstruction examples") {
  CHECK(not_lens_obstruction({{{2, 1}, {3, 1}, {5, 2}}}));
  CHECK_FALSE(not_lens_obstruction({{{2, 1}, {3, 1}}}));
  CHECK(not_lens_obstruction({{{1, 3}, {2, 1}, {3, 1}, {7, 2}}}));
}

TEST_CASE("obstructed Seifert spaces are never homeomorphic to a lens space") {
  std::vector<Manifold> lenses{Sphere{}, S2xS1{}, RP3{}};
  for (Int p = 3; p <= 40; ++p)
    for (Int q = 1; q < p; ++q)
      if (gcd(p, q) == 1) lenses.push_back(lens_canonical(p, q));
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    SeifertData s = random_seifert(rng, 7, 10, 5);
    if (!not_lens_obstruction(seifert_normalize(s))) continue;
    Manifold m = seifert_space(s);
    for (const auto& l : lenses) REQUIRE_FALSE(homeomorphic(m, l));
  }
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(seifert_space({{{2, 1}, {3, 1}, {5, 2}}})));
  CHECK_FALSE(is_prime(sum_normalize({lens_canonical(5, 2), RP3{}})));
  CHECK(is_prime(RP3{}));
  CHECK(is_prime(Sphere{}));
  CHECK(is_prime(S2xS1{}));
}

TEST_CASE("prime exception tuples") {
  SeifertData literal{{{2, 1}, {2, 1}, {2, 1}, {2, 1}}};
  SeifertData euler_zero{{{2, 1}, {2, 1}, {2, -1}, {2, -1}}};
  CHECK(prime_exception(literal) == PrimeException::Literal);
  CHECK(prime_exception(euler_zero) == PrimeException::EulerZero);
  CHECK(prime_exception({{{2, 1}, {2, 1}, {2, 1}}}) == PrimeException::None);
  CHECK_FALSE(is_prime(seifert_space(literal)));
  CHECK_FALSE(is_prime(seifert_space(euler_zero)));
}

TEST_CASE("H1 order of two-fiber spaces is invariant under normalization") {
  for (Int a1 = 1; a1 <= 9; ++a1)
    for (Int b1 = -12; b1 <= 12; ++b1)
      for (Int a2 = 1; a2 <= 9; ++a2)
        for (Int b2 = -12; b2 <= 12; b2 += 5) {
          if (gcd(a1, b1) != 1 || gcd(a2, b2) != 1) continue;
          SeifertData s{{{a1, b1}, {a2, b2}}};
          REQUIRE(h1_seifert_presentation(s).order() ==
                  h1_seifert_presentation(seifert_normalize(s)).order());
        }
}
