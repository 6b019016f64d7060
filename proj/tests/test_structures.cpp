#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permgrid/containment.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/error.hpp"
#include "permgrid/geometry.hpp"
#include "permgrid/structures.hpp"

using namespace permgrid;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("monotone sums") {
  CHECK(sum_of_21(2) == P("2143"));
  CHECK(skew_of_12(2) == P("3412"));
  CHECK(sum_of_21(1) == P("21"));
  CHECK_THROWS_AS(sum_of_21(0), Error);
  for (int k = 1; k <= 6; ++k) {
    CHECK(sum_of_21(k) == oracle::sum21(k));
    CHECK(skew_of_12(k) == oracle::skew12(k));
  }
}

TEST_CASE("golden instances") {
  CHECK(gen_parallel_sawtooth(4) == P("6 1 5 8 2 7 10 3 9 12 4 11"));
  CHECK(gen_wedge_sawtooth(4) == P("6 4 5 8 3 7 10 2 9 12 1 11"));
  CHECK(gen_sliced_wedge(4, 1) == P("6 1 5 8 4 7 10 3 9 12 2 11"));
  CHECK(gen_sliced_wedge(4, 2) == P("6 4 8 3 7 10 2 9 12 1 11 5"));
  CHECK(gen_sliced_wedge(4, 3) == P("5 12 4 7 3 6 9 2 8 11 1 10"));
  CHECK(gen_increasing_oscillation(12, 1) == P("2 4 1 6 3 8 5 10 7 12 9 11"));
  CHECK(gen_increasing_oscillation(4, 1) == P("2413"));
  CHECK(gen_parallel_sawtooth(1) == P("312"));
}

TEST_CASE("oscillation variants are related by a symmetry") {
  for (int n = 3; n <= 14; ++n) {
    const Permutation a = gen_increasing_oscillation(n, 1);
    const Permutation b = gen_increasing_oscillation(n, 2);
    bool related = false;
    for (const auto& g : Symmetry::all()) related = related || g.apply(a) == b;
    CHECK(related);
  }
  CHECK_THROWS_AS(gen_increasing_oscillation(2, 1), Error);
  CHECK_THROWS_AS(gen_increasing_oscillation(5, 3), Error);
}

TEST_CASE("wedge sawtooth starts with a 312 interval") {
  for (int m = 1; m <= 8; ++m) {
    const Permutation w = gen_wedge_sawtooth(m);
    const std::array<int, 3> lead{1, 2, 3};
    CHECK(restrict(w, rect_hull(w, lead)) == P("312"));
  }
}

TEST_CASE("simplicity of the sawtooth families for m in 2..40") {
  for (int m = 2; m <= 40; ++m) {
    CHECK(is_simple(gen_parallel_sawtooth(m)));
    CHECK_FALSE(is_simple(gen_wedge_sawtooth(m)));
    for (int t = 1; t <= 3; ++t) CHECK(is_simple(gen_sliced_wedge(m, t)));
  }
  CHECK_FALSE(is_simple(gen_wedge_sawtooth(1)));
}

TEST_CASE("generator families nest") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(contains(sum_of_21(m + 1), sum_of_21(m)));
    CHECK(contains(skew_of_12(m + 1), skew_of_12(m)));
    CHECK(contains(gen_parallel_sawtooth(m + 1), gen_parallel_sawtooth(m)));
    CHECK(contains(gen_wedge_sawtooth(m + 1), gen_wedge_sawtooth(m)));
    if (m >= 2) {
      for (int t = 1; t <= 3; ++t) CHECK(contains(gen_sliced_wedge(m + 1, t), gen_sliced_wedge(m, t)));
    }
  }
  for (int n = 3; n <= 12; ++n) {
    CHECK(contains(gen_increasing_oscillation(n + 1, 1), gen_increasing_oscillation(n, 1)));
  }
}

TEST_CASE("oriented generators are symmetry images") {
  for (const auto& g : Symmetry::all()) {
    CHECK(gen_parallel_sawtooth(3, g) == g.apply(gen_parallel_sawtooth(3)));
    CHECK(gen_wedge_sawtooth(3, g) == g.apply(gen_wedge_sawtooth(3)));
    CHECK(gen_sliced_wedge(3, 2, g) == g.apply(gen_sliced_wedge(3, 2)));
  }
}

TEST_CASE("longest sum of 21s examples") {
  for (int k = 1; k <= 6; ++k) CHECK(longest_sum21(sum_of_21(k)).max == k);
  CHECK(longest_sum21(Permutation::decreasing(5)).max == 1);
  CHECK(longest_sum21(gen_parallel_sawtooth(4)).max == 4);
  CHECK(longest_sum21(P("12")).max == 0);
  const auto d = longest_sum21(P("2 1 4 3 6 5"));
  CHECK(P("2 1 4 3 6 5").pattern_at(d.witness) == sum_of_21(3));
}

TEST_CASE("longest sum of 21s matches the containment oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto d = longest_sum21(p);
      REQUIRE(d.max == oracle::longest_sum21(p));
      if (d.max > 0) REQUIRE(p.pattern_at(d.witness) == sum_of_21(d.max));
      REQUIRE(longest_skew12(p).max == longest_sum21(reverse(p)).max);
    }
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Permutation p = oracle::random_permutation(1 + i % 12, rng);
    REQUIRE(longest_sum21(p).max == oracle::longest_sum21(p));
    REQUIRE(longest_skew12(p).max == longest_sum21(reverse(p)).max);
  }
}

TEST_CASE("sawtooth detection") {
  const Permutation par = gen_parallel_sawtooth(4);
  CHECK(max_sawtooth(par, StructureKind::ParallelSawtooth).max == 4);
  int wedge = 0;
  while (oracle::contains(par, gen_wedge_sawtooth(wedge + 1))) ++wedge;
  CHECK(max_sawtooth(par, StructureKind::WedgeSawtooth).max == wedge);
  CHECK(max_sawtooth(P("12"), StructureKind::ParallelSawtooth).max == 0);
  CHECK(max_sawtooth(P("12"), StructureKind::WedgeSawtooth).max == 0);
  for (int t = 1; t <= 3; ++t) CHECK(max_sliced_wedge(gen_sliced_wedge(4, t), t).max == 4);
}

TEST_CASE("oscillation detection") {
  CHECK(max_increasing_oscillation(gen_increasing_oscillation(12)).max == 12);
  CHECK(max_increasing_oscillation(P("2413")).max == 4);
  CHECK(max_increasing_oscillation(P("321")).max == 0);
}

TEST_CASE("rho") {
  CHECK(rho(P("12")) == 0);
  const Permutation par = gen_parallel_sawtooth(4);
  int want = 0;
  for (const auto& g : sum_preserving_symmetries()) {
    for (auto kind : {StructureKind::ParallelSawtooth, StructureKind::WedgeSawtooth}) {
      int m = 0;
      while (oracle::contains(par, kind == StructureKind::ParallelSawtooth
                                       ? gen_parallel_sawtooth(m + 1, g)
                                       : gen_wedge_sawtooth(m + 1, g))) {
        ++m;
      }
      want += 3 * m;
    }
  }
  CHECK(rho(par) == want);
  CHECK(rho(par) >= 12);
  // the eight types are closed under the symmetries that keep sums of 21s
  for (const auto& g : sum_preserving_symmetries()) CHECK(rho(g.apply(par)) == rho(par));
  CHECK(sum_preserving_symmetries().size() == 4);
}

TEST_CASE("Erdos-Szekeres holds for m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    const int n = (m - 1) * (m - 1) + 1;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    long short_sequences = 0;
    do {
      std::vector<int> inc(n, 1), dec(n, 1);
      int best = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
          if (v[j] < v[i]) inc[i] = std::max(inc[i], inc[j] + 1);
          if (v[j] > v[i]) dec[i] = std::max(dec[i], dec[j] + 1);
        }
        best = std::max({best, inc[i], dec[i]});
      }
      short_sequences += best < m;
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(short_sequences == 0);
  }
}
