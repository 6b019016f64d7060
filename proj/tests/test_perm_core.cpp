#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "permgrid/containment.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/error.hpp"
#include "permgrid/geometry.hpp"
#include "permgrid/symmetry.hpp"

using namespace permgrid;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("parsing and formatting") {
  CHECK(P("2 4 1 3") == P("2413"));
  CHECK(P("2,4,1,3").to_string() == "2 4 1 3");
  CHECK_THROWS_AS(P("2 2 1"), Error);
  CHECK_THROWS_AS(P("1 3"), Error);
  CHECK_THROWS_AS(P("a"), Error);
  try {
    P("1 x");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("rectangular hull") {
  const Rectangle a = rect_hull(Point{2, 1});
  CHECK(a.x_lo() == 1.5);
  CHECK(a.x_hi() == 2.5);
  CHECK(a.y_lo() == 0.5);
  CHECK(a.y_hi() == 1.5);
  const std::array<Point, 2> two{Point{1, 2}, Point{2, 1}};
  CHECK(rect_hull(two) == Rectangle{1, 2, 1, 2});
  const std::array<int, 2> pos{1, 3};
  CHECK(rect_hull(P("2413"), pos) == Rectangle{1, 3, 1, 2});
  CHECK_THROWS_AS(rect_hull(std::span<const Point>{}), Error);
}

TEST_CASE("region tags") {
  CHECK(region_of({3, 5}, Rectangle{1, 4, 1, 2}) == RegionTag::SliceV);
  CHECK(region_of({5, 5}, Rectangle{1, 2, 1, 2}) == RegionTag::NE);
  CHECK(region_of({1, 1}, Rectangle{1, 2, 1, 2}) == RegionTag::Inside);
  CHECK(region_of({5, 1}, Rectangle{1, 2, 1, 2}) == RegionTag::SliceH);
  CHECK(region_of({0, 0}, Rectangle{1, 2, 1, 2}) == RegionTag::SW);
}

TEST_CASE("restriction") {
  const std::array<int, 3> a{2, 3, 4};
  CHECK(restrict(P("2413"), rect_hull(P("2413"), a)) == P("312"));
  CHECK(restrict(P("21"), Rectangle{1, 2, 1, 2}) == P("21"));
  const std::array<int, 4> b{3, 4, 5, 6};
  CHECK(restrict(P("214365"), rect_hull(P("214365"), b)) == P("2143"));
}

TEST_CASE("intervals examples") {
  CHECK(intervals(P("2413")).size() == 5);
  CHECK(intervals(P("2143")).size() == 7);
  const auto one = intervals(P("1"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == 1);
  CHECK(one[0].last == 1);
}

TEST_CASE("intervals match the window-scan oracle for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto got = intervals(p);
      const auto want = oracle::intervals(p);
      REQUIRE(got.size() == want.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].first == want[k].first);
        CHECK(got[k].last == want[k].last);
      }
      CHECK(is_simple(p) == oracle::is_simple(p));
    }
  }
}

TEST_CASE("simple counts by length") {
  const std::array<int, 8> expected{0, 2, 0, 2, 6, 46, 338, 2926};
  for (int n = 1; n <= 8; ++n) {
    int count = 0;
    for (const auto& p : all_permutations(n)) count += is_simple(p);
    CHECK(count == expected[n - 1]);
  }
  CHECK(is_simple(P("2413")));
  CHECK(is_simple(P("3142")));
  CHECK_FALSE(is_simple(P("1")));
}

TEST_CASE("inflation examples") {
  const std::array<Permutation, 2> a{P("21"), P("21")};
  CHECK(inflate(P("12"), a) == P("2143"));
  const std::array<Permutation, 4> b{P("1"), P("21"), P("1"), P("12")};
  CHECK(inflate(P("2413"), b) == P("265134"));
  const std::array<Permutation, 4> ones{P("1"), P("1"), P("1"), P("1")};
  CHECK(inflate(P("3142"), ones) == P("3142"));
}

TEST_CASE("decomposition examples") {
  auto d = substitution_decompose(P("2143"));
  CHECK(d.kind == SkeletonKind::Increasing);
  CHECK(d.skeleton.size() == 2);
  CHECK(d.parts == std::vector<Permutation>{P("21"), P("21")});

  d = substitution_decompose(P("265134"));
  CHECK(d.kind == SkeletonKind::Simple);
  CHECK(d.skeleton == P("2413"));
  CHECK(d.parts == std::vector<Permutation>{P("1"), P("21"), P("1"), P("12")});

  d = substitution_decompose(P("3412"));
  CHECK(d.kind == SkeletonKind::Decreasing);
  CHECK(d.parts == std::vector<Permutation>{P("12"), P("12")});

  CHECK_THROWS_AS(substitution_decompose(P("1")), Error);
}

TEST_CASE("decomposition round trip for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto d = substitution_decompose(p);
      REQUIRE(inflate(d.skeleton, d.parts) == p);
      if (d.kind == SkeletonKind::Simple) {
        CHECK(oracle::is_simple(d.skeleton));
      } else {
        // finest layering: no part splits further in the same direction
        for (const auto& part : d.parts) {
          if (d.kind == SkeletonKind::Increasing) CHECK_FALSE(is_sum_decomposable(part));
          if (d.kind == SkeletonKind::Decreasing) CHECK_FALSE(is_skew_decomposable(part));
        }
      }
    }
  }
}

TEST_CASE("containment examples") {
  CHECK(contains(P("2143"), P("21")));
  const auto occ = find_occurrence(P("214365"), P("2143"));
  REQUIRE(occ);
  CHECK(P("214365").pattern_at(*occ) == P("2143"));
  CHECK_FALSE(contains(P("2143"), P("123")));
}

TEST_CASE("containment matches brute force for n <= 7, k <= 4") {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& t : all_permutations(k)) patterns.push_back(t);
  }
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      for (const auto& t : patterns) REQUIRE(contains(p, t) == oracle::contains(p, t));
    }
  }
}

TEST_CASE("symmetry examples") {
  CHECK(reverse(P("2413")) == P("3142"));
  CHECK(complement(P("21")) == P("12"));
  CHECK(inverse(P("2413")) == P("3142"));
  for (const auto& g : Symmetry::all()) {
    CHECK(Symmetry::from_name(g.name()) == g);
  }
}

TEST_CASE("containment is symmetry-invariant for |pi| <= 6, |tau| <= 4") {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& t : all_permutations(k)) patterns.push_back(t);
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      for (const auto& t : patterns) {
        const bool base = contains(p, t);
        for (const auto& g : Symmetry::all()) REQUIRE(contains(g.apply(p), g.apply(t)) == base);
      }
    }
  }
}

TEST_CASE("simplicity is symmetry-invariant for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      const bool base = is_simple(p);
      for (const auto& g : Symmetry::all()) REQUIRE(is_simple(g.apply(p)) == base);
    }
  }
}
