#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "permgrid/bounds.hpp"
#include "permgrid/classes.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/error.hpp"
#include "permgrid/gridding.hpp"
#include "permgrid/structures.hpp"

using namespace permgrid;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
bool grids(const Permutation& p, int h, int v) { return find_monotone_gridding(p, h, v).has_value(); }
}  // namespace

TEST_CASE("gridding examples") {
  const auto g = find_monotone_gridding(P("2143"), 0, 1);
  REQUIRE(g);
  CHECK(g->v_cuts == std::vector<int>{2});
  CHECK(g->h_cuts.empty());
  CHECK(g->cell(0, 0) == CellLabel::Decreasing);
  CHECK(g->cell(1, 0) == CellLabel::Decreasing);
  for (int k = 1; k <= 6; ++k) {
    const auto s = find_monotone_gridding(sum_of_21(k), 0, k - 1);
    REQUIRE(s);
    CHECK(verify_gridding(sum_of_21(k), *s));
  }
  CHECK_FALSE(find_monotone_gridding(sum_of_21(5), 0, 1));
  CHECK_THROWS_AS(find_monotone_gridding(P("21"), -1, 0), Error);
}

TEST_CASE("gridding soundness, monotonicity and transpose symmetry for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      const Permutation t = oracle::transposed(p);
      for (int h = 0; h <= 3; ++h) {
        for (int v = 0; h + v <= 3; ++v) {
          const auto g = find_monotone_gridding(p, h, v);
          if (g) {
            REQUIRE(verify_gridding(p, *g));
            REQUIRE(static_cast<int>(g->h_cuts.size()) <= h);
            REQUIRE(static_cast<int>(g->v_cuts.size()) <= v);
            if (h + v < 3) {
              REQUIRE(grids(p, h + 1, v));
              REQUIRE(grids(p, h, v + 1));
            }
          }
          REQUIRE(g.has_value() == grids(t, v, h));
        }
      }
    }
  }
}

TEST_CASE("long sums of 21s defeat small griddings for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      const int k = longest_sum21(p).max;
      for (int h = 0; 2 * h + 1 < k; ++h) {
        for (int v = 0; 2 * (h + v) + 1 < k; ++v) REQUIRE_FALSE(grids(p, h, v));
      }
    }
  }
}

TEST_CASE("bound values") {
  CHECK(bound_g(2, 7) == 2);
  CHECK(bound_g(3, 9) == 2);
  CHECK(bound_g(7, 1) == 2);
  mpz_class k;
  mpz_ui_pow_ui(k.get_mpz_t(), 32, 32);
  CHECK(bound_g(4, 2) == 7 * (k * 2) + 1);
  CHECK(bound_h(2, 2, 2) == 60);
  for (long m = 1; m <= 5; ++m) {
    for (long p = 1; p <= 2; ++p) CHECK(bound_h(m, p, m + p) == 3 * m * p * (2 * (m + p) + 1));
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), 8, 8);
  CHECK(bound_rect(1, 1) == e);
  for (long n = 1; n <= 6; ++n) CHECK(bound_f(n) == bound_g(n, 8 * n));
  CHECK(to_string(bound_h(2, 2, 2)) == "60");
  CHECK_THROWS_AS(bound_g(0, 1), Error);
  CHECK_THROWS_AS(bound_f(-1), Error);
  CHECK_THROWS_AS(bound_h(1, 0, 1), Error);
  CHECK_THROWS_AS(bound_rect(1, 0), Error);
}

TEST_CASE("class specs") {
  const ClassSpec a = ClassSpec::parse("2143;321");
  CHECK(a.key() == ClassSpec::parse("321; 2143").key());
  CHECK(a.avoids_all(P("12")));
  CHECK_FALSE(a.avoids_all(P("4321")));
  CHECK_THROWS_AS(ClassSpec::parse("12;x"), Error);
}

TEST_CASE("class enumeration") {
  const auto av21 = enumerate_class(ClassSpec::parse("21"), 4);
  REQUIRE(av21[4].size() == 1);
  CHECK(av21[4][0].perm == P("1234"));
  CHECK(enumerate_class(ClassSpec::parse("12;21"), 2)[2].empty());
  const ClassSpec av123 = ClassSpec::parse("123");
  const auto members = enumerate_class(av123, 7, {.recheck = true});
  for (int n = 1; n <= 7; ++n) {
    std::vector<Permutation> want;
    for (const auto& p : all_permutations(n)) {
      if (!oracle::contains(p, P("123"))) want.push_back(p);
    }
    std::vector<Permutation> got;
    for (const auto& m : members[n]) {
      got.push_back(m.perm);
      CHECK(m.simple == oracle::is_simple(m.perm));
    }
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
  CHECK(members[5].size() == 42);
  CHECK_THROWS_AS(enumerate_class(av123, kMaxClassLength + 1), Error);
}

TEST_CASE("enumeration cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "permgrid_cache_test";
  std::filesystem::remove_all(dir);
  const EnumerationCache cache(dir);
  const ClassSpec spec = ClassSpec::parse("231");
  const auto first = enumerate_class(spec, 6, {.cache = &cache});
  REQUIRE(cache.load(spec, 6));
  CHECK(cache.load(spec, 6)->size() == first[6].size());
  const auto second = enumerate_class(spec, 6, {.cache = &cache});
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(second[n].size() == first[n].size());
    for (std::size_t i = 0; i < first[n].size(); ++i) CHECK(second[n][i].perm == first[n][i].perm);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("criterion scan") {
  const auto a = criterion_scan(ClassSpec::parse("123"), 8);
  REQUIRE(a.size() == 8);
  for (const auto& r : a) {
    CHECK(r.skew12.max == r.n / 2);
    CHECK(r.sum21.max == std::min(2, r.n / 2));
    if (r.skew12.max > 0) {
      REQUIRE(r.skew12.perm);
      CHECK(r.skew12.perm->pattern_at(r.skew12.positions) == skew_of_12(r.skew12.max));
    }
  }
  CHECK(oracle::contains(sum_of_21(3), P("123")));
  for (const auto& r : criterion_scan(ClassSpec::parse("21"), 8)) {
    CHECK(r.sum21.max == 0);
    CHECK(r.skew12.max <= 1);
  }
}

TEST_CASE("obstruction scan") {
  const auto av21 = obstruction_scan(ClassSpec::parse("21"), 6);
  for (const auto& r : av21) {
    CHECK(r.parallel_sawtooth.max == 0);
    CHECK(r.turns.max == 0);
    CHECK(r.extensions.max == 0);
  }
  // parallel sawtooth of length 6 avoids 4321 and is simple
  REQUIRE(ClassSpec::parse("4321").avoids_all(gen_parallel_sawtooth(2)));
  const auto av4321 = obstruction_scan(ClassSpec::parse("4321"), 6, {.pin_budget = 6});
  CHECK(av4321.back().parallel_sawtooth.max >= 2);
}

TEST_CASE("obstruction scan of Av(123) equals a direct member sweep") {
  const ClassSpec spec = ClassSpec::parse("123");
  const auto rows = obstruction_scan(spec, 8, {.pin_budget = 8});
  int par = 0, sw[3] = {0, 0, 0};
  long simples = 0;
  for (int n = 1; n <= 8; ++n) {
    long members = 0, simples_n = 0;
    for (const auto& p : all_permutations(n)) {
      if (oracle::contains(p, P("123"))) continue;
      ++members;
      if (!oracle::is_simple(p)) continue;
      ++simples_n;
      for (const auto& g : Symmetry::all()) {
        par = std::max(par, max_sawtooth(p, StructureKind::ParallelSawtooth, g).max);
        for (int t = 0; t < 3; ++t) sw[t] = std::max(sw[t], max_sliced_wedge(p, t + 1, g).max);
      }
    }
    simples += simples_n;
    const auto& r = rows[n - 1];
    CHECK(r.members == members);
    CHECK(r.simples == simples_n);
    CHECK(r.parallel_sawtooth.max == par);
    for (int t = 0; t < 3; ++t) CHECK(r.sliced_wedge[t].max == sw[t]);
  }
  CHECK(simples > 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].sum21.max >= rows[i - 1].sum21.max);
    CHECK(rows[i].turns.max >= rows[i - 1].turns.max);
    CHECK(rows[i].extensions.max >= rows[i - 1].extensions.max);
    CHECK(rows[i].parallel_sawtooth.max >= rows[i - 1].parallel_sawtooth.max);
  }
}

TEST_CASE("scan report schema") {
  const ClassSpec spec = ClassSpec::parse("321");
  const auto rows = obstruction_scan(spec, 5, {.pin_budget = 5});
  const auto j = to_json(spec, rows, 5);
  CHECK(j["basis"] == nlohmann::json::array({"3 2 1"}));
  CHECK(j["pin_budget"] == 5);
  REQUIRE(j["lengths"].size() == 5);
  const auto& last = j["lengths"][4];
  for (const char* key : {"n", "members", "simples", "max_sum21", "max_skew12", "witnesses",
                          "obstructions"}) {
    CHECK(last.contains(key));
  }
  for (const char* key : {"parallel_sawtooth", "sliced_wedge_1", "sliced_wedge_2",
                          "sliced_wedge_3", "turns", "extensions"}) {
    CHECK(last["obstructions"].contains(key));
  }
  CHECK(last["obstructions"]["turns"]["lower_bound"] == true);
}
