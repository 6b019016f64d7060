// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status is 0 when every failure is a documented known deviation.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "../tests/oracles.hpp"
#include "permgrid/bounds.hpp"
#include "permgrid/classes.hpp"
#include "permgrid/containment.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/extensions.hpp"
#include "permgrid/gridding.hpp"
#include "permgrid/pins.hpp"
#include "permgrid/structures.hpp"
#include "permgrid/verify.hpp"

using namespace permgrid;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0: no stated limit
  std::function<Outcome()> run;
};

// Failures reproduced by exhaustive search and explained in the README.
const std::set<int> kKnownDeviations{2, 5};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Permutation P(const char* s) { return parse_permutation(s); }

const CheckResult& pick(const std::vector<CheckResult>& results, const std::string& name) {
  for (const auto& r : results) {
    if (r.name == name) return r;
  }
  throw std::runtime_error("missing check " + name);
}

Outcome from_checks(std::initializer_list<const CheckResult*> checks) {
  Outcome o;
  for (const CheckResult* r : checks) {
    o.passed = o.passed && r->passed();
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r->name + " " + std::to_string(r->checked) + " checked, " +
                std::to_string(r->failures) + " failures";
    if (r->counterexample) o.detail += " (first: " + *r->counterexample + ")";
  }
  return o;
}

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.passed = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}


const std::vector<CheckResult>& pin_suite() {
  static const std::vector<CheckResult> results = verify_pins(6, jobs());
  return results;
}

Outcome golden() {
  Outcome o;
  expect(o, gen_parallel_sawtooth(4) == P("6 1 5 8 2 7 10 3 9 12 4 11"), "parallel sawtooth");
  expect(o, gen_wedge_sawtooth(4) == P("6 4 5 8 3 7 10 2 9 12 1 11"), "wedge sawtooth");
  expect(o, gen_sliced_wedge(4, 1) == P("6 1 5 8 4 7 10 3 9 12 2 11"), "sliced wedge 1");
  expect(o, gen_sliced_wedge(4, 2) == P("6 4 8 3 7 10 2 9 12 1 11 5"), "sliced wedge 2");
  expect(o, gen_sliced_wedge(4, 3) == P("5 12 4 7 3 6 9 2 8 11 1 10"), "sliced wedge 3");
  expect(o, gen_increasing_oscillation(12) == P("2 4 1 6 3 8 5 10 7 12 9 11"), "oscillation");
  expect(o,
         gen_spiral_with_extensions(Chirality::Clockwise, 10, {{4, 1, 2}, {8, 1, 0}}).perm ==
             P("2 4 12 5 8 6 9 3 7 11 1 10"),
         "type 1 spiral");
  expect(o,
         gen_spiral_with_extensions(Chirality::Clockwise, 9, {{8, 2, 0}}).perm ==
             P("4 12 5 8 6 3 7 10 2 9 1 11"),
         "type 2 spiral");
  if (o.passed) o.detail = "7 instances reproduced";
  return o;
}

Outcome simplicity() {
  Outcome o;
  int families = 0;
  for (int m = 2; m <= 40; ++m) {
    expect(o, is_simple(gen_parallel_sawtooth(m)), "parallel sawtooth m=" + std::to_string(m));
    expect(o, !is_simple(gen_wedge_sawtooth(m)), "wedge sawtooth m=" + std::to_string(m));
    for (int t = 1; t <= 3; ++t) {
      expect(o, is_simple(gen_sliced_wedge(m, t)),
             "sliced wedge " + std::to_string(t) + " m=" + std::to_string(m));
    }
    families += 5;
  }
  const auto results = verify_extensions(14, jobs(), 3);
  const Outcome sweep = from_checks({&pick(results, "extended-spirals-simple")});
  o.passed = o.passed && sweep.passed;
  o.detail = std::to_string(families) + " family members ok" + (o.detail.empty() ? "" : " except ") +
             o.detail + "; " + sweep.detail;
  return o;
}

Outcome lemma_turns() {
  const auto r = verify_turns(11, jobs());
  return from_checks({&pick(r, "pin-word-realization"), &pick(r, "turns-give-sums")});
}

Outcome lemma_reach() { return from_checks({&pick(pin_suite(), "right-reaching")}); }

Outcome pin_properties() { return from_checks({&pick(pin_suite(), "pin-properties")}); }

Outcome slicing_and_corners() {
  const auto s = verify_slicing(8, jobs());
  const auto c = verify_corners(8, jobs());
  return from_checks({&pick(s, "slicing-lines"), &pick(c, "corner-slices")});
}

Outcome sum_intervals() {
  Outcome o;
  for (int L = 1; L <= 6; ++L) {
    std::vector<Interval> want;
    const Permutation s = sum_of_21(L);
    for (int a = 0; a < L; ++a) {
      for (int b = a; b < L; ++b) want.push_back({2 * a + 1, 2 * b + 2, 2 * a + 1, 2 * b + 2});
    }
    for (int i = 1; i <= 2 * L; ++i) want.push_back({i, i, s(i), s(i)});
    std::sort(want.begin(), want.end(), [](const Interval& x, const Interval& y) {
      return std::pair(x.first, x.last) < std::pair(y.first, y.last);
    });
    const auto got = intervals(s);
    expect(o, got == want, "L=" + std::to_string(L));
    expect(o, static_cast<int>(got.size()) == 2 * L + L * (L + 1) / 2, "count L=" + std::to_string(L));
  }
  const Outcome suite = from_checks({&pick(verify_intervals(6, 1), "sum21-intervals")});
  o.passed = o.passed && suite.passed;
  o.detail = (o.detail.empty() ? "exact match for L=1..6; " : o.detail + "; ") + suite.detail;
  return o;
}

Outcome extension_lemma() {
  return from_checks({&pick(verify_extensions(14, jobs()), "extension-sums")});
}

Outcome bounds() {
  Outcome o;
  int checked = 0;
  const long spots[10][3] = {{1, 1, 1}, {2, 2, 2}, {3, 1, 4}, {5, 7, 2}, {10, 10, 10},
                             {1, 9, 3}, {4, 4, 1}, {7, 3, 8}, {12, 5, 6}, {100, 200, 300}};
  for (const auto& s : spots) {
    const mpz_class want = mpz_class(3) * s[0] * s[1] * (2 * s[2] + 1);
    expect(o, bound_h(s[0], s[1], s[2]) == want, "h spot");
    ++checked;
  }
  for (long m = 1; m <= 3; ++m) {
    for (long s = 1; s <= 10; ++s, ++checked) expect(o, bound_g(m, s) == 2, "g base m<=3");
  }
  for (long m = 4; m <= 12; ++m, ++checked) expect(o, bound_g(m, 1) == 2, "g base s=1");
  for (long n = 1; n <= 6; ++n, ++checked) expect(o, bound_f(n) == bound_g(n, 8 * n), "f=g(n,8n)");
  if (o.passed) o.detail = std::to_string(checked) + " exact values";
  return o;
}

Outcome gridding() {
  Outcome o;
  for (int k = 1; k <= 6; ++k) {
    expect(o, find_monotone_gridding(sum_of_21(k), 0, k - 1).has_value(),
           "sum of " + std::to_string(k) + " 21s");
  }
  expect(o, !find_monotone_gridding(sum_of_21(5), 0, 1), "sum of five 21s with one cut");
  long returned = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      for (int h = 0; h <= 3; ++h) {
        for (int v = 0; h + v <= 3; ++v) {
          if (const auto g = find_monotone_gridding(p, h, v)) {
            ++returned;
            if (!verify_gridding(p, *g)) expect(o, false, "unsound gridding for " + p.to_string());
          }
        }
      }
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(returned) + " griddings re-verified";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  long perms = 0, hosts = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      ++perms;
      int k = 0;
      while (2 * (k + 1) <= n && contains(p, sum_of_21(k + 1))) ++k;
      if (longest_sum21(p).max != k) expect(o, false, "sum21 mismatch at " + p.to_string());
    }
  }
  for (int n = 2; n <= 6; ++n) {
    for (const auto& host : all_permutations(n)) {
      if (!is_simple(host)) continue;
      ++hosts;
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          if (a == b) continue;
          std::vector<std::vector<int>> got;
          for (const auto& s : enumerate_pin_sequences(host, a, b, n)) got.push_back(s.positions);
          std::sort(got.begin(), got.end());
          if (got != oracle::pin_sequences(host, a, b, n)) {
            expect(o, false, "pin mismatch at " + host.to_string());
          }
        }
      }
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(perms) + " permutations, " +
              std::to_string(hosts) + " simple hosts";
  return o;
}

Outcome criterion_evidence() {
  Outcome o;
  for (const auto& r : criterion_scan(ClassSpec::parse("123"), 8)) {
    const std::string n = std::to_string(r.n);
    expect(o, r.skew12.max == r.n / 2, "Av(123) skew max at n=" + n);
    if (r.skew12.max > 0) {
      expect(o,
             r.skew12.perm && r.skew12.perm->pattern_at(r.skew12.positions) ==
                                  skew_of_12(r.skew12.max),
             "Av(123) witness at n=" + n);
    }
  }
  for (const auto& r : criterion_scan(ClassSpec::parse("21"), 8)) {
    expect(o, r.sum21.max <= 1 && r.skew12.max <= 1, "Av(21) maxima at n=" + std::to_string(r.n));
  }
  if (o.passed) o.detail = "Av(123) skew maxima floor(n/2) with witnesses; Av(21) maxima <= 1";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden instances", 1, golden},
      {2, "simplicity of generated families", 60, simplicity},
      {3, "turns give long sums", 600, lemma_turns},
      {4, "right-reaching sequences exist", 600, lemma_reach},
      {5, "structural pin properties", 0, pin_properties},
      {6, "slicing lines and corner slices", 900, slicing_and_corners},
      {7, "intervals of sums of 21s", 0, sum_intervals},
      {8, "extensions give long sums", 0, extension_lemma},
      {9, "bound formulas", 0, bounds},
      {10, "monotone gridding", 0, gridding},
      {11, "oracle equivalence", 0, oracle_equivalence},
      {12, "criterion evidence", 0, criterion_evidence},
  };
  int failed = 0, unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.passed = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    if (!o.passed) {
      ++failed;
      if (!kKnownDeviations.count(c.id)) ++unexpected;
    }
    std::printf("%s  %2d  %-34s %8.2f s  %s%s\n", o.passed ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, o.detail.c_str(),
                !o.passed && kKnownDeviations.count(c.id) ? "  [known deviation]" : "");
    std::fflush(stdout);
  }
  std::printf("\n%d of %zu criteria passed; %d failed", static_cast<int>(criteria.size()) - failed,
              criteria.size(), failed);
  if (failed > 0) std::printf(" (%d outside the known deviations 2 and 5)", unexpected);
  std::printf("\n");
  return unexpected == 0 ? 0 : 1;
}
