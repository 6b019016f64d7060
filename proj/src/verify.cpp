#include "permgrid/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "permgrid/containment.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/error.hpp"
#include "permgrid/extensions.hpp"
#include "permgrid/pins.hpp"
#include "permgrid/structures.hpp"

namespace permgrid {

namespace {

// Thread-safe tally that keeps the failure with the smallest item index.
class Tally {
 public:
  Tally(std::string name, std::string claim) {
    result_.name = std::move(name);
    result_.claim = std::move(claim);
  }

  void pass(long count = 1) {
    std::lock_guard lock(m_);
    result_.checked += count;
  }

  void fail(std::size_t item, const std::string& what) {
    std::lock_guard lock(m_);
    ++result_.checked;
    ++result_.failures;
    if (item < first_) {
      first_ = item;
      result_.counterexample = what;
    }
  }

  void note(std::string text) { result_.note = std::move(text); }

  CheckResult finish(std::chrono::steady_clock::time_point start) {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result_;
  }

 private:
  std::mutex m_;
  CheckResult result_;
  std::size_t first_ = static_cast<std::size_t>(-1);
};

using Clock = std::chrono::steady_clock;

std::vector<Permutation> perms_up_to(int lo, int hi) {
  std::vector<Permutation> out;
  for (int n = lo; n <= hi; ++n) {
    auto level = all_permutations(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Permutation> simples_up_to(int lo, int hi) {
  std::vector<Permutation> out;
  for (auto& p : perms_up_to(lo, hi)) {
    if (is_simple(p)) out.push_back(std::move(p));
  }
  return out;
}

std::string show(const Permutation& p) { return p.to_string(); }

std::string show(const std::vector<int>& v) {
  std::ostringstream o;
  o << '(';
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << ')';
  return o.str();
}

int default_or(int max_len, int fallback) { return max_len > 0 ? max_len : fallback; }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_decomposition(int max_len, int jobs) {
  const auto start = Clock::now();
  Tally round("decomposition-round-trip",
              "inflating the computed decomposition gives back the permutation, monotone "
              "skeletons use indecomposable parts, simple skeletons use maximal intervals");
  Tally unique("decomposition-uniqueness",
               "exactly one simple skeleton over all partitions into intervals, and a unique "
               "partition when the skeleton has length at least 4");
  const auto perms = perms_up_to(2, max_len);

  detail::parallel_for(perms.size(), jobs, [&](std::size_t item) {
    const Permutation& pi = perms[item];
    const int n = pi.size();

    const Decomposition d = substitution_decompose(pi);
    bool ok = inflate(d.skeleton, d.parts) == pi;
    if (ok && d.kind == SkeletonKind::Increasing) {
      ok = std::none_of(d.parts.begin(), d.parts.end(), is_sum_decomposable);
    } else if (ok && d.kind == SkeletonKind::Decreasing) {
      ok = std::none_of(d.parts.begin(), d.parts.end(), is_skew_decomposable);
    } else if (ok) {
      ok = is_simple(d.skeleton) && d.skeleton.size() >= 4;
    }
    if (ok) round.pass(); else round.fail(item, show(pi));

    // All ways to cut positions 1..n into consecutive blocks that are intervals.
    std::vector<std::vector<char>> is_interval(n + 2, std::vector<char>(n + 2, 0));
    for (const Interval& iv : intervals(pi)) is_interval[iv.first][iv.last] = 1;
    std::set<Permutation> skeletons;
    long simple_partitions = 0;
    std::vector<int> cuts;  // block starts
    const auto recurse = [&](auto&& self, int from) -> void {
      if (from > n) {
        if (cuts.size() < 2) return;
        std::vector<int> reps(cuts.begin(), cuts.end());
        const Permutation skeleton = pi.pattern_at(reps);
        if (is_simple(skeleton)) {
          skeletons.insert(skeleton);
          ++simple_partitions;
        }
        return;
      }
      for (int to = from; to <= n; ++to) {
        if (!is_interval[from][to]) continue;
        cuts.push_back(from);
        self(self, to + 1);
        cuts.pop_back();
      }
    };
    recurse(recurse, 1);
    // Monotone layerings correspond to the simple skeleton 12 or 21.
    const Permutation expected = d.kind == SkeletonKind::Increasing   ? Permutation::identity(2)
                                 : d.kind == SkeletonKind::Decreasing ? Permutation::decreasing(2)
                                                                      : d.skeleton;
    bool u = skeletons.size() == 1 && *skeletons.begin() == expected;
    if (u && d.kind == SkeletonKind::Simple) u = simple_partitions == 1;
    if (u) unique.pass(); else unique.fail(item, show(pi));
  });
  return {round.finish(start), unique.finish(start)};
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_pins(int max_len, int jobs) {
  const auto start = Clock::now();
  Tally props("pin-properties",
              "every proper pin sequence in a simple host satisfies the four structural "
              "properties (no parallel successor, successor avoids the older hull, consecutive "
              "pins separated, simple core)");
  Tally reach("right-reaching",
              "every simple host and start pair (first point not rightmost) has a proper "
              "right-reaching pin sequence");

  std::vector<Permutation> hosts = simples_up_to(2, max_len);
  std::mt19937 rng(20240607);
  std::vector<int> v(max_len + 1);
  for (int count = 0; count < 200;) {
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p(v);
    if (is_simple(p)) {
      hosts.push_back(std::move(p));
      ++count;
    }
  }
  detail::parallel_for(hosts.size(), jobs, [&](std::size_t item) {
    const Permutation& host = hosts[item];
    for (int a = 1; a <= host.size(); ++a) {
      for (int b = 1; b <= host.size(); ++b) {
        if (a == b) continue;
        long good = 0;
        for (const auto& seq : enumerate_pin_sequences(host, a, b, host.size())) {
          if (check_pinseq_properties(host, seq).all()) {
            ++good;
          } else {
            props.fail(item, show(host) + " pins " + show(seq.positions));
          }
        }
        props.pass(good);
      }
    }
  });

  const auto reach_hosts = simples_up_to(2, max_len + 1);
  detail::parallel_for(reach_hosts.size(), jobs, [&](std::size_t item) {
    const Permutation& host = reach_hosts[item];
    const int n = host.size();
    const int rightmost = n;
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b <= n; ++b) {
        if (a == b) continue;
        try {
          const PinSequence seq = right_reaching(host, a, b);
          const auto checked = validate_pin_sequence(host, seq.positions);
          if (std::holds_alternative<PinSequence>(checked) && seq.positions.back() == rightmost &&
              seq.positions[0] == a && seq.positions[1] == b) {
            reach.pass();
          } else {
            reach.fail(item, show(host) + " start " + show(std::vector<int>{a, b}) +
                                 ": invalid result");
          }
        } catch (const Error& e) {
          reach.fail(item, show(host) + " start " + show(std::vector<int>{a, b}) + ": " +
                               e.what());
        }
      }
    }
  });
  return {props.finish(start), reach.finish(start)};
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_turns(int max_len, int jobs) {
  const auto start = Clock::now();
  Tally realized("pin-word-realization",
                 "every realized pin word is a proper pin sequence of its permutation");
  Tally turns("turns-give-sums",
              "a pin sequence with 3(p+q) turns contains a sum of p 21s or a skew sum of q 12s");

  std::vector<PinWord> words;
  for (bool inc : {true, false}) {
    words.push_back({inc, {}});
    std::vector<PinWord> frontier{{inc, {}}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<PinWord> next;
      for (const auto& w : frontier) {
        for (Direction d : {Direction::Left, Direction::Right, Direction::Up, Direction::Down}) {
          if (!w.directions.empty() &&
              is_horizontal(w.directions.back()) == is_horizontal(d)) {
            continue;
          }
          PinWord x = w;
          x.directions.push_back(d);
          next.push_back(std::move(x));
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }

  detail::parallel_for(words.size(), jobs, [&](std::size_t item) {
    const RealizedPins r = realize_pin_word(words[item]);
    const auto checked = validate_pin_sequence(r.perm, r.sequence.positions);
    const bool proper = std::holds_alternative<PinSequence>(checked) &&
                        std::get<PinSequence>(checked) == r.sequence;
    if (proper) realized.pass(); else realized.fail(item, to_string(words[item]));

    const int t = count_turns(r.sequence);
    const int sums = longest_sum21(r.perm).max;
    const int skews = longest_skew12(r.perm).max;
    for (int p = 0; 3 * p <= t; ++p) {
      for (int q = 0; 3 * (p + q) <= t; ++q) {
        if (p > sums && q > skews) {
          std::ostringstream o;
          o << to_string(words[item]) << " (" << t << " turns, p=" << p << ", q=" << q << ")";
          turns.fail(item, o.str());
          return;
        }
      }
    }
    turns.pass();
  });
  return {realized.finish(start), turns.finish(start)};
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_intervals(int max_len, int /*jobs*/) {
  const auto start = Clock::now();
  Tally t("sum21-intervals",
          "the intervals of a sum of L 21s are exactly the 2L singletons and the L(L+1)/2 "
          "windows covering whole 21s");
  for (int L = 1; L <= max_len; ++L) {
    std::set<std::pair<int, int>> got, want;
    for (const Interval& iv : intervals(sum_of_21(L))) got.insert({iv.first, iv.last});
    for (int p = 1; p <= 2 * L; ++p) want.insert({p, p});
    for (int k = 1; k <= L; ++k) {
      for (int l = k; l <= L; ++l) want.insert({2 * k - 1, 2 * l});
    }
    const bool sized = static_cast<long>(want.size()) == 2L * L + L * (L + 1L) / 2;
    if (got == want && sized) t.pass(); else t.fail(L, "L=" + std::to_string(L));
  }
  return {t.finish(start)};
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_slicing(int max_len, int jobs) {
  const auto start = Clock::now();
  Tally t("slicing-lines",
          "every line slicing a sum-indecomposable permutation of length > 1 separates the two "
          "points of some 21");
  std::vector<Permutation> perms;
  for (auto& p : perms_up_to(2, max_len)) {
    if (!is_sum_decomposable(p)) perms.push_back(std::move(p));
  }
  detail::parallel_for(perms.size(), jobs, [&](std::size_t item) {
    const Permutation& pi = perms[item];
    const int n = pi.size();
    long lines = 0;
    for (int vertical = 0; vertical < 2; ++vertical) {
      for (int g = 1; g < n; ++g) {
        // Line at g + 1/2; a 21 is (i, j) with i < j and pi(i) > pi(j).
        bool split = false;
        for (int i = 1; i <= n && !split; ++i) {
          for (int j = i + 1; j <= n && !split; ++j) {
            if (pi(i) < pi(j)) continue;
            split = vertical ? (i <= g && g < j) : (pi(j) <= g && g < pi(i));
          }
        }
        if (!split) {
          t.fail(item, show(pi) + (vertical ? " vertical line at " : " horizontal line at ") +
                           std::to_string(g) + ".5");
          return;
        }
        ++lines;
      }
    }
    t.pass(lines);
  });
  return {t.finish(start)};
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_corners(int max_len, int jobs) {
  const auto start = Clock::now();
  Tally t("corner-slices",
          "in a simple permutation, if the NE corner of a point holds a 21 then some NE 21 is "
          "sliced by a point in the NW or SE corner");
  const auto sigmas = simples_up_to(2, max_len);
  detail::parallel_for(sigmas.size(), jobs, [&](std::size_t item) {
    const Permutation& s = sigmas[item];
    const int n = s.size();
    long points = 0;
    for (int p = 1; p <= n; ++p) {
      const Point P = s.point(p);
      std::vector<Point> ne, side;
      for (int k = 1; k <= n; ++k) {
        const Point z = s.point(k);
        if (z.x > P.x && z.y > P.y) ne.push_back(z);
        if ((z.x < P.x && z.y > P.y) || (z.x > P.x && z.y < P.y)) side.push_back(z);
      }
      bool has21 = false, sliced = false;
      for (std::size_t a = 0; a < ne.size(); ++a) {
        for (std::size_t b = a + 1; b < ne.size(); ++b) {
          if (ne[a].y < ne[b].y) continue;
          has21 = true;
          const Rectangle r = rect_hull(ne[a]).extended(ne[b]);
          sliced = sliced || std::any_of(side.begin(), side.end(),
                                         [&](Point z) { return slices(z, r); });
        }
      }
      if (has21 && !sliced) {
        t.fail(item, show(s) + " point " + std::to_string(p));
        return;
      }
      ++points;
    }
    t.pass(points);
  });
  return {t.finish(start)};
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_extensions(int max_len, int jobs, int max_extensions) {
  const auto start = Clock::now();
  Tally lemma("extension-sums",
              "a spiral with 2k extensions (k <= 3) contains a sum of k 21s or a skew sum of k 12s");
  Tally simple("extended-spirals-simple",
               "every spiral with at most 3 extensions is simple");
  Tally skew("spirals-skew-merged", "every bare spiral avoids 3412 and 2143");

  const PatternMatcher m3412(parse_permutation("3412")), m2143(parse_permutation("2143"));
  std::vector<PatternMatcher> sums, skews;
  for (int k = 1; k <= 3; ++k) {
    sums.emplace_back(sum_of_21(k));
    skews.emplace_back(skew_of_12(k));
  }

  struct Job {
    Chirality chirality;
    int length;
    std::vector<int> pins;
  };
  std::vector<Job> work;
  for (Chirality c : {Chirality::Clockwise, Chirality::Counterclockwise}) {
    for (int length = 4; length <= max_len; ++length) {
      const int lo = 4, hi = length - 1, avail = std::max(0, hi - lo + 1);
      for (int e = 0; e <= std::min({6, max_extensions, avail}); ++e) {
        std::vector<int> s(e);
        std::iota(s.begin(), s.end(), lo);
        while (true) {
          work.push_back({c, length, s});
          int i = e - 1;
          while (i >= 0 && s[i] == hi - (e - 1 - i)) --i;
          if (i < 0) break;
          ++s[i];
          for (int j = i + 1; j < e; ++j) s[j] = s[j - 1] + 1;
        }
      }
    }
  }

  static constexpr std::pair<int, int> kChoices[] = {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}};
  std::atomic<long> rejected{0};
  detail::parallel_for(work.size(), jobs, [&](std::size_t item) {
    const Job& job = work[item];
    const int e = static_cast<int>(job.pins.size());
    std::vector<int> choice(e, 0);
    long ok_lemma = 0, ok_simple = 0;
    while (true) {
      std::vector<ExtensionSpec> specs;
      for (int k = 0; k < e; ++k) {
        specs.push_back({job.pins[k], kChoices[choice[k]].first, kChoices[choice[k]].second});
      }
      if (const auto generated =
              try_gen_spiral_with_extensions(job.chirality, job.length, specs)) {
        const ExtendedSpiral& x = *generated;
        const auto describe = [&] {
          std::ostringstream o;
          o << to_string(job.chirality) << " spiral of " << job.length << " pins, extensions";
          for (const auto& s : specs) {
            o << " (pin " << s.pin << ", type " << s.type << ", placement " << s.placement << ")";
          }
          o << " -> " << x.perm;
          return o.str();
        };
        if (e == 0) {
          if (m3412.occurs_in(x.perm) || m2143.occurs_in(x.perm)) {
            skew.fail(item, describe());
          } else {
            skew.pass();
          }
        }
        if (e <= 3) {
          if (is_simple(x.perm)) ++ok_simple; else simple.fail(item, describe());
        }
        if (e > 0 && e % 2 == 0) {
          const int k = e / 2;
          if (sums[k - 1].occurs_in(x.perm) || skews[k - 1].occurs_in(x.perm)) {
            ++ok_lemma;
          } else {
            lemma.fail(item, describe());
          }
        }
      } else {
        ++rejected;
      }
      int k = e - 1;
      while (k >= 0 && choice[k] == 4) choice[k--] = 0;
      if (k < 0) break;
      ++choice[k];
    }
    lemma.pass(ok_lemma);
    simple.pass(ok_simple);
  });
  const std::string note =
      std::to_string(rejected.load()) + " placement combinations rejected as illegal";
  lemma.note(note);
  simple.note(note);
  return {lemma.finish(start), simple.finish(start), skew.finish(start)};
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"decomposition", "pins",    "turns", "intervals",
                                              "slicing",       "corners", "extensions"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  const int jobs = std::max(1, options.jobs);
  const int m = options.max_len;
  if (suite == "decomposition") return verify_decomposition(default_or(m, 8), jobs);
  if (suite == "pins") return verify_pins(default_or(m, 6), jobs);
  if (suite == "turns") return verify_turns(default_or(m, 11), jobs);
  if (suite == "intervals") return verify_intervals(default_or(m, 6), jobs);
  if (suite == "slicing") return verify_slicing(default_or(m, 8), jobs);
  if (suite == "corners") return verify_corners(default_or(m, 8), jobs);
  if (suite == "extensions") return verify_extensions(default_or(m, 14), jobs);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw Error(ErrorCode::Param, "unknown suite: " + std::string(suite));
}

}  // namespace permgrid
