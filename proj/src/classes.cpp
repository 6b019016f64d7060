#include "permgrid/classes.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "permgrid/containment.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/error.hpp"
#include "permgrid/extensions.hpp"
#include "permgrid/pins.hpp"
#include "permgrid/structures.hpp"

namespace permgrid {

ClassSpec::ClassSpec(std::vector<Permutation> basis) {
  std::sort(basis.begin(), basis.end(), [](const Permutation& a, const Permutation& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  for (const auto& b : basis) {
    if (b.empty()) throw Error(ErrorCode::Param, "empty basis element");
    const bool redundant = std::any_of(basis_.begin(), basis_.end(),
                                       [&](const Permutation& kept) { return contains(b, kept); });
    if (!redundant) basis_.push_back(b);
  }
}

ClassSpec ClassSpec::parse(std::string_view text) {
  std::vector<Permutation> basis;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view part = text.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string_view::npos) {
      basis.push_back(parse_permutation(part));
    }
    start = end + 1;
  }
  return ClassSpec(std::move(basis));
}

bool ClassSpec::avoids_all(const Permutation& perm) const {
  return std::none_of(basis_.begin(), basis_.end(),
                      [&](const Permutation& b) { return contains(perm, b); });
}

std::string ClassSpec::key() const {
  std::string out;
  for (const auto& b : basis_) {
    if (!out.empty()) out += ';';
    // Compact digits when unambiguous, commas otherwise.
    const auto v = b.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (b.size() > 9 && i > 0) out += ',';
      out += std::to_string(v[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::filesystem::path EnumerationCache::file(const ClassSpec& spec, int n) const {
  std::string dir = spec.key();
  std::replace(dir.begin(), dir.end(), ';', '_');
  std::replace(dir.begin(), dir.end(), ',', '-');
  if (dir.empty()) dir = "all";
  return root_ / ("av_" + dir) / ("length_" + std::to_string(n) + ".txt");
}

std::optional<std::vector<Permutation>> EnumerationCache::load(const ClassSpec& spec,
                                                               int n) const {
  std::ifstream in(file(spec, n));
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  long expected = -1;
  if (std::sscanf(header.c_str(), "# length %*d count %ld", &expected) != 1) return std::nullopt;
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(parse_permutation(line));
    } catch (const Error&) {
      return std::nullopt;
    }
    if (out.back().size() != n) return std::nullopt;
  }
  if (static_cast<long>(out.size()) != expected) return std::nullopt;
  return out;
}

void EnumerationCache::store(const ClassSpec& spec, int n,
                             const std::vector<Permutation>& members) const {
  const auto path = file(spec, n);
  std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << "# length " << n << " count " << members.size() << '\n';
    for (const auto& m : members) out << m << '\n';
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Member>> enumerate_class(const ClassSpec& spec, int n_max,
                                                 const EnumerationOptions& options) {
  if (n_max < 1 || n_max > kMaxClassLength) {
    throw Error(ErrorCode::Param, "class length out of range");
  }
  std::vector<PatternMatcher> matchers;
  std::vector<int> max_index;  // pattern position of each basis element's maximum
  for (const auto& b : spec.basis()) {
    matchers.emplace_back(b);
    const auto v = b.values();
    max_index.push_back(static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin()) + 1);
  }

  std::vector<std::vector<Permutation>> level(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    if (options.cache) {
      if (auto cached = options.cache->load(spec, n)) {
        level[n] = std::move(*cached);
        continue;
      }
    }
    std::vector<Permutation> parents = n == 1 ? std::vector<Permutation>{Permutation{}} : level[n - 1];
    auto& out = level[n];
    for (const auto& parent : parents) {
      const auto pv = parent.values();
      for (int at = 0; at < n; ++at) {
        std::vector<int> v(pv.begin(), pv.end());
        v.insert(v.begin() + at, n);
        Permutation child(std::move(v));
        bool ok = true;
        for (std::size_t b = 0; b < matchers.size() && ok; ++b) {
          if (matchers[b].pattern().size() > n) continue;
          ok = !matchers[b].find_through(child, max_index[b], at + 1).has_value();
        }
        if (options.recheck && ok != spec.avoids_all(child)) {
          throw Error(ErrorCode::Param, "pruned enumeration disagrees with full containment");
        }
        if (ok) out.push_back(std::move(child));
      }
    }
    std::sort(out.begin(), out.end());
    if (options.cache) options.cache->store(spec, n, out);
  }

  std::vector<std::vector<Member>> result(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    for (auto& p : level[n]) {
      const bool simple = is_simple(p);
      result[n].push_back({std::move(p), simple});
    }
  }
  return result;
}

void Witnessed::offer(int value, const Permutation& p, std::vector<int> pos) {
  if (value <= max) return;
  max = value;
  perm = p;
  positions = std::move(pos);
}

std::vector<CriterionRow> criterion_scan(const ClassSpec& spec, int n_max,
                                         const EnumerationOptions& options) {
  const auto members = enumerate_class(spec, n_max, options);
  std::vector<CriterionRow> rows;
  CriterionRow running;
  for (int n = 1; n <= n_max; ++n) {
    running.n = n;
    for (const auto& m : members[n]) {
      auto s = longest_sum21(m.perm);
      running.sum21.offer(s.max, m.perm, std::move(s.witness));
      auto k = longest_skew12(m.perm);
      running.skew12.offer(k.max, m.perm, std::move(k.witness));
    }
    rows.push_back(running);
  }
  return rows;
}

namespace {

void scan_pins(const Permutation& host, int budget, Witnessed& turns, Witnessed& extensions) {
  const int n = host.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      for (const auto& seq : enumerate_pin_sequences(host, a, b, budget)) {
        turns.offer(count_turns(seq), host, seq.positions);
        if (seq.size() >= 5 && classify_spiral(seq).spiral) {
          extensions.offer(count_extended_pins(find_extensions(host, seq)), host, seq.positions);
        }
      }
    }
  }
}

}  // namespace

std::vector<ObstructionRow> obstruction_scan(const ClassSpec& spec, int n_max,
                                             const ScanOptions& options) {
  const auto members = enumerate_class(spec, n_max, options.enumeration);
  std::vector<ObstructionRow> rows;
  ObstructionRow running;
  for (int n = 1; n <= n_max; ++n) {
    running.n = n;
    running.members = static_cast<long>(members[n].size());
    running.simples = 0;
    for (const auto& m : members[n]) {
      auto s = longest_sum21(m.perm);
      running.sum21.offer(s.max, m.perm, std::move(s.witness));
      auto k = longest_skew12(m.perm);
      running.skew12.offer(k.max, m.perm, std::move(k.witness));
      if (!m.simple) continue;
      ++running.simples;
      for (const Symmetry& g : Symmetry::all()) {
        auto p = max_sawtooth(m.perm, StructureKind::ParallelSawtooth, g);
        running.parallel_sawtooth.offer(p.max, m.perm, std::move(p.witness));
        for (int t = 1; t <= 3; ++t) {
          auto w = max_sliced_wedge(m.perm, t, g);
          running.sliced_wedge[t - 1].offer(w.max, m.perm, std::move(w.witness));
        }
      }
      scan_pins(m.perm, options.pin_budget, running.turns, running.extensions);
    }
    rows.push_back(running);
  }
  return rows;
}

namespace {

nlohmann::json to_json(const Witnessed& w) {
  nlohmann::json j{{"max", w.max}};
  if (w.perm) {
    j["witness"] = {{"perm", w.perm->to_string()}, {"positions", w.positions}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace

nlohmann::json to_json(const ClassSpec& spec, const std::vector<ObstructionRow>& rows,
                       int pin_budget) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : spec.basis()) basis.push_back(b.to_string());
  nlohmann::json lengths = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json turns = to_json(r.turns);
    turns["lower_bound"] = true;
    nlohmann::json ext = to_json(r.extensions);
    ext["lower_bound"] = true;
    lengths.push_back({
        {"n", r.n},
        {"members", r.members},
        {"simples", r.simples},
        {"max_sum21", r.sum21.max},
        {"max_skew12", r.skew12.max},
        {"witnesses", {{"sum21", to_json(r.sum21)}, {"skew12", to_json(r.skew12)}}},
        {"obstructions",
         {{"parallel_sawtooth", to_json(r.parallel_sawtooth)},
          {"sliced_wedge_1", to_json(r.sliced_wedge[0])},
          {"sliced_wedge_2", to_json(r.sliced_wedge[1])},
          {"sliced_wedge_3", to_json(r.sliced_wedge[2])},
          {"turns", turns},
          {"extensions", ext}}},
    });
  }
  return {{"basis", basis}, {"pin_budget", pin_budget}, {"lengths", lengths}};
}

}  // namespace permgrid
