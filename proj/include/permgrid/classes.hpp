#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permgrid/permutation.hpp"

namespace permgrid {

/// A finitely based class Av(basis). The basis is normalized on
/// construction: duplicates and elements containing another element are
/// dropped, and the rest sorted by length then lexicographically.
class ClassSpec {
 public:
  explicit ClassSpec(std::vector<Permutation> basis);

  /// Parses "321;2143" (';'-separated permutations).
  static ClassSpec parse(std::string_view text);

  const std::vector<Permutation>& basis() const { return basis_; }
  bool avoids_all(const Permutation& perm) const;
  /// Stable textual key, e.g. "321;2143".
  std::string key() const;

 private:
  std::vector<Permutation> basis_;
};

/// Largest length enumerate_class accepts.
inline constexpr int kMaxClassLength = 12;

struct Member {
  Permutation perm;
  bool simple = false;
};

/// Caches class members per length as plain-text files, one permutation per
/// line, under <root>/<key>/length_<n>.txt.
class EnumerationCache {
 public:
  explicit EnumerationCache(std::filesystem::path root) : root_(std::move(root)) {}

  std::optional<std::vector<Permutation>> load(const ClassSpec& spec, int n) const;
  void store(const ClassSpec& spec, int n, const std::vector<Permutation>& members) const;

 private:
  std::filesystem::path file(const ClassSpec& spec, int n) const;

  std::filesystem::path root_;
};

struct EnumerationOptions {
  /// Re-check full avoidance of every generated member (guards the pruning).
  bool recheck = false;
  const EnumerationCache* cache = nullptr;
};

/// Members of lengths 1..n_max, indexed by length (entry 0 is empty).
/// New members insert a new maximum into a shorter member, so only
/// occurrences through that point need checking. Throws Error(PARAM) for
/// n_max outside 1..kMaxClassLength.
std::vector<std::vector<Member>> enumerate_class(const ClassSpec& spec, int n_max,
                                                 const EnumerationOptions& options = {});

/// A maximum together with the permutation and positions that attain it.
struct Witnessed {
  int max = 0;
  std::optional<Permutation> perm;
  std::vector<int> positions;

  /// Replaces the current value when `value` is strictly larger.
  void offer(int value, const Permutation& p, std::vector<int> pos);
};

struct CriterionRow {
  int n = 0;
  Witnessed sum21;
  Witnessed skew12;
};

/// For each n, the longest sum of 21s and skew sum of 12s over all members
/// of length at most n (so the columns never decrease).
std::vector<CriterionRow> criterion_scan(const ClassSpec& spec, int n_max,
                                         const EnumerationOptions& options = {});

struct ObstructionRow {
  int n = 0;
  long members = 0;
  long simples = 0;
  Witnessed sum21, skew12;
  Witnessed parallel_sawtooth;
  Witnessed sliced_wedge[3];
  Witnessed turns;       ///< lower bound: pin sequences are capped at the pin budget
  Witnessed extensions;  ///< extended pins over spirals among those sequences
};

struct ScanOptions {
  int pin_budget = 10;
  EnumerationOptions enumeration;
};

/// Obstruction maxima over the simple members of length at most n, across
/// all eight orientations. Member counts are per length.
std::vector<ObstructionRow> obstruction_scan(const ClassSpec& spec, int n_max,
                                             const ScanOptions& options = {});

nlohmann::json to_json(const ClassSpec& spec, const std::vector<ObstructionRow>& rows,
                       int pin_budget);

}  // namespace permgrid
