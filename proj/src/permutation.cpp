#include "permgrid/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "permgrid/error.hpp"

namespace permgrid {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw Error(ErrorCode::Parse, "not a permutation of 1.." + std::to_string(n) + ": " +
                                        to_string());
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values), Unchecked{});
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i) values[i] = n - i;
  return Permutation(std::move(values), Unchecked{});
}

Permutation Permutation::flatten(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(ranks), Unchecked{});
}

std::vector<int> Permutation::positions_of_values() const {
  std::vector<int> inv(values_.size());
  for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
  return inv;
}

Permutation Permutation::pattern_at(std::span<const int> positions) const {
  std::vector<int> picked;
  picked.reserve(positions.size());
  for (int p : positions) picked.push_back(values_[p - 1]);
  return flatten(picked);
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      values.push_back(std::stoi(token));
      token.clear();
    }
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      token += ch;
      if (token.size() > 6) throw Error(ErrorCode::Parse, "entry too large");
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      flush();
    } else {
      throw Error(ErrorCode::Parse, "unexpected character '" + std::string(1, ch) + "'");
    }
  }
  flush();
  if (values.empty()) throw Error(ErrorCode::Parse, "empty permutation");
  if (values.size() == 1 && values[0] > 9) {
    // Compact form: "2413" means 2 4 1 3. A lone multi-digit entry is never valid otherwise.
    std::vector<int> digits;
    for (char ch : std::to_string(values[0])) digits.push_back(ch - '0');
    values = std::move(digits);
  }
  return Permutation(std::move(values));
}

std::ostream& operator<<(std::ostream& os, const Permutation& perm) {
  return os << perm.to_string();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  do {
    out.emplace_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

}  // namespace permgrid

std::size_t std::hash<permgrid::Permutation>::operator()(
    const permgrid::Permutation& perm) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : perm.values()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}
