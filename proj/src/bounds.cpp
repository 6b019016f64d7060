#include "permgrid/bounds.hpp"

#include "permgrid/error.hpp"

namespace permgrid {

namespace {

void require_positive(std::initializer_list<long> args) {
  for (long a : args) {
    if (a <= 0) throw Error(ErrorCode::Param, "bound arguments must be positive");
  }
}

// (8t^2)^(8t^2)
BoundValue tower(long t) {
  const unsigned long e = 8UL * static_cast<unsigned long>(t) * static_cast<unsigned long>(t);
  BoundValue out;
  mpz_ui_pow_ui(out.get_mpz_t(), e, e);
  return out;
}

BoundValue g_rec(long m, long s) {
  if (m <= 3 || s == 1) return 2;
  const BoundValue k = tower(s) * g_rec(m, s - 1);
  return (m + 3) * k + 1;
}

}  // namespace

BoundValue bound_g(long m, long s) {
  require_positive({m, s});
  return g_rec(m, s);
}

BoundValue bound_f(long n) {
  require_positive({n});
  BoundValue g = 2;
  if (n <= 3) return g;
  for (long s = 2; s <= 8 * n; ++s) {
    BoundValue k = tower(s);
    k *= g;
    g = k * (n + 3);
    g += 1;
  }
  return g;
}

BoundValue bound_h(long m, long p, long s) {
  require_positive({m, p, s});
  return BoundValue(3) * m * p * (2 * s + 1);
}

BoundValue bound_rect(long L, long m) {
  require_positive({L, m});
  return L * tower(m);
}

std::string to_string(const BoundValue& v) { return v.get_str(); }

}  // namespace permgrid
