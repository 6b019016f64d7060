#pragma once

#include <string>

#include <gmpxx.h>

namespace permgrid {

/// Exact nonnegative integer; the bounds outgrow any fixed width almost at once.
using BoundValue = mpz_class;

/// g(m, s) = 2 when m <= 3 or s = 1, otherwise (m+3)k + 1 with
/// k = (8s^2)^(8s^2) g(m, s-1).
BoundValue bound_g(long m, long s);
/// f(n) = g(n, 8n), evaluated bottom-up without calling bound_g.
BoundValue bound_f(long n);
/// h(m, p, s) = 3mp(2s+1).
BoundValue bound_h(long m, long p, long s);
/// L (8m^2)^(8m^2).
BoundValue bound_rect(long L, long m);

std::string to_string(const BoundValue& v);

}  // namespace permgrid
