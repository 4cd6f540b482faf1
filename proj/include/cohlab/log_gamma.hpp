// Log-domain factorial helpers and exact small-range binomials.
//
// Fock-space oracles need factorial ratios at photon numbers in the
// thousands; direct factorials overflow past 170!, so ratios are assembled
// from ln n! with signs tracked separately. Small binomials (n <= 62) are
// also provided exactly in integer arithmetic for combinatorial sums whose
// terms cancel by many orders of magnitude.
#pragma once

#include <cstdint>

namespace cohlab {

// ln(n!) for n >= 0. Table-backed for small n, lgamma beyond.
double ln_factorial(long n);

// ln C(n, k); requires 0 <= k <= n.
double ln_binomial(long n, long k);

// Exact C(n, k) for n <= 62 (largest n for which every C(n, k) fits int64).
std::int64_t binomial_exact(int n, int k);

}  // namespace cohlab
