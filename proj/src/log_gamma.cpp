#include "cohlab/log_gamma.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cohlab {

namespace {

constexpr long kTableSize = 4200;

// Cumulative sums of ln k in extended precision beat lgamma's error for the
// range we hit constantly (Fock cutoffs up to 4096).
const std::vector<double>& ln_factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kTableSize);
        long double acc = 0.0L;
        t[0] = 0.0;
        for (long k = 1; k < kTableSize; ++k) {
            acc += std::log(static_cast<long double>(k));
            t[k] = static_cast<double>(acc);
        }
        return t;
    }();
    return table;
}

}  // namespace

double ln_factorial(long n) {
    if (n < 0) throw std::domain_error("ln_factorial: negative argument");
    if (n < kTableSize) return ln_factorial_table()[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double ln_binomial(long n, long k) {
    if (k < 0 || k > n) throw std::domain_error("ln_binomial: k out of range");
    return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
}

std::int64_t binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > 62) throw std::domain_error("binomial_exact: n > 62 overflows int64");
    if (k > n - k) k = n - k;
    // Multiplicative form; every prefix C(n-k+i, i) is itself a binomial, so
    // the division is exact and intermediates fit in unsigned 128-bit.
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::int64_t>(acc);
}

}  // namespace cohlab
