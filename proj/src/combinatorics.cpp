#include "rgvcs/combinatorics.hpp"

#include <stdexcept>

namespace rgvcs {

BigInt big_binomial(int n, int r) {
    if (n < 0) throw std::invalid_argument("big_binomial: n must be non-negative");
    if (r < 0 || r > n) return BigInt(0);
    if (r > n - r) r = n - r;
    BigInt result(1);
    for (int i = 1; i <= r; ++i) {
        result = result * BigInt(n - r + i);
        result = result / BigInt(i);  // exact at every step
    }
    return result;
}

BigInt big_factorial(int n) {
    if (n < 0) throw std::invalid_argument("big_factorial: n must be non-negative");
    BigInt result(1);
    for (int i = 2; i <= n; ++i) result = result * BigInt(i);
    return result;
}

double binomial_estimate(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    if (r > n - r) r = n - r;
    double result = 1.0;
    for (int i = 1; i <= r; ++i) result *= static_cast<double>(n - r + i) / i;
    return result;
}

}  // namespace rgvcs
