#include "tricl/types.hpp"

#include <algorithm>

namespace tricl {

std::string u128_to_string(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
    BigCount r;
    if (k > n) return r;  // 0
    if (k > n - k) k = n - k;
    r.value = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i at every step
        u128 num = n - k + i;
        if (!r.saturated && r.value > u128_max() / num) {
            r.value = u128_max();
            r.saturated = true;
        }
        if (r.saturated) continue;
        r.value = r.value * num / i;
    }
    return r;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    BigCount b = binomial(n, k);
    if (!b.fits_u64())
        throw capacity_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                             ") exceeds 64 bits");
    return b.as_u64();
}

}  // namespace tricl
