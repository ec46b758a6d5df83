#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kuga {

/// Dimension of the space of level-1 elliptic modular forms of weight r:
/// zero in negative or odd weight, floor(r/12) when r = 2 mod 12, and
/// floor(r/12) + 1 otherwise.
inline long long dim_m(long long r) {
    if (r < 0 || r % 2 != 0)
        return 0;
    return r % 12 == 2 ? r / 12 : r / 12 + 1;
}

/// Lower bound for the dimension of weight-k index-p Jacobi cusp forms,
/// counting theta-decomposition coefficients minus the singular-part rank.
/// Not clamped at zero; callers compare against 0 to detect existence.
inline long long jacobi_lower_bound(long long k, long long p) {
    if (p < 1)
        throw std::invalid_argument("jacobi_lower_bound: index must be >= 1");
    long long total = 0;
    if (k % 2 == 0) {
        for (long long j = 0; j <= p; ++j)
            total += dim_m(k + 2 * j) - (j * j / (4 * p) + 1);
    } else {
        for (long long j = 1; j <= p - 1; ++j)
            total += dim_m(k + 2 * j - 1) - (j * j / (4 * p) + 1);
    }
    return total;
}

inline bool is_prime(long long p) {
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline bool is_odd_prime(long long p) { return p >= 3 && is_prime(p); }

/// Smallest prime index at which the Jacobi cusp form bound turns positive
/// for weight k, or nothing if no prime up to p_max works.
inline std::optional<long long> minimal_prime(long long k,
                                              long long p_max = 1000) {
    for (long long p = 2; p <= p_max; ++p)
        if (is_prime(p) && jacobi_lower_bound(k, p) > 0)
            return p;
    return std::nullopt;
}

enum class RegionStatus { rgt, unknown, out_of_scope };

inline const char* region_status_name(RegionStatus s) {
    switch (s) {
    case RegionStatus::rgt:
        return "rgt";
    case RegionStatus::unknown:
        return "unknown";
    case RegionStatus::out_of_scope:
        return "out-of-scope";
    }
    return "?";
}

/// Where the fiber power n and odd prime level p land: "rgt" marks the
/// settled relative-general-type region, "unknown" the rest of the valid
/// parameter range, "out-of-scope" anything that is not an odd prime level.
inline RegionStatus classify(long long p, long long n) {
    if (!is_odd_prime(p))
        return RegionStatus::out_of_scope;
    if (n >= 4 || (p >= 5 && n >= 3) || p >= 37)
        return RegionStatus::rgt;
    return RegionStatus::unknown;
}

struct RegionCell {
    long long p = 0;
    long long n = 0;
    RegionStatus status = RegionStatus::unknown;
};

/// All cells with odd prime p <= p_max and 0 <= n <= n_max, p ascending and
/// n ascending within each p.
inline std::vector<RegionCell> region_grid(long long p_max, long long n_max) {
    if (p_max < 0 || n_max < 0)
        throw std::invalid_argument("region_grid: bounds must be >= 0");
    std::vector<RegionCell> cells;
    for (long long p = 3; p <= p_max; ++p) {
        if (!is_odd_prime(p))
            continue;
        for (long long n = 0; n <= n_max; ++n)
            cells.push_back({p, n, classify(p, n)});
    }
    return cells;
}

inline std::string region_csv(const std::vector<RegionCell>& cells) {
    std::ostringstream os;
    os << "p,n,status\n";
    for (const RegionCell& c : cells)
        os << c.p << "," << c.n << "," << region_status_name(c.status) << "\n";
    return os.str();
}

} // namespace kuga
