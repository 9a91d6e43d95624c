#pragma once

#include <cstdlib>
#include <string>

namespace spincactus {

namespace detail {
inline int env_limit_or(int fallback) {
    if (const char* env = std::getenv("SPINCACTUS_LIMIT")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return fallback;
}
}  // namespace detail

/// Cap on n*N for operations that scan all 2^(n*N) sign patterns.
/// An explicit positive `limit` argument wins over the SPINCACTUS_LIMIT
/// environment variable, which wins over the built-in default of 20.
inline int brute_force_limit(int explicit_limit = 0) {
    if (explicit_limit > 0) return explicit_limit;
    return detail::env_limit_or(20);
}

/// Cap on n*N for enumerations that walk index sets directly (dominant
/// paths, tableau sets, orbits). These grow far slower than 2^(n*N), so the
/// default is looser. Same override order as brute_force_limit.
inline int enumeration_limit(int explicit_limit = 0) {
    if (explicit_limit > 0) return explicit_limit;
    return detail::env_limit_or(32);
}

}  // namespace spincactus
