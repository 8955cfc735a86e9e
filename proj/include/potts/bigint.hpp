#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace potts {

/// Arbitrary-precision unsigned integer. Only the operations the exact
/// evaluators need: addition, multiplication by a machine word, powers of a
/// word, comparison, decimal output and lossy conversion to double. All
/// counting quantities here are nonnegative, so there is no sign handling.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);
    static BigUint from_u128(unsigned __int128 v);
    static BigUint pow(std::uint64_t base, unsigned exp);

    BigUint& operator+=(const BigUint& o);
    BigUint& mul_u64(std::uint64_t m);

    friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }
    bool operator<(const BigUint& o) const;

    bool is_zero() const { return limbs_.empty(); }
    double to_double() const;
    std::string to_string() const;

private:
    // Little-endian 64-bit limbs, normalized (no high zero limbs; empty == 0).
    std::vector<std::uint64_t> limbs_;
    void trim();
};

} // namespace potts
