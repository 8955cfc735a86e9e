#include "potts/bigint.hpp"

#include <algorithm>
#include <cmath>

namespace potts {

BigUint::BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(v);
}

BigUint BigUint::from_u128(unsigned __int128 v) {
    BigUint r;
    if (v) {
        r.limbs_.push_back(static_cast<std::uint64_t>(v));
        std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
        if (hi) r.limbs_.push_back(hi);
    }
    return r;
}

BigUint BigUint::pow(std::uint64_t base, unsigned exp) {
    BigUint r(1);
    for (unsigned i = 0; i < exp; ++i) r.mul_u64(base);
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        carry += limbs_[i];
        if (i < o.limbs_.size()) carry += o.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(carry);
        carry >>= 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigUint& BigUint::mul_u64(std::uint64_t m) {
    if (m == 0) { limbs_.clear(); return *this; }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        carry += static_cast<unsigned __int128>(limb) * m;
        limb = static_cast<std::uint64_t>(carry);
        carry >>= 64;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint64_t>(carry));
        carry >>= 64;
    }
    return *this;
}

bool BigUint::operator<(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
    }
    return false;
}

double BigUint::to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    }
    return r;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    // Repeated division by 10^19 (largest power of ten in a 64-bit word).
    std::vector<std::uint64_t> work = limbs_;
    const std::uint64_t chunk = 10000000000000000000ULL;
    std::string out;
    while (!work.empty()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / chunk);
            rem = cur % chunk;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string digits = std::to_string(static_cast<std::uint64_t>(rem));
        if (!work.empty()) digits.insert(0, 19 - digits.size(), '0');
        out.insert(0, digits);
    }
    return out;
}

} // namespace potts
