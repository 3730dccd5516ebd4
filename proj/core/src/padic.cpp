#include "dht/padic.hpp"

#include <algorithm>

namespace dht {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

void require_prime(unsigned p) {
    if (!is_prime(p)) {
        throw ConfigError("base must be prime, got " + std::to_string(p));
    }
}

BigInt pow_int(unsigned p, std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

BranchCode::BranchCode(std::vector<std::uint8_t> d, unsigned p) : digits(std::move(d)), base(p) {
    require_prime(base);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= base) {
            throw NumericError("invalid code: digit " + std::to_string(digits[i]) +
                               " at index " + std::to_string(i) + " out of range for base " +
                               std::to_string(base));
        }
    }
}

std::string BranchCode::to_string() const {
    std::string s;
    s.reserve(digits.size());
    for (auto d : digits) {
        s += (d < 10) ? char('0' + d) : char('a' + (d - 10));
    }
    return s;
}

Rational UltrametricBall::radius() const {
    return Rational(1, pow_int(base, prefix.size()));
}

bool UltrametricBall::contains(const BranchCode& code) const {
    if (code.base != base || code.length() < prefix.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), code.digits.begin());
}

BigInt encode_edge(const BranchCode& code) {
    BigInt acc = 0;
    BigInt w = 1;
    for (auto d : code.digits) {
        acc += w * d;
        w *= code.base;
    }
    return acc;
}

MonnaValue monna_map(const BranchCode& code) {
    // sum_j a_j p^(-j-1) = (sum_j a_j p^(k-j)) / p^(k+1) with k = len-1
    BigInt num = 0;
    for (auto d : code.digits) {
        num = num * code.base + d;
    }
    return MonnaValue{Rational(num, pow_int(code.base, code.length()))};
}

Rational padic_norm(const BigInt& n, unsigned p) {
    require_prime(p);
    if (n == 0) return Rational(0);
    BigInt m = abs(n);
    std::size_t v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return Rational(1, pow_int(p, v));
}

Rational ultrametric_distance(const BranchCode& a, const BranchCode& b) {
    if (a.base != b.base || a.length() != b.length()) {
        throw NumericError("incompatible codes: length/base mismatch");
    }
    std::size_t l = 0;
    while (l < a.length() && a.digits[l] == b.digits[l]) ++l;
    if (l == a.length()) return Rational(0);
    return Rational(1, pow_int(a.base, l));
}

std::vector<BranchCode> ball_members(std::span<const BranchCode> codes,
                                     const BranchCode& center,
                                     const Rational& radius) {
    if (radius >= 1) {
        return {codes.begin(), codes.end()};
    }
    if (radius <= 0 || numerator(radius) != 1) {
        throw NumericError("invalid radius: must be a power of 1/p");
    }
    BigInt den = denominator(radius);
    std::size_t level = 0;
    while (den > 1 && den % center.base == 0) {
        den /= center.base;
        ++level;
    }
    if (den != 1) {
        throw NumericError("invalid radius: must be a power of 1/p");
    }
    std::size_t l = std::min(level, center.length());
    UltrametricBall ball{{center.digits.begin(), center.digits.begin() + l}, center.base};
    std::vector<BranchCode> out;
    for (const auto& c : codes) {
        if (c.base != center.base || c.length() != center.length()) {
            throw NumericError("incompatible codes: length/base mismatch");
        }
        if (ball.contains(c)) out.push_back(c);
    }
    return out;
}

}  // namespace dht
