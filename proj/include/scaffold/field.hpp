#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scaffold {

using Scalar = std::uint32_t;

/// Prime field Z/pZ with p < 2^31. Values are always kept reduced.
class Field {
public:
    static constexpr std::uint32_t kMersenne31 = 2147483647u;

    explicit Field(std::uint32_t p = kMersenne31) : p_(p) {
        if (p >= (1u << 31) || !is_prime(p))
            throw std::invalid_argument("field modulus must be a prime below 2^31, got " + std::to_string(p));
    }

    std::uint32_t modulus() const noexcept { return p_; }

    Scalar reduce(std::uint64_t v) const noexcept { return static_cast<Scalar>(v % p_); }
    Scalar from_signed(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Scalar pow(Scalar a, std::uint64_t e) const noexcept {
        std::uint64_t r = 1 % p_, b = a;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<Scalar>(r);
    }
    Scalar inv(Scalar a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }

    bool operator==(const Field& o) const noexcept { return p_ == o.p_; }

    static bool is_prime(std::uint32_t n) noexcept {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint32_t d = 3; d <= n / d; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace scaffold
