#pragma once

#include <cstdint>

#include "gclh/errors.hpp"

namespace gclh {

// Arithmetic context for the prime field F_p. The modulus is a runtime
// constant fixed per ring (default 32003); values are stored reduced in
// [0, p). Products go through 64 bits, so p may be any prime < 2^31.
struct Fp {
    uint32_t p = 32003;

    Fp() = default;
    explicit Fp(uint32_t prime) : p(prime) {
        if (!is_prime(prime)) throw InputError("field characteristic must be prime, got " + std::to_string(prime));
    }

    static bool is_prime(uint32_t v) {
        if (v < 2) return false;
        for (uint64_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }

    uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw Error("division by zero in F_p");
        return pow(a, p - 2);
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const Fp& o) const { return p == o.p; }
};

}  // namespace gclh
