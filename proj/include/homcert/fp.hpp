#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace homcert {

// Typed error carrying a short machine-readable code ("NonAssociative",
// "DimensionMismatch", ...) next to the human message.
struct HomError : std::runtime_error {
    std::string code;
    HomError(std::string c, const std::string& what)
        : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw HomError(code, msg);
}

inline void require(bool ok, const char* code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

// The prime field F_p. Elements are ints in [0, p); all arithmetic stays in
// that window. p is checked for primality at construction.
class PrimeField {
public:
    explicit PrimeField(unsigned p) : p_(p) {
        require(p >= 2 && is_prime(p), "MalformedSpec",
                "modulus " + std::to_string(p) + " is not prime");
        require(p <= 251, "MalformedSpec", "modulus too large");
    }

    unsigned p() const { return p_; }
    int modulus() const { return static_cast<int>(p_); }

    int add(int a, int b) const { return (a + b) % modulus(); }
    int sub(int a, int b) const { return (a - b + modulus()) % modulus(); }
    int mul(int a, int b) const { return (a * b) % modulus(); }
    int neg(int a) const { return a == 0 ? 0 : modulus() - a; }

    // Inverse of a nonzero element, by Fermat (p is tiny).
    int inv(int a) const {
        require(a % modulus() != 0, "MalformedSpec", "inverse of zero");
        int r = 1, base = reduce(a), e = modulus() - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    int div(int a, int b) const { return mul(reduce(a), inv(b)); }

    // Reduces an arbitrary integer into [0, p).
    int reduce(long long v) const {
        long long m = v % modulus();
        return static_cast<int>(m < 0 ? m + modulus() : m);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(unsigned n) {
        if (n < 2) return false;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    unsigned p_;
};

}  // namespace homcert
