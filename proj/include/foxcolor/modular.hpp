#pragma once

// Exact arithmetic in Z_m and the group of affine coloring automorphisms
// x -> lambda*x + mu with lambda a unit of Z_m.

#include <stdexcept>
#include <vector>

namespace foxcolor {

/// A modulus m >= 2 with a cached trial-division primality flag.
class Modulus {
public:
    explicit Modulus(int m);

    int value() const { return m_; }
    bool is_prime() const { return prime_; }
    bool is_odd() const { return m_ % 2 == 1; }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Modulus& a, const Modulus& b) { return a.m_ != b.m_; }

private:
    int m_;
    bool prime_;
};

// Canonical residue of x in {0, ..., m-1}.
int mod_reduce(long long x, int m);

// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
int mod_inverse(int a, int m);

/// Invertible affine map x -> lambda*x + mu on Z_m.
class AffineMap {
public:
    AffineMap(int lambda, int mu, Modulus mod);

    int lambda() const { return lambda_; }
    int mu() const { return mu_; }
    const Modulus& modulus() const { return mod_; }

    int operator()(int x) const { return mod_reduce(1LL * lambda_ * x + mu_, mod_.value()); }

    // Composition: (f.after(g))(x) = f(g(x)). Throws on modulus mismatch.
    AffineMap after(const AffineMap& g) const;
    AffineMap inverse() const;
    bool is_identity() const { return lambda_ == 1 && mu_ == 0; }

    static AffineMap identity(Modulus mod) { return AffineMap(1, 0, mod); }

    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.mod_ == b.mod_ && a.lambda_ == b.lambda_ && a.mu_ == b.mu_;
    }

private:
    int lambda_;
    int mu_;
    Modulus mod_;
};

// Sorted units of Z_m, i.e. all x in {1..m-1} with gcd(x, m) = 1.
std::vector<int> units(const Modulus& m);

// All m*phi(m) automorphisms in (lambda ascending, mu ascending) order.
std::vector<AffineMap> enumerate_automorphisms(const Modulus& m);

}  // namespace foxcolor
