#include "foxcolor/modular.hpp"

#include <numeric>

namespace foxcolor {

namespace {

bool trial_division_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; 1LL * d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

}  // namespace

Modulus::Modulus(int m) : m_(m), prime_(trial_division_prime(m)) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
}

int mod_reduce(long long x, int m) {
    long long r = x % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

int mod_inverse(int a, int m) {
    // extended Euclid
    long long r0 = m, r1 = mod_reduce(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("not a unit: no inverse modulo m");
    return mod_reduce(s0, m);
}

AffineMap::AffineMap(int lambda, int mu, Modulus mod)
    : lambda_(mod_reduce(lambda, mod.value())),
      mu_(mod_reduce(mu, mod.value())),
      mod_(mod) {
    if (std::gcd(lambda_, mod_.value()) != 1)
        throw std::invalid_argument("affine map coefficient must be a unit");
}

AffineMap AffineMap::after(const AffineMap& g) const {
    if (mod_ != g.mod_) throw std::invalid_argument("affine map modulus mismatch");
    int m = mod_.value();
    return AffineMap(mod_reduce(1LL * lambda_ * g.lambda_, m),
                     mod_reduce(1LL * lambda_ * g.mu_ + mu_, m), mod_);
}

AffineMap AffineMap::inverse() const {
    int m = mod_.value();
    int li = mod_inverse(lambda_, m);
    return AffineMap(li, mod_reduce(-1LL * li * mu_, m), mod_);
}

std::vector<int> units(const Modulus& m) {
    std::vector<int> out;
    for (int x = 1; x < m.value(); ++x)
        if (std::gcd(x, m.value()) == 1) out.push_back(x);
    return out;
}

std::vector<AffineMap> enumerate_automorphisms(const Modulus& m) {
    std::vector<AffineMap> maps;
    for (int lambda : units(m))
        for (int mu = 0; mu < m.value(); ++mu)
            maps.emplace_back(lambda, mu, m);
    return maps;
}

}  // namespace foxcolor
