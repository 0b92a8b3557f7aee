#include "vweyl/squarefree.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace exactform {
namespace {

const unsigned long kTrialLimit = 1u << 16;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> sieve(kTrialLimit, true);
        std::vector<unsigned long> p;
        for (unsigned long i = 2; i < kTrialLimit; ++i) {
            if (!sieve[i]) continue;
            p.push_back(i);
            for (unsigned long j = i * i; j < kTrialLimit; j += i) sieve[j] = false;
        }
        return p;
    }();
    return primes;
}

bool is_prime(const Integer& n) {
    // BPSW + Miller-Rabin rounds; exact for anything this artifact produces.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer pollard_brent(const Integer& n) {
    // Brent's cycle variant of Pollard rho; n is composite, odd, not a
    // perfect power, with no factor below the trial-division limit.
    for (unsigned long c = 1;; ++c) {
        Integer x(2), y(2), d(1);
        Integer saved_y;
        unsigned long power = 1, lam = 0;
        auto step = [&](Integer& v) { v = (v * v + c) % n; };
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            step(y);
            ++lam;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned long>& exponents, unsigned long mult);

void factor_tail(const Integer& n, std::map<Integer, unsigned long>& exponents,
                 unsigned long mult) {
    if (n == 1) return;
    if (is_prime(n)) {
        exponents[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2;; ++k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                factor_tail(root, exponents, mult * k);
                return;
            }
        }
    }
    Integer d = pollard_brent(n);
    factor_into(d, exponents, mult);
    factor_into(n / d, exponents, mult);
}

void factor_into(Integer n, std::map<Integer, unsigned long>& exponents,
                 unsigned long mult) {
    for (unsigned long p : small_primes()) {
        if (n == 1) return;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= static_cast<signed long>(p);
            exponents[Integer(static_cast<signed long>(p))] += mult;
        }
        if (Integer(static_cast<signed long>(p)) * static_cast<signed long>(p) > n) break;
    }
    if (n == 1) return;
    if (n < Integer(kTrialLimit) * kTrialLimit) {
        exponents[n] += mult;  // below the square of the trial bound, so prime
        return;
    }
    factor_tail(n, exponents, mult);
}

}  // namespace

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw std::domain_error("squarefree_part: zero argument");
    std::map<Integer, unsigned long> exponents;
    Integer a = n < 0 ? Integer(-n) : n;
    factor_into(a, exponents, 1);
    Integer out = n < 0 ? -1 : 1;
    for (const auto& [p, e] : exponents)
        if (e % 2 == 1) out *= p;
    return out;
}

SquarefreeClass squarefree_class(const Rational& x) {
    if (x.is_zero()) throw std::domain_error("squarefree_class: zero argument");
    return SquarefreeClass(squarefree_part(x.num() * x.den()));
}

SquarefreeClass operator*(const SquarefreeClass& a, const SquarefreeClass& b) {
    return SquarefreeClass(squarefree_part(a.value * b.value));
}

}  // namespace exactform
