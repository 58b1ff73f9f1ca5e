#include "ordcalc/ring.hpp"

#include "ordcalc/errors.hpp"

#include <algorithm>

namespace ordcalc {

RingSpec RingSpec::localized(std::vector<unsigned long> primes) {
    if (primes.empty())
        throw precondition_error("LocalizedIntegers needs a nonempty prime set");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (unsigned long p : primes) {
        if (p < 2 || mpz_probab_prime_p(Int(p).get_mpz_t(), 30) == 0)
            throw precondition_error("inverted set contains a non-prime: " + std::to_string(p));
    }
    return RingSpec(RingKind::LocalizedIntegers, std::move(primes));
}

bool RingSpec::contains(const Rat& x) const {
    switch (kind_) {
    case RingKind::Rationals:
        return true;
    case RingKind::Integers:
        return x.get_den() == 1;
    case RingKind::LocalizedIntegers:
        return is_smooth(x.get_den(), inverted_primes_);
    }
    return false;
}

std::string RingSpec::name() const {
    switch (kind_) {
    case RingKind::Integers:
        return "Z";
    case RingKind::Rationals:
        return "Q";
    case RingKind::LocalizedIntegers: {
        std::string s = "Z[";
        for (std::size_t i = 0; i < inverted_primes_.size(); ++i) {
            if (i) s += ",";
            s += "1/" + std::to_string(inverted_primes_[i]);
        }
        return s + "]";
    }
    }
    return "?";
}

Rat rat_from_strings(const std::string& num, const std::string& den) {
    Int n, d;
    if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0)
        throw precondition_error("bad integer literal: " + num);
    if (mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0)
        throw precondition_error("bad integer literal: " + den);
    if (sgn(d) == 0)
        throw precondition_error("zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

bool is_smooth(const Int& n, const std::vector<unsigned long>& primes) {
    Int m = abs(n);
    if (sgn(m) == 0) return false;
    for (unsigned long p : primes) {
        Int ip(p);
        while (mpz_divisible_p(m.get_mpz_t(), ip.get_mpz_t()))
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), ip.get_mpz_t());
    }
    return m == 1;
}

} // namespace ordcalc
