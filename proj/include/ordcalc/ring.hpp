#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ordcalc {

using Int = mpz_class;
using Rat = mpq_class; // always stored canonical: gcd(num, den) = 1, den > 0

enum class RingKind { Integers, LocalizedIntegers, Rationals };

/// The scalar ring of a computation: Z, Z with a finite set of primes
/// inverted, or Q. Each value is a directed partially ordered ring with
/// 0 <= 1 under the order inherited from Q.
class RingSpec {
public:
    static RingSpec integers() { return RingSpec(RingKind::Integers, {}); }
    static RingSpec rationals() { return RingSpec(RingKind::Rationals, {}); }
    static RingSpec localized(std::vector<unsigned long> primes);

    RingKind kind() const { return kind_; }
    const std::vector<unsigned long>& inverted_primes() const { return inverted_primes_; }

    /// True iff x is an element of this ring (denominator restrictions).
    bool contains(const Rat& x) const;

    /// x >= 0 in the ring order (the order inherited from Q for all kinds).
    static bool is_nonneg(const Rat& x) { return sgn(x) >= 0; }

    std::string name() const;

    bool operator==(const RingSpec& o) const {
        return kind_ == o.kind_ && inverted_primes_ == o.inverted_primes_;
    }

private:
    RingSpec(RingKind k, std::vector<unsigned long> primes)
        : kind_(k), inverted_primes_(std::move(primes)) {}

    RingKind kind_;
    std::vector<unsigned long> inverted_primes_; // sorted, nonempty iff Localized
};

/// Parse a scalar from decimal numerator/denominator strings; result is
/// reduced with positive denominator.
Rat rat_from_strings(const std::string& num, const std::string& den);

/// Strict total order on canonical rationals suitable for sorting columns.
inline bool rat_less(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }

/// True iff every prime factor of n (> 0) lies in `primes`.
bool is_smooth(const Int& n, const std::vector<unsigned long>& primes);

} // namespace ordcalc
