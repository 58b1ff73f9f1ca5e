#pragma once

#include "ordcalc/matrix.hpp"

#include <vector>

namespace ordcalc {

/// Finite generating matrix S with the semantics
/// {S.Y | Y a nonnegative column over the ring}. Columns are generators.
/// When `nonneg` is set, every entry of gens is >= 0.
class GenSet {
public:
    /// Flag computed from the entries.
    static GenSet of(Mat gens) {
        bool nn = gens.all_nonneg();
        return GenSet(std::move(gens), nn);
    }
    /// Explicit flag; must be consistent with the entries.
    static GenSet with_flag(Mat gens, bool nonneg);

    const Mat& gens() const { return gens_; }
    bool nonneg() const { return nonneg_; }
    const RingSpec& ring() const { return gens_.ring(); }
    std::size_t ambient_dim() const { return gens_.rows(); }
    std::size_t count() const { return gens_.cols(); }

private:
    GenSet(Mat gens, bool nonneg) : gens_(std::move(gens)), nonneg_(nonneg) {}
    Mat gens_;
    bool nonneg_;
};

/// Zero columns and duplicate columns removed, remaining columns sorted
/// lexicographically. The generated set is unchanged.
GenSet genset_canonicalize(const GenSet& s);

/// Decides x in {S.Y | Y >= 0 over the ring}.
///   Rationals:          Gaussian solve + Fourier-Motzkin feasibility.
///   Integers:           nonneg generators required; bounded depth-first
///                       search over generator multiplicities.
///   LocalizedIntegers:  nonneg generators required; rational cone test,
///                       then minimal-face restriction and a lattice
///                       multiplier test (the multiplier must factor over
///                       the inverted primes).
bool genset_membership(const std::vector<Rat>& x, const GenSet& s);
bool genset_membership(const Mat& x_column, const GenSet& s);

} // namespace ordcalc
