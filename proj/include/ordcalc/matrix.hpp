#pragma once

#include "ordcalc/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace ordcalc {

/// Dense matrix of exact scalars over a RingSpec, row-major.
/// Immutable in spirit: operations return new values.
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols, RingSpec ring);
    Mat(std::size_t rows, std::size_t cols, RingSpec ring, std::vector<Rat> entries);

    static Mat identity(std::size_t n, const RingSpec& ring);
    /// Row-major construction from integer literals, mostly for tests.
    static Mat from_int_rows(std::initializer_list<std::initializer_list<long>> rows,
                             const RingSpec& ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingSpec& ring() const { return ring_; }

    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const std::vector<Rat>& entries() const { return entries_; }

    /// Re-checks that every entry lies in the ring; throws otherwise.
    void validate() const;

    Mat transpose() const;
    Mat negate() const;
    std::vector<Rat> row(std::size_t i) const;
    std::vector<Rat> col(std::size_t j) const;
    Mat col_range(std::size_t first, std::size_t count) const;
    Mat row_range(std::size_t first, std::size_t count) const;

    /// Horizontal [a | b] and vertical [a ; b] concatenation.
    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);

    /// Same entries reinterpreted over another ring (entries must fit).
    Mat with_ring(const RingSpec& ring) const;

    bool is_zero() const;
    bool all_nonneg() const;
    bool is_integer() const;

    bool operator==(const Mat& o) const;

    friend Mat operator*(const Mat& a, const Mat& b); // exact, checks dims and rings
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
    RingSpec ring_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Matrix-vector product a * x (x.size() == a.cols()).
std::vector<Rat> mat_apply(const Mat& a, const std::vector<Rat>& x);

/// Dot product of equal-length vectors.
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

} // namespace ordcalc
