#include "ordcalc/matrix.hpp"

#include "ordcalc/errors.hpp"

#include <ostream>

namespace ordcalc {

Mat::Mat(std::size_t rows, std::size_t cols, RingSpec ring)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)), ring_(std::move(ring)) {}

Mat::Mat(std::size_t rows, std::size_t cols, RingSpec ring, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), ring_(std::move(ring)) {
    if (entries_.size() != rows_ * cols_)
        throw precondition_error("entry count does not match rows*cols");
    validate();
}

Mat Mat::identity(std::size_t n, const RingSpec& ring) {
    Mat m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_int_rows(std::initializer_list<std::initializer_list<long>> rows,
                       const RingSpec& ring) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Mat m(r, c, ring);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw precondition_error("ragged row list");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

void Mat::validate() const {
    for (const Rat& e : entries_)
        if (!ring_.contains(e))
            throw precondition_error("matrix entry outside ring " + ring_.name());
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::negate() const {
    Mat n(rows_, cols_, ring_);
    for (std::size_t k = 0; k < entries_.size(); ++k) n.entries_[k] = -entries_[k];
    return n;
}

std::vector<Rat> Mat::row(std::size_t i) const {
    return {entries_.begin() + static_cast<long>(i * cols_),
            entries_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Rat> Mat::col(std::size_t j) const {
    std::vector<Rat> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Mat Mat::col_range(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw precondition_error("column range out of bounds");
    Mat m(rows_, count, ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m.at(i, j) = at(i, first + j);
    return m;
}

Mat Mat::row_range(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw precondition_error("row range out of bounds");
    Mat m(count, cols_, ring_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(first + i, j);
    return m;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw precondition_error("hcat: row count mismatch");
    if (!(a.ring() == b.ring())) throw precondition_error("hcat: ring mismatch");
    Mat m(a.rows(), a.cols() + b.cols(), a.ring());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw precondition_error("vcat: column count mismatch");
    if (!(a.ring() == b.ring())) throw precondition_error("vcat: ring mismatch");
    Mat m(a.rows() + b.rows(), a.cols(), a.ring());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

Mat Mat::with_ring(const RingSpec& ring) const {
    return Mat(rows_, cols_, ring, entries_);
}

bool Mat::is_zero() const {
    for (const Rat& e : entries_)
        if (sgn(e) != 0) return false;
    return true;
}

bool Mat::all_nonneg() const {
    for (const Rat& e : entries_)
        if (sgn(e) < 0) return false;
    return true;
}

bool Mat::is_integer() const {
    for (const Rat& e : entries_)
        if (e.get_den() != 1) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && entries_ == o.entries_;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw precondition_error("mat_mul: dimension mismatch");
    if (!(a.ring() == b.ring())) throw precondition_error("mat_mul: ring mismatch");
    Mat m(a.rows(), b.cols(), a.ring());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw precondition_error("mat_add: dimension mismatch");
    if (!(a.ring() == b.ring())) throw precondition_error("mat_add: ring mismatch");
    Mat m(a.rows(), a.cols(), a.ring());
    for (std::size_t k = 0; k < m.entries().size(); ++k)
        m.at(k / a.cols(), k % a.cols()) = a.entries()[k] + b.entries()[k];
    return m;
}

Mat operator-(const Mat& a, const Mat& b) { return a + b.negate(); }

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << m.rows() << "x" << m.cols() << " over " << m.ring().name() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).get_str();
        }
        os << "]\n";
    }
    return os;
}

std::vector<Rat> mat_apply(const Mat& a, const std::vector<Rat>& x) {
    if (x.size() != a.cols()) throw precondition_error("mat_apply: dimension mismatch");
    std::vector<Rat> y(a.rows(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(a.at(i, j)) != 0) y[i] += a.at(i, j) * x[j];
    return y;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace ordcalc
