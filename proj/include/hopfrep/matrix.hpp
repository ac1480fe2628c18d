#pragma once

#include <vector>

#include "hopfrep/cyclotomic.hpp"

namespace hopfrep {

using Vec = std::vector<Cyc>;

// Dense row-major matrix over Q(zeta).  Entries are normalized to a common
// order on construction and after every arithmetic operation.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(unsigned rows, unsigned cols);
    static Mat identity(unsigned d);
    static Mat from_rows(std::vector<Vec> rows);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const Cyc& at(unsigned r, unsigned c) const { return entries_[r * cols_ + c]; }
    Cyc& at(unsigned r, unsigned c) { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Cyc trace() const;
    Mat transpose() const;
    Mat pow(unsigned long e) const; // square matrices only

    Mat operator-() const;
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Cyc& s, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    // Largest order among entries after normalization.
    unsigned common_order() const;
    void normalize_orders();

private:
    unsigned rows_, cols_;
    std::vector<Cyc> entries_;
};

Mat direct_sum(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);
Vec flatten(const Mat& m);

// Incremental reduced row space: rows kept fully reduced with unit pivots,
// sorted by pivot column.  insert() returns whether the dimension grew.
class RowSpan {
public:
    explicit RowSpan(size_t width) : width_(width) {}
    bool insert(Vec v);
    bool contains(Vec v) const;
    unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    void reduce(Vec& v) const;
    size_t width_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
};

struct RrefResult {
    Mat rref;
    unsigned rank = 0;
    std::vector<Vec> kernel; // basis of the right null space
};

// Plain rational Gauss-Jordan, first nonzero pivot left to right.
RrefResult rref_rank_kernel(const Mat& m);

// Smallest subspace containing the seeds and closed under every generator.
std::vector<Vec> spin_up(const std::vector<Vec>& seeds, const std::vector<Mat>& gens);

// Dimension of the unital algebra generated by gens inside d x d matrices:
// start from {I}, right-multiply by generators, rref-extend to the fixpoint.
// Bounded by d^2.
unsigned algebra_span_dim(const std::vector<Mat>& gens);

} // namespace hopfrep
