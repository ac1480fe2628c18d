#include "hopfrep/matrix.hpp"

#include <numeric>

#include "hopfrep/error.hpp"

namespace hopfrep {

Mat::Mat(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) fail(errk::DimensionMismatch, "matrix dimensions must be positive");
}

Mat Mat::identity(unsigned d) {
    Mat m(d, d);
    for (unsigned j = 0; j < d; ++j) m.at(j, j) = Cyc(Rational(1));
    return m;
}

Mat Mat::from_rows(std::vector<Vec> rows) {
    if (rows.empty() || rows.front().empty())
        fail(errk::DimensionMismatch, "matrix dimensions must be positive");
    Mat m(static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows.front().size()));
    for (unsigned r = 0; r < m.rows_; ++r) {
        if (rows[r].size() != m.cols_) fail(errk::DimensionMismatch, "ragged rows");
        for (unsigned c = 0; c < m.cols_; ++c) m.at(r, c) = std::move(rows[r][c]);
    }
    m.normalize_orders();
    return m;
}

bool Mat::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Cyc Mat::trace() const {
    if (!is_square()) fail(errk::DimensionMismatch, "trace of non-square matrix");
    Cyc t;
    for (unsigned j = 0; j < rows_; ++j) t += at(j, j);
    return t;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Mat Mat::pow(unsigned long e) const {
    if (!is_square()) fail(errk::DimensionMismatch, "pow of non-square matrix");
    Mat acc = identity(rows_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Mat Mat::operator-() const {
    Mat m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        fail(errk::DimensionMismatch, "matrix add shape mismatch");
    Mat m = a;
    for (size_t j = 0; j < m.entries_.size(); ++j) m.entries_[j] += b.entries_[j];
    m.normalize_orders();
    return m;
}

Mat operator-(const Mat& a, const Mat& b) {
    return a + (-b);
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) fail(errk::DimensionMismatch, "matrix mul shape mismatch");
    Mat m(a.rows_, b.cols_);
    for (unsigned r = 0; r < a.rows_; ++r)
        for (unsigned k = 0; k < a.cols_; ++k) {
            const Cyc& arc = a.at(r, k);
            if (arc.is_zero()) continue;
            for (unsigned c = 0; c < b.cols_; ++c) {
                const Cyc& bkc = b.at(k, c);
                if (bkc.is_zero()) continue;
                m.at(r, c) += arc * bkc;
            }
        }
    m.normalize_orders();
    return m;
}

Mat operator*(const Cyc& s, const Mat& a) {
    Mat m = a;
    for (auto& e : m.entries_) e = s * e;
    m.normalize_orders();
    return m;
}

bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t j = 0; j < a.entries_.size(); ++j)
        if (a.entries_[j] != b.entries_[j]) return false;
    return true;
}

unsigned Mat::common_order() const {
    unsigned n = 1;
    for (const auto& e : entries_) n = static_cast<unsigned>(std::lcm(n, e.order()));
    return n;
}

void Mat::normalize_orders() {
    unsigned n = common_order();
    for (auto& e : entries_)
        if (e.order() != n) e = e.lifted_to(n);
}

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (unsigned r = 0; r < a.rows(); ++r)
        for (unsigned c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (unsigned r = 0; r < b.rows(); ++r)
        for (unsigned c = 0; c < b.cols(); ++c) m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    m.normalize_orders();
    return m;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (v.size() != m.cols()) fail(errk::DimensionMismatch, "matrix-vector shape mismatch");
    Vec out(m.rows());
    for (unsigned r = 0; r < m.rows(); ++r) {
        Cyc acc;
        for (unsigned c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() && !v[c].is_zero()) acc += m.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

Vec flatten(const Mat& m) {
    Vec out;
    out.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (unsigned r = 0; r < m.rows(); ++r)
        for (unsigned c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
    return out;
}

void RowSpan::reduce(Vec& v) const {
    for (size_t j = 0; j < rows_.size(); ++j) {
        const Cyc& c = v[pivots_[j]];
        if (c.is_zero()) continue;
        Cyc f = c; // pivot of rows_[j] is 1
        for (size_t k = 0; k < width_; ++k)
            if (!rows_[j][k].is_zero()) v[k] -= f * rows_[j][k];
    }
}

bool RowSpan::insert(Vec v) {
    if (v.size() != width_) fail(errk::DimensionMismatch, "row width mismatch");
    reduce(v);
    size_t pivot = width_;
    for (size_t k = 0; k < width_; ++k)
        if (!v[k].is_zero()) {
            pivot = k;
            break;
        }
    if (pivot == width_) return false;
    Cyc inv = v[pivot].inverse();
    for (auto& e : v) e = inv * e;
    // Keep the span fully reduced: clear the new pivot column above.
    for (size_t j = 0; j < rows_.size(); ++j) {
        const Cyc& c = rows_[j][pivot];
        if (c.is_zero()) continue;
        Cyc f = c;
        for (size_t k = 0; k < width_; ++k)
            if (!v[k].is_zero()) rows_[j][k] -= f * v[k];
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(at), pivot);
    return true;
}

bool RowSpan::contains(Vec v) const {
    if (v.size() != width_) fail(errk::DimensionMismatch, "row width mismatch");
    reduce(v);
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

RrefResult rref_rank_kernel(const Mat& m) {
    RrefResult out;
    Mat a = m;
    unsigned rows = a.rows(), cols = a.cols();
    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    unsigned row = 0;
    for (unsigned col = 0; col < cols && row < rows; ++col) {
        unsigned sel = row;
        while (sel < rows && a.at(sel, col).is_zero()) ++sel;
        if (sel == rows) continue;
        if (sel != row)
            for (unsigned c = 0; c < cols; ++c) std::swap(a.at(sel, c), a.at(row, c));
        Cyc inv = a.at(row, col).inverse();
        for (unsigned c = 0; c < cols; ++c) a.at(row, c) = inv * a.at(row, c);
        for (unsigned r = 0; r < rows; ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Cyc f = a.at(r, col);
            for (unsigned c = 0; c < cols; ++c)
                if (!a.at(row, c).is_zero()) a.at(r, c) -= f * a.at(row, c);
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++row;
    }
    out.rank = row;
    out.rref = a;
    for (unsigned f = 0; f < cols; ++f) {
        if (is_pivot_col[f]) continue;
        Vec v(cols);
        v[f] = Cyc(Rational(1));
        for (unsigned r = 0; r < out.rank; ++r)
            v[static_cast<unsigned>(pivot_col_of_row[r])] = -a.at(r, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> spin_up(const std::vector<Vec>& seeds, const std::vector<Mat>& gens) {
    size_t d = 0;
    for (const auto& s : seeds) d = std::max(d, s.size());
    for (const auto& g : gens) {
        if (!g.is_square()) fail(errk::DimensionMismatch, "spin_up generator not square");
        if (d == 0) d = g.rows();
        if (g.rows() != d) fail(errk::DimensionMismatch, "spin_up generator dimension mismatch");
    }
    RowSpan span(d);
    for (const auto& s : seeds) {
        if (s.size() != d) fail(errk::DimensionMismatch, "spin_up seed dimension mismatch");
        span.insert(s);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> snapshot = span.rows();
        for (const auto& v : snapshot)
            for (const auto& g : gens)
                if (span.insert(mat_vec(g, v))) grew = true;
    }
    // Closure check: every generator image stays inside the span.
    for (const auto& v : span.rows())
        for (const auto& g : gens)
            if (!span.contains(mat_vec(g, v)))
                fail(errk::InternalError, "spin_up closure violated");
    return span.rows();
}

unsigned algebra_span_dim(const std::vector<Mat>& gens) {
    if (gens.empty()) fail(errk::DimensionMismatch, "algebra_span_dim needs at least one generator");
    unsigned d = gens.front().rows();
    for (const auto& g : gens)
        if (!g.is_square() || g.rows() != d)
            fail(errk::DimensionMismatch, "algebra generators must be square of equal size");
    RowSpan span(static_cast<size_t>(d) * d);
    std::vector<Mat> reps;
    Mat eye = Mat::identity(d);
    span.insert(flatten(eye));
    reps.push_back(eye);
    size_t next = 0;
    const unsigned cap = d * d;
    while (next < reps.size() && span.dim() < cap) {
        Mat cur = reps[next++];
        for (const auto& g : gens) {
            Mat prod = cur * g;
            if (span.insert(flatten(prod))) reps.push_back(prod);
            if (span.dim() == cap) break;
        }
    }
    return span.dim();
}

} // namespace hopfrep
