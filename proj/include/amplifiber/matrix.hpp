#pragma once

#include <vector>

#include "amplifiber/rational.hpp"

namespace amplifiber {

// Dense rational matrix, row major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const {
        return a_[static_cast<size_t>(r) * cols_ + c];
    }

    Vec row(int r) const;
    Vec col(int c) const;
    Mat transposed() const;

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);

// Vertical concatenation; the column counts must agree.
Mat stack_rows(const Mat& top, const Mat& bottom);

// Row or column selections, 0-based positions taken in the given order.
Mat rows_of(const Mat& m, const std::vector<int>& idx);
Mat cols_of(const Mat& m, const std::vector<int>& idx);

Mat mat_from_rows(const std::vector<Vec>& rows);

// A set of 1-based indices into [1, n], kept strictly increasing.
using IndexSet = std::vector<int>;

// Throws ValidationError unless s is strictly increasing inside [1, n].
void validate_index_set(const IndexSet& s, int n, const char* what);

IndexSet complement_in(int n, const IndexSet& s);

std::vector<int> zero_based(const IndexSet& s);

// All size-r subsets of [1, n] in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int r);

} // namespace amplifiber
