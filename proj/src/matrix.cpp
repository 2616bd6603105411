#include "amplifiber/matrix.hpp"

#include <algorithm>

namespace amplifiber {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

Vec Mat::row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c) {
        v[c] = at(r, c);
    }
    return v;
}

Vec Mat::col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) {
        v[r] = at(r, c);
    }
    return v;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) {
        throw InternalError("mat_mul: inner dimensions differ");
    }
    Mat out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int l = 0; l < a.cols(); ++l) {
            const Rat& ail = a.at(i, l);
            if (ail == 0) {
                continue;
            }
            for (int j = 0; j < b.cols(); ++j) {
                out.at(i, j) += ail * b.at(l, j);
            }
        }
    }
    return out;
}

Mat stack_rows(const Mat& top, const Mat& bottom) {
    if (top.cols() != bottom.cols()) {
        throw InternalError("stack_rows: column counts differ");
    }
    Mat out(top.rows() + bottom.rows(), top.cols());
    for (int r = 0; r < top.rows(); ++r) {
        for (int c = 0; c < top.cols(); ++c) {
            out.at(r, c) = top.at(r, c);
        }
    }
    for (int r = 0; r < bottom.rows(); ++r) {
        for (int c = 0; c < bottom.cols(); ++c) {
            out.at(top.rows() + r, c) = bottom.at(r, c);
        }
    }
    return out;
}

Mat rows_of(const Mat& m, const std::vector<int>& idx) {
    Mat out(static_cast<int>(idx.size()), m.cols());
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= m.rows()) {
            throw InternalError("rows_of: index out of range");
        }
        for (int c = 0; c < m.cols(); ++c) {
            out.at(static_cast<int>(i), c) = m.at(idx[i], c);
        }
    }
    return out;
}

Mat cols_of(const Mat& m, const std::vector<int>& idx) {
    Mat out(m.rows(), static_cast<int>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 0 || idx[j] >= m.cols()) {
            throw InternalError("cols_of: index out of range");
        }
        for (int r = 0; r < m.rows(); ++r) {
            out.at(r, static_cast<int>(j)) = m.at(r, idx[j]);
        }
    }
    return out;
}

Mat mat_from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) {
        return Mat();
    }
    Mat out(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) {
            throw InternalError("mat_from_rows: ragged rows");
        }
        for (size_t c = 0; c < rows[r].size(); ++c) {
            out.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        }
    }
    return out;
}

void validate_index_set(const IndexSet& s, int n, const char* what) {
    int prev = 0;
    for (int i : s) {
        if (i < 1 || i > n) {
            throw ValidationError(std::string(what) + ": index " +
                                  std::to_string(i) + " outside [1, " +
                                  std::to_string(n) + "]");
        }
        if (i <= prev) {
            throw ValidationError(std::string(what) +
                                  ": indices must be strictly increasing");
        }
        prev = i;
    }
}

IndexSet complement_in(int n, const IndexSet& s) {
    IndexSet out;
    out.reserve(n - s.size());
    size_t p = 0;
    for (int i = 1; i <= n; ++i) {
        if (p < s.size() && s[p] == i) {
            ++p;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<int> zero_based(const IndexSet& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (int i : s) {
        out.push_back(i - 1);
    }
    return out;
}

std::vector<IndexSet> subsets_of_size(int n, int r) {
    std::vector<IndexSet> out;
    if (r < 0 || r > n) {
        return out;
    }
    IndexSet cur(r);
    for (int i = 0; i < r; ++i) {
        cur[i] = i + 1;
    }
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - (r - 1 - i)) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++cur[i];
        for (int j = i + 1; j < r; ++j) {
            cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}

} // namespace amplifiber
