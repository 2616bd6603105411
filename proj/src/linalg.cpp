#include "amplifiber/linalg.hpp"

#include <algorithm>

#include "amplifiber/errors.hpp"

namespace amplifiber {

Rat det(const Mat& m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("det: matrix is not square");
    }
    const int n = m.rows();
    if (n == 0) {
        return Rat(1);
    }

    std::vector<Int> w(static_cast<size_t>(n) * n);
    Int scale(1);
    for (int r = 0; r < n; ++r) {
        Int l(1);
        for (int c = 0; c < n; ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
        }
        for (int c = 0; c < n; ++c) {
            Rat t = m.at(r, c) * Rat(l);
            w[static_cast<size_t>(r) * n + c] = t.get_num();
        }
        scale *= l;
    }

    int sign = 1;
    Int prev(1);
    for (int p = 0; p < n; ++p) {
        int piv = -1;
        for (int r = p; r < n; ++r) {
            if (w[static_cast<size_t>(r) * n + p] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            return Rat(0);
        }
        if (piv != p) {
            for (int c = 0; c < n; ++c) {
                std::swap(w[static_cast<size_t>(piv) * n + c],
                          w[static_cast<size_t>(p) * n + c]);
            }
            sign = -sign;
        }
        for (int r = p + 1; r < n; ++r) {
            for (int c = p + 1; c < n; ++c) {
                Int t = w[static_cast<size_t>(r) * n + c] *
                            w[static_cast<size_t>(p) * n + p] -
                        w[static_cast<size_t>(r) * n + p] *
                            w[static_cast<size_t>(p) * n + c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w[static_cast<size_t>(r) * n + c] = t;
            }
        }
        prev = w[static_cast<size_t>(p) * n + p];
    }

    Int num = w[static_cast<size_t>(n) * n - 1];
    if (sign < 0) {
        num = -num;
    }
    Rat d(num, scale);
    d.canonicalize();
    return d;
}

int perm_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i) {
        for (size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) {
                return 0;
            }
            if (seq[i] > seq[j]) {
                ++inv;
            }
        }
    }
    return (inv % 2 == 0) ? 1 : -1;
}

int levi_civita(const IndexSet& a, const IndexSet& b) {
    std::vector<int> seq;
    seq.reserve(a.size() + b.size());
    seq.insert(seq.end(), a.begin(), a.end());
    seq.insert(seq.end(), b.begin(), b.end());
    return perm_sign(seq);
}

Rat pluecker(const Mat& m, const IndexSet& cols) {
    if (static_cast<int>(cols.size()) != m.rows()) {
        throw ValidationError("pluecker: need exactly rows() column indices");
    }
    std::vector<int> idx;
    idx.reserve(cols.size());
    for (int c : cols) {
        if (c < 1 || c > m.cols()) {
            throw ValidationError("pluecker: column index out of range");
        }
        idx.push_back(c - 1);
    }
    return det(cols_of(m, idx));
}

std::pair<Mat, std::vector<int>> rref(Mat m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        if (piv != row) {
            for (int c = 0; c < m.cols(); ++c) {
                std::swap(m.at(piv, c), m.at(row, c));
            }
        }
        Rat p = m.at(row, col);
        for (int c = 0; c < m.cols(); ++c) {
            m.at(row, c) /= p;
        }
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) {
                continue;
            }
            Rat f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) {
                m.at(r, c) -= f * m.at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

int rank_of(const Mat& m) {
    return static_cast<int>(rref(m).second.size());
}

Mat kernel_basis(const Mat& m) {
    auto [r, pivots] = rref(m);
    std::vector<int> free_cols;
    size_t p = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (p < pivots.size() && pivots[p] == c) {
            ++p;
        } else {
            free_cols.push_back(c);
        }
    }
    Mat out(static_cast<int>(free_cols.size()), m.cols());
    for (size_t i = 0; i < free_cols.size(); ++i) {
        int f = free_cols[i];
        out.at(static_cast<int>(i), f) = 1;
        for (size_t j = 0; j < pivots.size(); ++j) {
            out.at(static_cast<int>(i), pivots[j]) =
                -r.at(static_cast<int>(j), f);
        }
    }
    return out;
}

Mat orth_complement(const Mat& m) {
    Mat k = kernel_basis(m);
    if (k.rows() != m.cols() - m.rows()) {
        throw GenericityError("orth_complement: input is rank deficient");
    }
    return k;
}

Vec solve_cramer(const Mat& a, const Vec& b) {
    if (a.rows() != a.cols()) {
        throw ValidationError("solve_cramer: matrix is not square");
    }
    if (static_cast<int>(b.size()) != a.rows()) {
        throw ValidationError("solve_cramer: right-hand side has wrong length");
    }
    Rat d = det(a);
    if (d == 0) {
        throw GenericityError("solve_cramer: singular system");
    }
    const int n = a.rows();
    Vec x(n);
    for (int i = 0; i < n; ++i) {
        Mat ai = a;
        for (int r = 0; r < n; ++r) {
            ai.at(r, i) = b[r];
        }
        x[i] = det(ai) / d;
    }
    return x;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("inverse: matrix is not square");
    }
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            aug.at(r, c) = m.at(r, c);
        }
        aug.at(r, n + r) = 1;
    }
    auto [red, pivots] = rref(std::move(aug));
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw GenericityError("inverse: singular matrix");
    }
    Mat out(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            out.at(r, c) = red.at(r, n + c);
        }
    }
    return out;
}

Vec primitive_direction(const Vec& v) {
    Int l(1);
    for (const Rat& x : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<Int> w;
    w.reserve(v.size());
    for (const Rat& x : v) {
        Rat t = x * Rat(l);
        w.push_back(t.get_num());
    }
    Int g(0);
    for (const Int& e : w) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    if (g == 0) {
        return v;
    }
    Vec out;
    out.reserve(v.size());
    for (const Int& e : w) {
        Int q;
        mpz_divexact(q.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        out.push_back(Rat(q));
    }
    return out;
}

} // namespace amplifiber
