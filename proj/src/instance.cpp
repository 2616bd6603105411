#include "amplifiber/instance.hpp"

#include "amplifiber/errors.hpp"
#include "amplifiber/linalg.hpp"

namespace amplifiber {

namespace {

constexpr int kMaxExhaustiveCols = 12;

} // namespace

bool is_totally_positive(const Mat& m) {
    if (m.rows() > m.cols()) {
        throw ValidationError("is_totally_positive: more rows than columns");
    }
    if (m.cols() > kMaxExhaustiveCols) {
        throw ValidationError(
            "is_totally_positive: exhaustive minor check is limited to 12 "
            "columns");
    }
    for (const IndexSet& s : subsets_of_size(m.cols(), m.rows())) {
        if (pluecker(m, s) <= 0) {
            return false;
        }
    }
    return true;
}

Instance build_Z_moment_curve(int n, int m, int k, std::vector<Rat> nodes) {
    if (k < 1 || m < 1) {
        throw ValidationError("build_Z_moment_curve: need k >= 1 and m >= 1");
    }
    if (k + m > n) {
        throw ValidationError("build_Z_moment_curve: need k + m <= n");
    }
    if (n > kMaxExhaustiveCols) {
        throw ValidationError(
            "build_Z_moment_curve: positivity certification is limited to "
            "n <= 12");
    }
    if (nodes.empty()) {
        nodes.reserve(n);
        for (int i = 1; i <= n; ++i) {
            nodes.push_back(Rat(i));
        }
    }
    if (static_cast<int>(nodes.size()) != n) {
        throw ValidationError("build_Z_moment_curve: need exactly n nodes");
    }
    for (int i = 0; i < n; ++i) {
        if (nodes[i] <= 0) {
            throw ValidationError("build_Z_moment_curve: nodes must be positive");
        }
        if (i > 0 && nodes[i] <= nodes[i - 1]) {
            throw ValidationError(
                "build_Z_moment_curve: nodes must be strictly increasing");
        }
    }

    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.m = m;
    inst.ell = n - m - k;
    inst.nodes = std::move(nodes);

    const int h = m + k;
    inst.Zraw = Mat(h, n);
    for (int i = 0; i < n; ++i) {
        Rat p = 1;
        for (int a = 0; a < h; ++a) {
            inst.Zraw.at(a, i) = p;
            p *= inst.nodes[i];
        }
    }
    if (!is_totally_positive(inst.Zraw)) {
        throw ValidationError(
            "build_Z_moment_curve: Vandermonde failed the positivity "
            "certificate");
    }

    std::vector<int> left(h);
    for (int i = 0; i < h; ++i) {
        left[i] = i;
    }
    inst.Z = mat_mul(inverse(cols_of(inst.Zraw, left)), inst.Zraw);

    inst.zright = Mat(h, inst.ell);
    for (int a = 0; a < h; ++a) {
        for (int j = 0; j < inst.ell; ++j) {
            inst.zright.at(a, j) = inst.Z.at(a, h + j);
        }
    }
    inst.Zperp = Mat(inst.ell, n);
    for (int j = 0; j < inst.ell; ++j) {
        for (int a = 0; a < h; ++a) {
            inst.Zperp.at(j, a) = -inst.zright.at(a, j);
        }
        inst.Zperp.at(j, h + j) = 1;
    }

    Mat prod = mat_mul(inst.Z, inst.Zperp.transposed());
    for (int r = 0; r < prod.rows(); ++r) {
        for (int c = 0; c < prod.cols(); ++c) {
            if (prod.at(r, c) != 0) {
                throw InternalError("build_Z_moment_curve: Z * Zperp^T != 0");
            }
        }
    }
    return inst;
}

Mat sample_positive_C(int k, int n, Rng& rng) {
    if (k < 1 || k > n) {
        throw ValidationError("sample_positive_C: need 1 <= k <= n");
    }
    std::vector<Rat> t(n);
    Rat acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += rng.positive_rat();
        t[i] = acc;
    }
    std::vector<Rat> d(n);
    for (int i = 0; i < n; ++i) {
        d[i] = rng.positive_rat();
    }
    Mat c(k, n);
    for (int i = 0; i < n; ++i) {
        Rat p = d[i];
        for (int a = 0; a < k; ++a) {
            c.at(a, i) = p;
            p *= t[i];
        }
    }
    if (!is_totally_positive(c)) {
        throw InternalError("sample_positive_C: sampled matrix failed the "
                            "positivity certificate");
    }
    return c;
}

Mat amplituhedron_map(const Mat& C, const Instance& inst) {
    if (C.rows() != inst.k || C.cols() != inst.n) {
        throw ValidationError("amplituhedron_map: C must be k x n");
    }
    if (!is_totally_positive(C)) {
        throw ValidationError("amplituhedron_map: C is not totally positive");
    }
    Mat y = mat_mul(C, inst.Z.transposed());
    if (rank_of(y) != inst.k) {
        throw GenericityError("amplituhedron_map: Y dropped rank");
    }
    return y;
}

} // namespace amplifiber
