#include "amplifiber/frame.hpp"

#include <algorithm>

#include "amplifiber/errors.hpp"
#include "amplifiber/linalg.hpp"

namespace amplifiber {

IndexSet cyclic_interval(int j, int k, int n) {
    if (j < 1 || j > n) {
        throw ValidationError("cyclic_interval: need 1 <= j <= n");
    }
    if (k < 1 || k > n) {
        throw ValidationError("cyclic_interval: need 1 <= k <= n");
    }
    IndexSet out;
    out.reserve(k);
    for (int d = 0; d < k; ++d) {
        out.push_back((j - 1 + d) % n + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FiberFrame fiber_frame(const Instance& inst, const Mat& Y) {
    if (Y.rows() != inst.k || Y.cols() != inst.m + inst.k) {
        throw ValidationError("fiber_frame: Y must be k x (m+k)");
    }
    if (rank_of(Y) != inst.k) {
        throw GenericityError("fiber_frame: Y has rank < k");
    }

    FiberFrame f;
    f.instance = inst;
    f.Y = Y;

    Mat bottom(inst.k, inst.n);
    for (int r = 0; r < inst.k; ++r) {
        for (int c = 0; c < inst.m + inst.k; ++c) {
            bottom.at(r, c) = Y.at(r, c);
        }
    }
    f.A = stack_rows(inst.Zperp, bottom);
    if (rank_of(f.A) != inst.n - inst.m) {
        throw GenericityError("fiber_frame: frame matrix dropped rank");
    }

    for (int r = inst.ell + 1; r <= inst.n - inst.m; ++r) {
        f.J.push_back(r);
    }
    if (inst.k == 1) {
        f.chart = Chart::Polytope;
    } else if (inst.conjugate()) {
        f.chart = Chart::Conjugate;
    } else {
        f.chart = Chart::General;
    }
    return f;
}

FiberFrame fiber_frame(const Instance& inst, const Mat& Y, const Mat& C) {
    FiberFrame f = fiber_frame(inst, Y);
    if (C.rows() != inst.k || C.cols() != inst.n) {
        throw ValidationError("fiber_frame: witness C must be k x n");
    }
    if (!is_totally_positive(C)) {
        throw ValidationError("fiber_frame: witness C is not totally positive");
    }
    f.C = C;
    return f;
}

Mat fiber_point(const Mat& lambda, const FiberFrame& frame) {
    const Instance& inst = frame.instance;
    if (lambda.rows() != inst.k || lambda.cols() != inst.n - inst.m) {
        throw ValidationError("fiber_point: lambda must be k x (n-m)");
    }
    if (rank_of(lambda) != inst.k) {
        throw GenericityError("fiber_point: lambda has rank < k");
    }
    Mat v = mat_mul(lambda, frame.A);
    Mat image = mat_mul(v, inst.Z.transposed());
    if (rank_of(image) != inst.k) {
        throw GenericityError("fiber_point: point meets ker Z");
    }
    if (rank_of(stack_rows(image, frame.Y)) != inst.k) {
        throw InternalError("fiber_point: image span differs from Y");
    }
    return v;
}

} // namespace amplifiber
