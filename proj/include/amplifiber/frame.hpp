#pragma once

#include "amplifiber/instance.hpp"

namespace amplifiber {

enum class Chart {
    Polytope,  // k = 1, chart lambda = (lambda_1, ..., lambda_{n-m-1}, 1)
    Conjugate, // k = n-m-1, chart on the dual line, first coordinate 1
    General,   // anything else; only direct form-value evaluation
};

// The fiber of the map over a fixed Y, presented as the row span of the
// (n-m) x n matrix A = [Zperp over (Y | 0)].  The top ell rows span ker Z
// and the bottom k rows (indexed by J) map onto the rows of Y.
struct FiberFrame {
    Instance instance;
    Mat Y; // k x (m+k)
    Mat A; // (n-m) x n
    IndexSet J;
    Chart chart = Chart::General;
    // Optional certified positive preimage of Y.  When present it supplies
    // the reference interior point used to orient the boundary forms.
    Mat C;

    bool has_witness() const { return C.rows() > 0; }
};

// The j-th cyclic window {j, j+1, ..., j+k-1} reduced mod n into [1, n],
// returned sorted.
IndexSet cyclic_interval(int j, int k, int n);

FiberFrame fiber_frame(const Instance& inst, const Mat& Y);

// Same, remembering the positive preimage C with Y = amplituhedron_map(C).
FiberFrame fiber_frame(const Instance& inst, const Mat& Y, const Mat& C);

// V = lambda * A for a full-rank k x (n-m) coefficient matrix.  Verifies
// that V maps back onto the row span of Y, i.e. V misses ker Z.
Mat fiber_point(const Mat& lambda, const FiberFrame& frame);

} // namespace amplifiber
