#include "amplifiber/forms.hpp"

#include <string>

#include "amplifiber/errors.hpp"
#include "amplifiber/linalg.hpp"

namespace amplifiber {

Mat boundary_normal(const FiberFrame& frame, int j) {
    const Instance& inst = frame.instance;
    const int nm = inst.n - inst.m;
    IndexSet window = cyclic_interval(j, inst.k, inst.n);
    Mat ai = cols_of(frame.A, zero_based(window));

    Mat b = kernel_basis(ai.transposed());
    if (b.rows() != inst.ell) {
        throw GenericityError("boundary_normal: window " + std::to_string(j) +
                              " is rank deficient (non-generic Y)");
    }

    // Pin the overall scale: pick the first row set S where the window
    // columns are invertible and rescale the first kernel row so that the
    // complementary minor of the basis matches the signed window minor.
    for (const IndexSet& s : subsets_of_size(nm, inst.k)) {
        Rat ds = det(rows_of(ai, zero_based(s)));
        if (ds == 0) {
            continue;
        }
        IndexSet l = complement_in(nm, s);
        Rat pl = det(cols_of(b, zero_based(l)));
        if (pl == 0) {
            throw InternalError("boundary_normal: complementary minor of the "
                                "kernel basis vanished");
        }
        Rat scale = Rat(levi_civita(s, l)) * ds / pl;
        for (int c = 0; c < nm; ++c) {
            b.at(0, c) *= scale;
        }
        return b;
    }
    throw InternalError("boundary_normal: no invertible row subset");
}

Rat fiber_denominator(const Mat& lambda, const FiberFrame& frame, int j) {
    const Instance& inst = frame.instance;
    if (lambda.rows() != inst.k || lambda.cols() != inst.n - inst.m) {
        throw ValidationError("fiber_denominator: lambda must be k x (n-m)");
    }
    return det(stack_rows(lambda, boundary_normal(frame, j)));
}

Mat fiber_point_from_witness(const FiberFrame& frame) {
    if (!frame.has_witness()) {
        throw GenericityError(
            "fiber_point_from_witness: frame carries no positive witness");
    }
    const Instance& inst = frame.instance;
    const int nm = inst.n - inst.m;
    for (const IndexSet& s : subsets_of_size(inst.n, nm)) {
        Mat as = cols_of(frame.A, zero_based(s));
        if (det(as) == 0) {
            continue;
        }
        Mat lambda = mat_mul(cols_of(frame.C, zero_based(s)), inverse(as));
        if (!(mat_mul(lambda, frame.A) == frame.C)) {
            throw InternalError(
                "fiber_point_from_witness: witness is not in the fiber");
        }
        return lambda;
    }
    throw InternalError("fiber_point_from_witness: frame has no invertible "
                        "column subset");
}

namespace {

int strict_sign(const Rat& x, const char* what) {
    int s = sgn(x);
    if (s == 0) {
        throw GenericityError(std::string(what) +
                              ": reference point lies on a boundary");
    }
    return s;
}

void require_uniform(const std::vector<int>& flips) {
    for (int f : flips) {
        if (f != flips[0]) {
            throw GenericityError("affine_forms: boundary orientations are "
                                  "inconsistent at the reference point");
        }
    }
}

} // namespace

FiberForm affine_forms(const FiberFrame& frame) {
    const Instance& inst = frame.instance;
    if (frame.chart != Chart::Polytope && frame.chart != Chart::Conjugate) {
        throw ValidationError(
            "affine_forms: only the k = 1 and k = n-m-1 charts are linear");
    }
    if (!frame.has_witness()) {
        throw GenericityError("affine_forms: frame carries no positive "
                              "witness to orient the forms");
    }

    const int r = inst.n - inst.m - 1;
    Mat lam = fiber_point_from_witness(frame);

    FiberForm out;
    out.chart = frame.chart;
    out.r = r;

    if (frame.chart == Chart::Polytope) {
        // Chart: last coordinate of the row vector lambda set to 1.  Each
        // boundary form is the pairing with a column of A.
        int denom_sign = strict_sign(lam.at(0, r), "affine_forms");
        for (int i = 1; i <= inst.n; ++i) {
            Vec colv = frame.A.col(i - 1);
            int ref = sgn(dot(lam.row(0), colv)) * denom_sign;
            if (ref == 0) {
                throw GenericityError(
                    "affine_forms: witness lies on boundary " +
                    std::to_string(i));
            }
            AffineHyperplane h;
            h.index = i;
            h.constant = Rat(ref) * colv[r];
            h.normal.assign(colv.begin(), colv.begin() + r);
            for (Rat& x : h.normal) {
                x *= ref;
            }
            out.forms.push_back(std::move(h));
            out.sign_flips.push_back(ref);
        }
    } else {
        // Chart: the line orthogonal to all rows of lambda, scaled to first
        // coordinate 1 and parametrized as (1, -x_1, ..., -x_r).  The form
        // on boundary i pairs that line with the oriented complement of the
        // i-th window, so the normal is the negated tail of the complement.
        Mat lbar = kernel_basis(lam);
        if (lbar.rows() != 1) {
            throw GenericityError("affine_forms: witness line is degenerate");
        }
        if (lbar.at(0, 0) == 0) {
            throw GenericityError(
                "affine_forms: dual line misses the affine chart");
        }
        Vec line = lbar.row(0);
        for (int i = 1; i <= inst.n; ++i) {
            Vec v = boundary_normal(frame, i).row(0);
            int ref = sgn(dot(line, v)) * sgn(line[0]);
            if (ref == 0) {
                throw GenericityError(
                    "affine_forms: witness lies on boundary " +
                    std::to_string(i));
            }
            AffineHyperplane h;
            h.index = i;
            h.constant = Rat(ref) * v[0];
            h.normal.resize(r);
            for (int a = 0; a < r; ++a) {
                h.normal[a] = Rat(-ref) * v[a + 1];
            }
            out.forms.push_back(std::move(h));
            out.sign_flips.push_back(ref);
        }
    }
    require_uniform(out.sign_flips);
    return out;
}

Rat general_fiber_form_value(const Mat& lambda, const FiberFrame& frame) {
    const Instance& inst = frame.instance;
    if (lambda.rows() != inst.k || lambda.cols() != inst.n - inst.m) {
        throw ValidationError(
            "general_fiber_form_value: lambda must be k x (n-m)");
    }
    Rat pj = pluecker(lambda, frame.J);
    if (pj == 0) {
        throw GenericityError(
            "general_fiber_form_value: chart prefactor p_J(lambda) vanishes");
    }
    Rat prod = 1;
    std::string zeros;
    for (int i = 1; i <= inst.n; ++i) {
        Rat di = fiber_denominator(lambda, frame, i);
        if (di == 0) {
            if (!zeros.empty()) {
                zeros += ", ";
            }
            zeros += std::to_string(i);
        } else {
            prod *= di;
        }
    }
    if (!zeros.empty()) {
        throw GenericityError(
            "general_fiber_form_value: pole, vanishing factor(s) at " + zeros);
    }
    Rat pw = 1;
    for (int t = 0; t < inst.k; ++t) {
        pw *= pj;
    }
    return Rat(1) / (pw * prod);
}

} // namespace amplifiber
