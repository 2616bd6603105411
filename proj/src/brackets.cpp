#include "amplifiber/brackets.hpp"

#include <string>

#include "amplifiber/errors.hpp"
#include "amplifiber/linalg.hpp"

namespace amplifiber {

Rat bracket_entry(const Mat& Y, const Mat& Z, int alpha, const IndexSet& P) {
    const int k = Y.rows();
    if (Y.cols() != Z.rows()) {
        throw ValidationError("bracket_entry: Y and Z sizes do not match");
    }
    if (alpha < 1 || alpha > k) {
        throw ValidationError("bracket_entry: row index out of range");
    }
    validate_index_set(P, Z.cols(), "bracket_entry");
    if (static_cast<int>(P.size()) != Y.cols() - (k - 1)) {
        throw ValidationError("bracket_entry: window has the wrong size");
    }
    std::vector<Vec> rows;
    for (int a = 0; a < k; ++a) {
        if (a != alpha - 1) {
            rows.push_back(Y.row(a));
        }
    }
    for (int p : P) {
        rows.push_back(Z.col(p - 1));
    }
    Rat d = det(mat_from_rows(rows));
    return (alpha % 2 == 1) ? d : -d;
}

Rat bracket(const Mat& Y, const Mat& Z, const std::vector<IndexSet>& Ps) {
    const int k = Y.rows();
    if (static_cast<int>(Ps.size()) != k) {
        throw ValidationError("bracket: need one window per row of Y");
    }
    Mat e(k, k);
    for (int al = 0; al < k; ++al) {
        for (int b = 0; b < k; ++b) {
            e.at(al, b) = bracket_entry(Y, Z, al + 1, Ps[b]);
        }
    }
    return det(e);
}

int interval_sign_exponent(int j, int k, int n) {
    if (j < 1 || j > n) {
        throw ValidationError("interval_sign_exponent: index out of range");
    }
    IndexSet window = cyclic_interval(j, k, n);
    return (window.back() == n) ? j : k * j;
}

int orientation_exponent(const IndexSet& J, int k, int n) {
    validate_index_set(J, n, "orientation_exponent");
    int s = 0;
    for (int j : J) {
        s += interval_sign_exponent(j, k, n);
    }
    return s;
}

IdentityCheck ray_bracket_identity(const FiberFrame& frame,
                                   const FiberForm& form, const IndexSet& J) {
    const Instance& inst = frame.instance;
    if (form.chart != Chart::Conjugate) {
        throw ValidationError(
            "ray_bracket_identity: needs the conjugate chart");
    }
    validate_index_set(J, inst.n, "ray_bracket_identity");
    if (static_cast<int>(J.size()) != inst.k) {
        throw ValidationError("ray_bracket_identity: J must have k entries");
    }

    std::vector<Vec> wrows;
    std::vector<IndexSet> windows;
    for (int j : J) {
        wrows.push_back(form.forms[j - 1].normal);
        windows.push_back(
            complement_in(inst.n, cyclic_interval(j, inst.k, inst.n)));
    }
    IdentityCheck chk;
    chk.lhs = det(mat_from_rows(wrows));
    Rat b = bracket(frame.Y, inst.Z, windows);
    int xi = orientation_exponent(J, inst.k, inst.n);
    chk.rhs = (xi % 2 == 0) ? b : -b;
    chk.equal = (chk.lhs == chk.rhs);
    return chk;
}

bool ray_bracket_components(const FiberFrame& frame, const FiberForm& form,
                            int j) {
    const Instance& inst = frame.instance;
    if (form.chart != Chart::Conjugate) {
        throw ValidationError(
            "ray_bracket_components: needs the conjugate chart");
    }
    if (j < 1 || j > inst.n) {
        throw ValidationError("ray_bracket_components: index out of range");
    }
    IndexSet p = complement_in(inst.n, cyclic_interval(j, inst.k, inst.n));
    int s = interval_sign_exponent(j, inst.k, inst.n);
    const Vec& w = form.forms[j - 1].normal;
    for (int al = 1; al <= inst.k; ++al) {
        Rat e = bracket_entry(frame.Y, inst.Z, al, p);
        if (s % 2 != 0) {
            e = -e;
        }
        if (w[al - 1] != e) {
            return false;
        }
    }
    return true;
}

int conjecture_orientation(int k) {
    if (k < 1) {
        throw ValidationError("conjecture_orientation: k must be positive");
    }
    return ((k + 1) / 2) % 2 == 0 ? 1 : -1;
}

ConjectureReport conjecture_check(const Instance& inst, int samples,
                                  uint64_t seed) {
    if (!inst.conjugate() || inst.m % 2 != 0) {
        throw ValidationError("conjecture_check: needs k = n - m - 1 with "
                              "even m");
    }
    if (samples < 1) {
        throw ValidationError("conjecture_check: need at least one sample");
    }
    const int n = inst.n;
    const int k = inst.k;
    const int gamma = conjecture_orientation(k);

    std::vector<IndexSet> all_j = subsets_of_size(n, k);
    std::vector<std::vector<IndexSet>> windows;
    std::vector<int> sign;
    for (const IndexSet& J : all_j) {
        std::vector<IndexSet> ps;
        for (int j : J) {
            ps.push_back(complement_in(n, cyclic_interval(j, k, n)));
        }
        windows.push_back(std::move(ps));
        int eps = levi_civita(J, complement_in(n, J));
        int xi = orientation_exponent(J, k, n);
        sign.push_back(gamma * eps * (xi % 2 == 0 ? 1 : -1));
    }

    ConjectureReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Rng rng(derive_seed(seed, static_cast<uint64_t>(s)));
        Mat c = sample_positive_C(k, n, rng);
        Mat y = amplituhedron_map(c, inst);
        for (size_t t = 0; t < all_j.size(); ++t) {
            Rat value = Rat(sign[t]) * bracket(y, inst.Z, windows[t]);
            if (!rep.has_min || value < rep.min_value) {
                rep.min_value = value;
                rep.has_min = true;
            }
            if (value <= 0) {
                rep.violations.push_back({s, all_j[t], value});
            }
        }
    }
    return rep;
}

} // namespace amplifiber
