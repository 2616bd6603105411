#include "amplifiber/triangulate.hpp"

#include <algorithm>

#include "amplifiber/errors.hpp"
#include "amplifiber/linalg.hpp"

namespace amplifiber {

Triangulation triangulation_from_chamber(const ChamberFan& fan, int chamber) {
    if (chamber < 0 || chamber >= static_cast<int>(fan.chambers.size())) {
        throw ValidationError(
            "triangulation_from_chamber: chamber index out of range");
    }
    Triangulation t;
    t.cells = fan.chambers[chamber].cones;
    t.source_chamber = chamber;
    return t;
}

Triangulation parity_dual(const Triangulation& t, const Instance& from,
                          const Instance& to) {
    if (to.n != from.n || to.m != from.m ||
        to.k != from.n - from.m - from.k) {
        throw ValidationError("parity_dual: instances are not parity "
                              "partners");
    }
    if (!(from.polytopal() || from.conjugate()) ||
        !(to.polytopal() || to.conjugate())) {
        throw ValidationError("parity_dual: needs the polytope / conjugate "
                              "pair");
    }
    const size_t cell_size = static_cast<size_t>(from.n - from.m - 1);
    for (const IndexSet& cell : t.cells) {
        validate_index_set(cell, from.n, "parity_dual");
        if (cell.size() != cell_size) {
            throw ValidationError("parity_dual: cell size does not match "
                                  "the fan dimension");
        }
    }
    return t;
}

bool weak_cone_member(const RaySystem& rs, const IndexSet& J, const Vec& w) {
    validate_index_set(J, static_cast<int>(rs.rays.size()),
                       "weak_cone_member");
    if (static_cast<int>(w.size()) != rs.r) {
        throw ValidationError("weak_cone_member: point has wrong dimension");
    }
    const int ncols = static_cast<int>(J.size());

    Mat aug(rs.r, ncols + 1);
    for (int i = 0; i < rs.r; ++i) {
        for (int t = 0; t < ncols; ++t) {
            aug.at(i, t) = rs.rays[J[t] - 1][i];
        }
        aug.at(i, ncols) = w[i];
    }
    auto [rr, piv] = rref(aug);
    for (int p : piv) {
        if (p == ncols) {
            return false; // w outside the linear span
        }
    }

    std::vector<Rat> c0(ncols, 0);
    std::vector<int> pivcols;
    for (size_t i = 0; i < piv.size(); ++i) {
        c0[piv[i]] = rr.at(static_cast<int>(i), ncols);
        pivcols.push_back(piv[i]);
    }
    std::vector<int> free_cols;
    for (int c = 0; c < ncols; ++c) {
        if (std::find(pivcols.begin(), pivcols.end(), c) == pivcols.end()) {
            free_cols.push_back(c);
        }
    }
    std::vector<Vec> nbasis;
    for (int f : free_cols) {
        Vec v(ncols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivcols.size(); ++i) {
            v[pivcols[i]] = -rr.at(static_cast<int>(i), f);
        }
        nbasis.push_back(std::move(v));
    }

    // c0 + sum_a t_a nbasis[a] >= 0 componentwise; eliminate the t's by
    // weak (non-strict) Fourier-Motzkin.  Row layout: t coefficients, then
    // the constant term.
    const int nv = static_cast<int>(nbasis.size());
    std::vector<Vec> rows;
    for (int j = 0; j < ncols; ++j) {
        Vec q;
        for (int a = 0; a < nv; ++a) {
            q.push_back(nbasis[a][j]);
        }
        q.push_back(c0[j]);
        rows.push_back(std::move(q));
    }
    for (int v = nv - 1; v >= 0; --v) {
        std::vector<Vec> nxt;
        std::vector<const Vec*> pos, neg;
        for (const Vec& q : rows) {
            if (q[v] > 0) {
                pos.push_back(&q);
            } else if (q[v] < 0) {
                neg.push_back(&q);
            } else {
                Vec keep(q.begin(), q.begin() + v);
                keep.push_back(q.back());
                nxt.push_back(std::move(keep));
            }
        }
        for (const Vec* p : pos) {
            for (const Vec* q : neg) {
                Vec comb;
                for (int j = 0; j < v; ++j) {
                    comb.push_back((*p)[v] * (*q)[j] - (*q)[v] * (*p)[j]);
                }
                comb.push_back((*p)[v] * (*q).back() -
                               (*q)[v] * (*p).back());
                nxt.push_back(std::move(comb));
            }
        }
        rows = std::move(nxt);
    }
    for (const Vec& q : rows) {
        if (q.back() < 0) {
            return false;
        }
    }
    return true;
}

std::vector<IndexSet> dissection_from_cone(const RaySystem& rs,
                                           const Vec& w) {
    bool zero = true;
    for (const Rat& x : w) {
        if (x != 0) {
            zero = false;
            break;
        }
    }
    if (zero) {
        throw ValidationError("dissection_from_cone: zero direction");
    }
    const int n = static_cast<int>(rs.rays.size());
    std::vector<IndexSet> found;
    for (int size = 1; size <= rs.r; ++size) {
        for (const IndexSet& J : subsets_of_size(n, size)) {
            bool covered = false;
            for (const IndexSet& m : found) {
                if (std::includes(J.begin(), J.end(), m.begin(), m.end())) {
                    covered = true;
                    break;
                }
            }
            if (covered) {
                continue;
            }
            if (weak_cone_member(rs, J, w)) {
                found.push_back(J);
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace amplifiber
