#include "amplifiber/jk.hpp"

#include <string>

#include "amplifiber/errors.hpp"
#include "amplifiber/linalg.hpp"

namespace amplifiber {

namespace {

std::string set_str(const IndexSet& I) {
    std::string s = "{";
    for (size_t t = 0; t < I.size(); ++t) {
        if (t > 0) {
            s += ",";
        }
        s += std::to_string(I[t]);
    }
    return s + "}";
}

Mat normal_rows(const FiberForm& form, const IndexSet& I) {
    std::vector<Vec> rows;
    for (int i : I) {
        rows.push_back(form.forms[i - 1].normal);
    }
    return mat_from_rows(rows);
}

} // namespace

Vec cone_vertex(const FiberForm& form, const IndexSet& I) {
    validate_index_set(I, static_cast<int>(form.forms.size()), "cone_vertex");
    if (static_cast<int>(I.size()) != form.r) {
        throw ValidationError("cone_vertex: need exactly r boundary labels");
    }
    Mat b = normal_rows(form, I);
    if (det(b) == 0) {
        throw GenericityError("cone_vertex: dependent normals on " +
                              set_str(I));
    }
    Vec rhs;
    for (int i : I) {
        rhs.push_back(-form.forms[i - 1].constant);
    }
    return solve_cramer(b, rhs);
}

Rat residue_at_cone(const FiberForm& form, const IndexSet& I) {
    validate_index_set(I, static_cast<int>(form.forms.size()),
                       "residue_at_cone");
    if (static_cast<int>(I.size()) != form.r) {
        throw ValidationError(
            "residue_at_cone: need exactly r boundary labels");
    }
    Mat b = normal_rows(form, I);
    Rat db = det(b);
    if (db == 0) {
        throw GenericityError("residue_at_cone: degenerate cone " +
                              set_str(I));
    }
    Vec rhs;
    for (int i : I) {
        rhs.push_back(-form.forms[i - 1].constant);
    }
    Vec q = solve_cramer(b, rhs);
    Rat val = 1;
    for (const AffineHyperplane& h : form.forms) {
        bool inside = false;
        for (int i : I) {
            if (h.index == i) {
                inside = true;
                break;
            }
        }
        if (inside) {
            continue;
        }
        Rat dj = form_value(h, q);
        if (dj == 0) {
            throw GenericityError("residue_at_cone: boundary " +
                                  std::to_string(h.index) +
                                  " passes through the vertex of " +
                                  set_str(I));
        }
        val *= dj;
    }
    if (db < 0) {
        db = -db;
    }
    return Rat(1) / (db * val);
}

Rat jk_residue(const FiberForm& form, const Vec& xi) {
    RaySystem rs = rays_from_frame(form);
    if (auto wall = wall_hit(rs, xi)) {
        throw GenericityError("jk_residue: direction lies on a wall (" +
                              *wall + ")");
    }
    Rat tot = 0;
    for (const IndexSet& I :
         subsets_of_size(static_cast<int>(form.forms.size()), form.r)) {
        if (cone_contains(rs, I, xi) == ConeLocation::Interior) {
            tot += residue_at_cone(form, I);
        }
    }
    return tot;
}

Rat jk_residue(const FiberForm& form, const std::vector<IndexSet>& cones) {
    Rat tot = 0;
    for (const IndexSet& I : cones) {
        tot += residue_at_cone(form, I);
    }
    return tot;
}

Rat triangle_canonical(const FiberFrame& frame, const FiberForm& form,
                       const IndexSet& J) {
    const Instance& inst = frame.instance;
    if (form.chart != Chart::Conjugate) {
        throw ValidationError("triangle_canonical: needs the conjugate chart");
    }
    validate_index_set(J, inst.n, "triangle_canonical");
    if (static_cast<int>(J.size()) != inst.k) {
        throw ValidationError("triangle_canonical: cell must have k entries");
    }

    Mat wj = normal_rows(form, J);
    Rat dw = det(wj);
    if (dw == 0) {
        throw GenericityError("triangle_canonical: degenerate cell " +
                              set_str(J));
    }
    Rat num = 1;
    for (int t = 0; t < inst.m; ++t) {
        num *= dw;
    }

    // Unflipped complement rows; in the conjugate case each is a single
    // vector of length n - m = k + 1.
    std::vector<Vec> v;
    for (int i = 1; i <= inst.n; ++i) {
        v.push_back(boundary_normal(frame, i).row(0));
    }
    Rat den = 1;
    for (int i = 1; i <= inst.n; ++i) {
        bool in_j = false;
        for (int j : J) {
            if (j == i) {
                in_j = true;
                break;
            }
        }
        if (in_j) {
            continue;
        }
        std::vector<Vec> rows;
        rows.push_back(v[i - 1]);
        for (int j : J) {
            rows.push_back(v[j - 1]);
        }
        Rat d = det(mat_from_rows(rows));
        if (d == 0) {
            throw GenericityError("triangle_canonical: boundary " +
                                  std::to_string(i) +
                                  " degenerates against cell " + set_str(J));
        }
        den *= d;
    }
    int corr = (inst.k % 2 == 0 ? 1 : -1) * (dw > 0 ? 1 : -1);
    return Rat(corr) * num / den;
}

Rat simplex_canonical(const Instance& inst, const Mat& Y,
                      const IndexSet& verts) {
    if (Y.rows() != 1 || Y.cols() != inst.m + 1) {
        throw ValidationError("simplex_canonical: Y must be 1 x (m+1)");
    }
    validate_index_set(verts, inst.n, "simplex_canonical");
    const int mp1 = inst.m + 1;
    if (static_cast<int>(verts.size()) != mp1) {
        throw ValidationError("simplex_canonical: need m+1 vertices");
    }
    std::vector<Vec> w;
    for (int c : verts) {
        w.push_back(inst.Z.col(c - 1));
    }
    Rat d = det(mat_from_rows(w));
    if (d == 0) {
        throw GenericityError("simplex_canonical: flat vertex set " +
                              set_str(verts));
    }
    Rat val = 1;
    for (int t = 0; t < inst.m; ++t) {
        val *= d;
    }
    for (int i = 0; i < mp1; ++i) {
        std::vector<Vec> rows;
        rows.push_back(Y.row(0));
        for (int t = 0; t < inst.m; ++t) {
            rows.push_back(w[(i + t) % mp1]);
        }
        Rat facet = det(mat_from_rows(rows));
        if (facet == 0) {
            throw GenericityError("simplex_canonical: Y lies on a facet of " +
                                  set_str(verts));
        }
        val /= facet;
    }
    return val;
}

Rat polytope_canonical_sum(const Instance& inst, const Mat& Y,
                           const std::vector<IndexSet>& cells) {
    if (!inst.polytopal()) {
        throw ValidationError("polytope_canonical_sum: needs k = 1");
    }
    Rat tot = 0;
    for (const IndexSet& I : cells) {
        tot += simplex_canonical(inst, Y, complement_in(inst.n, I));
    }
    return tot;
}

CanonicalValue canonical_function(const FiberFrame& frame, const Vec& xi) {
    FiberForm form = affine_forms(frame);
    RaySystem rs = rays_from_frame(form);
    if (auto wall = wall_hit(rs, xi)) {
        throw GenericityError("canonical_function: direction lies on a wall "
                              "(" +
                              *wall + ")");
    }
    CanonicalValue out;
    out.cells = containment_pattern(rs, xi);
    out.value = jk_residue(form, out.cells);
    return out;
}

} // namespace amplifiber
