#include "amplifiber/fans.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "amplifiber/errors.hpp"
#include "amplifiber/linalg.hpp"

namespace amplifiber {

namespace {

bool is_zero(const Vec& v) {
    for (const Rat& x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

Mat ray_columns(const RaySystem& rs, const IndexSet& I) {
    Mat m(rs.r, static_cast<int>(I.size()));
    for (size_t p = 0; p < I.size(); ++p) {
        const Vec& ray = rs.rays[I[p] - 1];
        for (int d = 0; d < rs.r; ++d) {
            m.at(d, static_cast<int>(p)) = ray[d];
        }
    }
    return m;
}

} // namespace

ConeLocation cone_contains(const RaySystem& rs, const IndexSet& I,
                           const Vec& xi) {
    validate_index_set(I, static_cast<int>(rs.rays.size()), "cone_contains");
    if (static_cast<int>(I.size()) != rs.r) {
        throw ValidationError("cone_contains: need exactly r generators");
    }
    if (static_cast<int>(xi.size()) != rs.r) {
        throw ValidationError("cone_contains: point has wrong dimension");
    }
    Mat m = ray_columns(rs, I);
    if (det(m) == 0) {
        return ConeLocation::Degenerate;
    }
    Vec c = solve_cramer(m, xi);
    bool zero = false;
    for (const Rat& x : c) {
        if (x < 0) {
            return ConeLocation::Outside;
        }
        if (x == 0) {
            zero = true;
        }
    }
    return zero ? ConeLocation::Boundary : ConeLocation::Interior;
}

RaySystem rays_from_frame(const FiberForm& form) {
    if (form.chart == Chart::General) {
        throw ValidationError("rays_from_frame: needs a linear chart");
    }
    RaySystem rs;
    rs.r = form.r;
    rs.provenance = RayProvenance::FromFrame;
    for (const AffineHyperplane& h : form.forms) {
        if (is_zero(h.normal)) {
            throw GenericityError("rays_from_frame: zero ray at boundary " +
                                  std::to_string(h.index));
        }
        rs.rays.push_back(h.normal);
    }
    return rs;
}

RaySystem rays_from_frame(const FiberFrame& frame) {
    return rays_from_frame(affine_forms(frame));
}

RaySystem secondary_fan_polytope(const Instance& inst) {
    if (inst.k != 1) {
        throw ValidationError("secondary_fan_polytope: needs k = 1");
    }
    RaySystem rs;
    rs.r = inst.ell; // = n - m - 1 when k = 1
    rs.provenance = RayProvenance::FromGale;
    for (int i = 0; i < inst.n; ++i) {
        rs.rays.push_back(inst.Zperp.col(i));
    }
    return rs;
}

GalePair gale_transform(const Mat& points) {
    const int m = points.rows();
    const int n = points.cols();
    if (m < 1 || n <= m) {
        throw ValidationError("gale_transform: need an m x n configuration "
                              "with n > m");
    }
    std::vector<int> left(m);
    for (int i = 0; i < m; ++i) {
        left[i] = i;
    }
    Mat block = cols_of(points, left);
    if (det(block) == 0) {
        throw ValidationError(
            "gale_transform: left block is singular, cannot normalize");
    }
    GalePair gp;
    gp.points = mat_mul(inverse(block), points);
    gp.dual = Mat(n - m, n);
    for (int j = 0; j < n - m; ++j) {
        for (int a = 0; a < m; ++a) {
            gp.dual.at(j, a) = -gp.points.at(a, m + j);
        }
        gp.dual.at(j, m + j) = 1;
    }
    Mat prod = mat_mul(gp.points, gp.dual.transposed());
    for (int r = 0; r < prod.rows(); ++r) {
        for (int c = 0; c < prod.cols(); ++c) {
            if (prod.at(r, c) != 0) {
                throw InternalError("gale_transform: M * Mperp^T != 0");
            }
        }
    }
    return gp;
}

std::vector<IndexSet> containment_pattern(const RaySystem& rs, const Vec& xi) {
    std::vector<IndexSet> out;
    for (const IndexSet& I :
         subsets_of_size(static_cast<int>(rs.rays.size()), rs.r)) {
        if (cone_contains(rs, I, xi) == ConeLocation::Interior) {
            out.push_back(I);
        }
    }
    return out;
}

std::optional<std::string> wall_hit(const RaySystem& rs, const Vec& xi) {
    if (is_zero(xi)) {
        return "zero direction";
    }
    if (rs.r == 1) {
        return std::nullopt;
    }
    if (rs.r == 2) {
        for (size_t j = 0; j < rs.rays.size(); ++j) {
            const Vec& a = rs.rays[j];
            if (a[0] * xi[1] - a[1] * xi[0] == 0) {
                return "line spanned by ray " + std::to_string(j + 1);
            }
        }
        return std::nullopt;
    }
    if (rs.r == 3) {
        const int n = static_cast<int>(rs.rays.size());
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                Mat m = mat_from_rows({rs.rays[a], rs.rays[b], xi});
                if (det(m) == 0) {
                    return "plane spanned by rays " + std::to_string(a + 1) +
                           " and " + std::to_string(b + 1);
                }
            }
        }
        return std::nullopt;
    }
    throw ValidationError("wall_hit: unsupported dimension");
}

std::optional<Vec> fm_feasible(const std::vector<Vec>& ineqs, int nvars) {
    // Eliminate from the highest variable down; systems[v] only involves
    // variables 0..v-1.
    std::vector<std::vector<Vec>> systems(nvars + 1);
    systems[nvars] = ineqs;
    for (int v = nvars - 1; v >= 0; --v) {
        const std::vector<Vec>& cur = systems[v + 1];
        std::vector<Vec> nxt;
        std::vector<const Vec*> pos, neg;
        for (const Vec& q : cur) {
            if (q[v] > 0) {
                pos.push_back(&q);
            } else if (q[v] < 0) {
                neg.push_back(&q);
            } else {
                nxt.emplace_back(q.begin(), q.begin() + v);
            }
        }
        for (const Vec* p : pos) {
            for (const Vec* q : neg) {
                Vec comb(v);
                for (int j = 0; j < v; ++j) {
                    comb[j] = (*p)[v] * (*q)[j] - (*q)[v] * (*p)[j];
                }
                nxt.push_back(std::move(comb));
            }
        }
        for (const Vec& q : nxt) {
            if (is_zero(q)) {
                return std::nullopt; // derived 0 > 0
            }
        }
        systems[v] = std::move(nxt);
    }

    Vec x;
    for (int v = 0; v < nvars; ++v) {
        std::optional<Rat> lo, hi;
        for (const Vec& q : systems[v + 1]) {
            const Rat& cv = q[v];
            Rat rest = 0;
            for (int j = 0; j < v; ++j) {
                rest += q[j] * x[j];
            }
            if (cv > 0) {
                Rat bound = -rest / cv;
                if (!lo || bound > *lo) {
                    lo = bound;
                }
            } else if (cv < 0) {
                Rat bound = -rest / cv;
                if (!hi || bound < *hi) {
                    hi = bound;
                }
            } else if (rest <= 0) {
                return std::nullopt;
            }
        }
        Rat val;
        if (!lo && !hi) {
            val = 1;
        } else if (!lo) {
            val = *hi - 1;
        } else if (!hi) {
            val = *lo + 1;
        } else {
            if (!(*lo < *hi)) {
                return std::nullopt;
            }
            val = (*lo + *hi) / 2;
        }
        x.push_back(val);
    }
    for (const Vec& q : ineqs) {
        if (dot(q, x) <= 0) {
            throw InternalError("fm_feasible: witness fails an inequality");
        }
    }
    return x;
}

namespace {

using PatternMap =
    std::map<std::vector<IndexSet>, Vec>; // containment pattern -> witness

void collect(const RaySystem& rs, const Vec& w, PatternMap& out) {
    std::vector<IndexSet> cont = containment_pattern(rs, w);
    if (cont.empty()) {
        return;
    }
    std::sort(cont.begin(), cont.end());
    out.emplace(std::move(cont), w);
}

PatternMap chambers_1d(const RaySystem& rs) {
    PatternMap out;
    collect(rs, {Rat(1)}, out);
    collect(rs, {Rat(-1)}, out);
    return out;
}

PatternMap chambers_2d(const RaySystem& rs) {
    auto half = [](const Vec& v) {
        return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
    };
    // The explicit return type matters: it forces evaluation of the gmp
    // expression template before its operand temporaries go away.
    auto cross = [](const Vec& a, const Vec& b) -> Rat {
        return a[0] * b[1] - a[1] * b[0];
    };
    auto angular_less = [&](const Vec& a, const Vec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) {
            return ha < hb;
        }
        return cross(a, b) > 0;
    };

    // Both orientations of every ray line go into the sweep, so each
    // minimal sector between consecutive entries is free of ray lines and
    // its witness clears the conservative wall screen.
    std::vector<Vec> dirs;
    for (const Vec& v : rs.rays) {
        Vec d = primitive_direction(v);
        Vec nd = {-d[0], -d[1]};
        if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) {
            dirs.push_back(d);
        }
        if (std::find(dirs.begin(), dirs.end(), nd) == dirs.end()) {
            dirs.push_back(nd);
        }
    }
    std::vector<Vec> sorted_dirs;
    for (const Vec& d : dirs) {
        auto it = sorted_dirs.begin();
        while (it != sorted_dirs.end() && angular_less(*it, d)) {
            ++it;
        }
        sorted_dirs.insert(it, d);
    }

    PatternMap out;
    const size_t nd = sorted_dirs.size();
    for (size_t i = 0; i < nd; ++i) {
        const Vec& a = sorted_dirs[i];
        const Vec& b = sorted_dirs[(i + 1) % nd];
        Rat cr = cross(a, b);
        Vec w;
        if (cr > 0) {
            w = {a[0] + b[0], a[1] + b[1]};
        } else if (nd == 2) {
            // a single line splits the plane into two half-plane sectors
            w = {-a[1], a[0]}; // counterclockwise perpendicular
        } else {
            throw InternalError("chambers_2d: sector sweep out of order");
        }
        collect(rs, w, out);
    }
    return out;
}

PatternMap chambers_3d(const RaySystem& rs) {
    const int n = static_cast<int>(rs.rays.size());

    // One normal per distinct plane spanned by a pair of rays.
    std::vector<Vec> planes;
    std::set<Vec> seen;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const Vec& u = rs.rays[a];
            const Vec& v = rs.rays[b];
            Vec cr = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                      u[0] * v[1] - u[1] * v[0]};
            if (is_zero(cr)) {
                continue;
            }
            Vec key = primitive_direction(cr);
            Vec neg(key.size());
            for (size_t t = 0; t < key.size(); ++t) {
                neg[t] = -key[t];
            }
            if (std::lexicographical_compare(key.begin(), key.end(),
                                             neg.begin(), neg.end())) {
                key = neg;
            }
            if (seen.insert(key).second) {
                planes.push_back(cr);
            }
        }
    }

    PatternMap out;
    std::vector<Vec> ineqs;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == planes.size()) {
            if (auto w = fm_feasible(ineqs, 3)) {
                collect(rs, *w, out);
            }
            return;
        }
        for (int s : {1, -1}) {
            Vec q(3);
            for (int j = 0; j < 3; ++j) {
                q[j] = Rat(s) * planes[idx][j];
            }
            ineqs.push_back(std::move(q));
            if (fm_feasible(ineqs, 3)) {
                rec(idx + 1);
            }
            ineqs.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

ChamberFan enumerate_chambers(const RaySystem& rs) {
    if (rs.rays.empty()) {
        throw ValidationError("enumerate_chambers: no rays");
    }
    for (size_t j = 0; j < rs.rays.size(); ++j) {
        if (static_cast<int>(rs.rays[j].size()) != rs.r) {
            throw ValidationError("enumerate_chambers: ray dimension mismatch");
        }
        if (is_zero(rs.rays[j])) {
            throw GenericityError("enumerate_chambers: ray " +
                                  std::to_string(j + 1) + " is zero");
        }
    }

    PatternMap found;
    switch (rs.r) {
    case 1:
        found = chambers_1d(rs);
        break;
    case 2:
        found = chambers_2d(rs);
        break;
    case 3:
        found = chambers_3d(rs);
        break;
    default:
        throw ValidationError(
            "enumerate_chambers: full enumeration supports r <= 3 only");
    }

    ChamberFan fan;
    fan.rays = rs;
    for (auto& [pattern, witness] : found) {
        Chamber c;
        c.witness = witness;
        c.cones = pattern;
        fan.chambers.push_back(std::move(c));
    }
    for (size_t i = 1; i < fan.chambers.size(); ++i) {
        if (fan.chambers[i].cones == fan.chambers[i - 1].cones) {
            throw InternalError("enumerate_chambers: duplicate chamber");
        }
    }
    return fan;
}

} // namespace amplifiber
