#include "amplifiber/json_io.hpp"

#include "amplifiber/errors.hpp"

namespace amplifiber {

json rat_json(const Rat& x) { return rat_str(x); }

Rat rat_from_json(const json& j) {
    if (!j.is_string()) {
        throw ValidationError("expected a rational string");
    }
    return rat_parse(j.get<std::string>());
}

json vec_json(const Vec& v) {
    json out = json::array();
    for (const Rat& x : v) {
        out.push_back(rat_json(x));
    }
    return out;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) {
        throw ValidationError("expected an array of rational strings");
    }
    Vec v;
    for (const json& e : j) {
        v.push_back(rat_from_json(e));
    }
    return v;
}

json mat_json(const Mat& m) {
    json out = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        out.push_back(vec_json(m.row(r)));
    }
    return out;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError("expected a non-empty array of matrix rows");
    }
    std::vector<Vec> rows;
    for (const json& e : j) {
        rows.push_back(vec_from_json(e));
        if (rows.back().size() != rows.front().size()) {
            throw ValidationError("matrix rows have unequal lengths");
        }
    }
    return mat_from_rows(rows);
}

std::string chart_name(Chart c) {
    switch (c) {
    case Chart::Polytope:
        return "polytope";
    case Chart::Conjugate:
        return "conjugate";
    case Chart::General:
        return "general";
    }
    throw InternalError("chart_name: unhandled chart");
}

Chart chart_from_name(const std::string& name) {
    if (name == "polytope") {
        return Chart::Polytope;
    }
    if (name == "conjugate") {
        return Chart::Conjugate;
    }
    if (name == "general") {
        return Chart::General;
    }
    throw ValidationError("unknown chart name: " + name);
}

json instance_json(const Instance& inst) {
    json out;
    out["n"] = inst.n;
    out["k"] = inst.k;
    out["m"] = inst.m;
    out["nodes"] = vec_json(inst.nodes);
    out["Z"] = mat_json(inst.Z);
    out["Zperp"] = mat_json(inst.Zperp);
    return out;
}

json instance_descriptor_json(const Instance& inst) {
    json out;
    out["n"] = inst.n;
    out["k"] = inst.k;
    out["m"] = inst.m;
    out["nodes"] = vec_json(inst.nodes);
    return out;
}

json frame_json(const FiberFrame& frame) {
    json out;
    out["Y"] = mat_json(frame.Y);
    out["A"] = mat_json(frame.A);
    out["J"] = frame.J;
    out["chart"] = chart_name(frame.chart);
    return out;
}

json fiberform_json(const FiberForm& form) {
    json out;
    out["chart"] = chart_name(form.chart);
    out["r"] = form.r;
    json forms = json::array();
    for (const AffineHyperplane& h : form.forms) {
        json f;
        f["i"] = h.index;
        f["constant"] = rat_json(h.constant);
        f["normal"] = vec_json(h.normal);
        forms.push_back(std::move(f));
    }
    out["forms"] = std::move(forms);
    out["signFlips"] = form.sign_flips;
    return out;
}

json fan_json(const ChamberFan& fan) {
    json out;
    out["r"] = fan.rays.r;
    json rays = json::array();
    for (const Vec& ray : fan.rays.rays) {
        rays.push_back(vec_json(ray));
    }
    out["rays"] = std::move(rays);
    json chambers = json::array();
    for (const Chamber& c : fan.chambers) {
        json ch;
        ch["witness"] = vec_json(c.witness);
        ch["cones"] = c.cones;
        chambers.push_back(std::move(ch));
    }
    out["chambers"] = std::move(chambers);
    return out;
}

json triangulation_json(const Instance& inst, int chamber,
                        const std::vector<IndexSet>& cells,
                        const Rat& value) {
    json out;
    out["instance"] = instance_descriptor_json(inst);
    out["chamber"] = chamber;
    out["cells"] = cells;
    out["canonicalValue"] = rat_json(value);
    return out;
}

json conjecture_report_json(const Instance& inst,
                            const ConjectureReport& rep) {
    json out;
    out["instance"] = instance_descriptor_json(inst);
    out["samples"] = rep.samples;
    out["minValue"] = rep.has_min ? rat_json(rep.min_value) : json(nullptr);
    json viols = json::array();
    for (const ConjectureViolation& v : rep.violations) {
        json e;
        e["sample"] = v.sample;
        e["J"] = v.J;
        e["value"] = rat_json(v.value);
        viols.push_back(std::move(e));
    }
    out["violations"] = std::move(viols);
    return out;
}

} // namespace amplifiber
