#pragma once

#include <string>

#include "json.hpp"

#include "amplifiber/brackets.hpp"
#include "amplifiber/jk.hpp"
#include "amplifiber/triangulate.hpp"

namespace amplifiber {

using nlohmann::json;

// Rationals cross the JSON boundary as canonical strings "p/q" (plain "p"
// when the denominator is 1); matrices as row-major arrays of such strings.
json rat_json(const Rat& x);
Rat rat_from_json(const json& j);

json vec_json(const Vec& v);
Vec vec_from_json(const json& j);

json mat_json(const Mat& m);
Mat mat_from_json(const json& j);

std::string chart_name(Chart c);
Chart chart_from_name(const std::string& name);

// {n, k, m, nodes, Z, Zperp}; Z is the normalized form used everywhere
// downstream.
json instance_json(const Instance& inst);

// Compact descriptor {n, k, m, nodes} used where a report references its
// instance without repeating the matrices.
json instance_descriptor_json(const Instance& inst);

// {Y, A, J, chart}
json frame_json(const FiberFrame& frame);

// {chart, r, forms: [{i, constant, normal[]}], signFlips[]}
json fiberform_json(const FiberForm& form);

// {r, rays[][], chambers: [{witness[], cones: [[i...]]}]}
json fan_json(const ChamberFan& fan);

// {instance, chamber, cells: [[j...]], canonicalValue: "p/q"}
json triangulation_json(const Instance& inst, int chamber,
                        const std::vector<IndexSet>& cells, const Rat& value);

// {instance, samples, minValue, violations[]}
json conjecture_report_json(const Instance& inst,
                            const ConjectureReport& rep);

} // namespace amplifiber
