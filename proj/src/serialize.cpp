#include "inflecta/serialize.hpp"

#include <fstream>
#include <stdexcept>

#include "inflecta/group.hpp"

namespace inflecta {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

double number_at(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number())
        bad(std::string(key) + " missing or not a number");
    return j[key].get<double>();
}

int int_at(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        bad(std::string(key) + " missing or not an integer");
    return j[key].get<int>();
}

} // namespace

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        bad("complex value is not a [re, im] pair");
    return cplx{j[0].get<double>(), j[1].get<double>()};
}

json curve_to_json(const HomPoly3& curve) {
    json coeffs = json::array();
    curve.for_each([&](int k, int m, int n, std::size_t idx) {
        const cplx c = curve.coeffs()[idx];
        if (c == cplx{0.0, 0.0}) return;
        coeffs.push_back(
            {{"k", k}, {"m", m}, {"n", n}, {"re", c.real()}, {"im", c.imag()}});
    });
    return json{{"degree", curve.degree()}, {"coeffs", std::move(coeffs)}};
}

HomPoly3 curve_from_json(const json& j) {
    const int degree = int_at(j, "degree");
    if (degree < 0) bad("degree is negative");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) bad("coeffs missing");
    HomPoly3 curve(degree);
    for (const json& entry : j["coeffs"]) {
        const int k = int_at(entry, "k");
        const int m = int_at(entry, "m");
        const int n = int_at(entry, "n");
        if (k < 0 || m < 0 || n < 0 || k + m + n != degree)
            bad("coeff exponents do not sum to the degree");
        curve.set(k, m, n, cplx{number_at(entry, "re"), number_at(entry, "im")});
    }
    return curve;
}

json point_to_json(const ProjPoint& p) {
    return json::array(
        {complex_to_json(p[0]), complex_to_json(p[1]), complex_to_json(p[2])});
}

ProjPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) bad("point is not a triple");
    return ProjPoint(complex_from_json(j[0]), complex_from_json(j[1]),
                     complex_from_json(j[2]));
}

json chart_to_json(const CoordChange& chart) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(complex_to_json(chart.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CoordChange chart_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) bad("chart is not a 3x3 matrix");
    std::array<cplx, 9> m{};
    for (int r = 0; r < 3; ++r) {
        if (!j[static_cast<std::size_t>(r)].is_array() ||
            j[static_cast<std::size_t>(r)].size() != 3)
            bad("chart row is not a triple");
        for (int c = 0; c < 3; ++c)
            m[static_cast<std::size_t>(3 * r + c)] =
                complex_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return CoordChange(m);
}

json fiber_to_json(const InflectionSet& set) {
    json points = json::array();
    for (const ProjPoint& p : set.points) points.push_back(point_to_json(p));
    return json{{"curve", curve_to_json(set.curve)},
                {"chart_change", chart_to_json(set.chart)},
                {"points", std::move(points)},
                {"residuals", set.residuals}};
}

InflectionSet fiber_from_json(const json& j) {
    if (!j.is_object() || !j.contains("curve") || !j.contains("chart_change") ||
        !j.contains("points") || !j.contains("residuals"))
        bad("fiber object is missing a field");
    std::vector<ProjPoint> points;
    for (const json& p : j["points"]) points.push_back(point_from_json(p));
    if (!j["residuals"].is_array() || j["residuals"].size() != points.size())
        bad("residuals do not match points");
    std::vector<double> residuals;
    for (const json& r : j["residuals"]) {
        if (!r.is_number()) bad("residual is not a number");
        residuals.push_back(r.get<double>());
    }
    return InflectionSet{curve_from_json(j["curve"]), std::move(points),
                         std::move(residuals), chart_from_json(j["chart_change"])};
}

json path_to_json(const CoeffPath& path, const std::string& provenance) {
    json waypoints = json::array();
    for (const auto& w : path.waypoints) {
        json wp = json::array();
        for (const cplx& c : w) wp.push_back(complex_to_json(c));
        waypoints.push_back(std::move(wp));
    }
    json out{{"degree", path.degree},
             {"closed", path.closed},
             {"waypoints", std::move(waypoints)}};
    if (!provenance.empty()) out["provenance"] = provenance;
    return out;
}

CoeffPath path_from_json(const json& j) {
    CoeffPath path;
    path.degree = int_at(j, "degree");
    if (!j.contains("closed") || !j["closed"].is_boolean()) bad("closed missing");
    path.closed = j["closed"].get<bool>();
    if (!j.contains("waypoints") || !j["waypoints"].is_array()) bad("waypoints missing");
    for (const json& wp : j["waypoints"]) {
        if (!wp.is_array()) bad("waypoint is not an array");
        std::vector<cplx> w;
        w.reserve(wp.size());
        for (const json& c : wp) w.push_back(complex_from_json(c));
        path.waypoints.push_back(std::move(w));
    }
    return path;
}

json permutation_to_json(const Permutation& p) { return json(p.images()); }

Permutation permutation_from_json(const json& j) {
    if (!j.is_array()) bad("permutation is not an image array");
    std::vector<int> images;
    images.reserve(j.size());
    for (const json& v : j) {
        if (!v.is_number_integer()) bad("permutation image is not an integer");
        images.push_back(v.get<int>());
    }
    return Permutation(std::move(images)); // validates bijectivity
}

json group_report(const std::vector<Permutation>& gens, int n) {
    json types = json::array();
    for (const Permutation& g : gens) types.push_back(cycle_type_string(cycle_type(g)));
    return json{{"order", group_order(gens).str()},
                {"transitive", is_transitive(gens, n)},
                {"two_transitive", is_2_transitive(gens, n)},
                {"symmetric", is_symmetric(gens, n)},
                {"generator_cycle_types", std::move(types)}};
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return json::parse(in); // throws nlohmann parse_error with position info
}

} // namespace inflecta
