// End-to-end acceptance gate. Each case pins one headline result of the
// engine with exact counts, orders, cycle types and tolerances; ctest runs
// them one by one with the runtime budget enforced as a per-case timeout.

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <string>
#include <vector>

#include <unistd.h>

#include "inflecta/errors.hpp"
#include "inflecta/experiment.hpp"
#include "inflecta/group.hpp"
#include "inflecta/loops.hpp"
#include "inflecta/poly.hpp"
#include "inflecta/solver.hpp"
#include "inflecta/tracker.hpp"

using namespace inflecta;
namespace fs = std::filesystem;

namespace {

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i)
            images[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    return Permutation(images);
}

double relative_gap(const HomPoly3& a, const HomPoly3& b) {
    const HomPoly3 diff = subtract(a, b);
    return diff.norm_inf() / std::max(1.0, std::max(a.norm_inf(), b.norm_inf()));
}

} // namespace

TEST_CASE("criterion 01 fiber counts") {
    for (int d : {3, 4, 5}) {
        const int expected = 3 * d * (d - 2);
        for (int i = 0; i < 20; ++i) {
            const std::uint64_t seed = static_cast<std::uint64_t>(d) * 1000 + i;
            CAPTURE(d);
            CAPTURE(seed);
            const HomPoly3 curve = random_smooth_curve(d, seed);
            const InflectionSet fib = inflection_points(curve, seed);
            CHECK(static_cast<int>(fib.points.size()) == expected);
            double worst = 0.0;
            for (double r : fib.residuals) worst = std::max(worst, r);
            CHECK(worst <= 1e-10);
        }
    }
}

TEST_CASE("criterion 02 degree 3 group order 216") {
    const ClaimOutcome out = run_claim("THM_MAIN_D3");
    CHECK(out.pass);
    CHECK(out.report.at("group").at("order") == "216");
    CHECK(out.report.at("group").at("transitive").get<bool>());
    CHECK(out.report.at("group").at("two_transitive").get<bool>());
    CHECK(out.report.at("loops_used").get<int>() <= 25);
    MESSAGE("loops used: ", out.report.at("loops_used").get<int>(), ", wall ms: ",
            out.report.at("wall_ms").get<double>());
}

TEST_CASE("criterion 03 degree 4 symmetric group") {
    const ClaimOutcome out = run_claim("THM_MAIN_D4");
    CHECK(out.pass);
    CHECK(out.report.at("group").at("order") == "620448401733239439360000");
    CHECK(out.report.at("group").at("order").get<std::string>() == factorial_big(24).str());
    CHECK(out.report.at("group").at("symmetric").get<bool>());
    CHECK(out.report.at("loops_used").get<int>() <= 50);

    // recognition criterion recomputed from the recorded permutations
    const json& crit = out.report.at("criterion");
    REQUIRE(crit.is_object());
    CHECK(crit.at("hypotheses_all").get<bool>());
    CHECK(crit.at("concludes_symmetric").get<bool>());
    CHECK(crit.at("order_equals_m_factorial").get<bool>());
    CHECK(crit.at("subgroup_generators_in_group").get<bool>());
    MESSAGE("loops used: ", out.report.at("loops_used").get<int>(), ", wall ms: ",
            out.report.at("wall_ms").get<double>());
}

TEST_CASE("criterion 04 nodal pencil local monodromy") {
    const ClaimOutcome out = run_claim("NODAL_CYCLES");
    CHECK(out.pass);
    CHECK(out.report.at("cycle_type") == "3^2 1^18");
    CHECK(out.report.at("square_cycle_type") == "3^2 1^18");
    CHECK(out.report.at("cube_is_identity").get<bool>());
    CHECK(out.report.at("half_radius_cycle_type") == "3^2 1^18");
}

TEST_CASE("criterion 05 double contact pencil transposition") {
    const ClaimOutcome out = run_claim("TWO_TUPLE_TRANSPOSITION");
    CHECK(out.pass);
    CHECK(out.report.at("cycle_type") == "2 1^22");
}

TEST_CASE("criterion 06 fermat pencil clusters") {
    const fs::path tmp =
        fs::temp_directory_path() / ("inflecta_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    const std::string csv = (tmp / "fermat_clusters.csv").string();

    const ClaimOutcome out = run_claim("FERMAT_CLUSTERS", csv);

    // the resolved coordinate-axis subfiber: 15 points in 5 clusters of 3,
    // the circle around u = 0 preserves every cluster and 3-cycles each
    const json& axis0 = out.report.at("axis0");
    CHECK(axis0.at("pass").get<bool>());
    CHECK(axis0.at("points").get<int>() == 15);
    CHECK(axis0.at("cycle_type") == "3^5");
    CHECK(axis0.at("clusters_preserved").get<bool>());
    CHECK(axis0.at("one_cycle_per_cluster").get<bool>());
    CHECK(axis0.at("discrete_matches_tracked").get<bool>());

    // behaviour over the remaining axes is reported, not asserted
    MESSAGE("axis1: ", out.report.at("axis1").dump());
    MESSAGE("axis2: ", out.report.at("axis2").dump());

    CHECK(fs::exists(csv));
    CHECK(fs::file_size(csv) > 0);
    const std::string strands = (tmp / "fermat_clusters_strands.csv").string();
    CHECK(fs::exists(strands));
    CHECK(fs::file_size(strands) > 0);

    // the whole 45-point fiber as simultaneously resolved simple points,
    // every pair separated beyond the strand-collision threshold
    const json& full = out.report.at("full_fiber");
    CHECK_MESSAGE(full.at("pass").get<bool>(), "full fiber report: ", full.dump());
    CHECK_MESSAGE(out.pass, "claim verdict with evidence: ", out.report.dump());

    std::error_code ec;
    fs::remove_all(tmp, ec);
}

TEST_CASE("criterion 07 hesse pencil") {
    const ClaimOutcome base = run_claim("HESSE_BASEPOINTS");
    CHECK(base.pass);
    CHECK(base.report.at("points_per_member").get<int>() == 9);
    CHECK(base.report.at("pairs_checked").get<int>() == 10);
    CHECK(base.report.at("max_pair_distance").get<double>() < 1e-8);

    const ClaimOutcome degen = run_claim("HESSE_DEGENERATE");
    CHECK(degen.pass);
    REQUIRE(degen.report.at("degenerate_members").size() == 4);
    for (const json& m : degen.report.at("degenerate_members")) {
        CHECK(m.at("singular").get<bool>());
        CHECK(m.at("gradient_rel").get<double>() < 1e-6);
    }
    for (const json& p : degen.report.at("smooth_probes"))
        CHECK_FALSE(p.at("singular").get<bool>());
}

TEST_CASE("criterion 08 klein quartic") {
    const ClaimOutcome out = run_claim("KLEIN_COUNT_AND_SYMMETRY");
    CHECK(out.pass);
    CHECK(out.report.at("count").get<int>() == 24);
    CHECK(out.report.at("max_residual").get<double>() <= 1e-10);
    CHECK(out.report.at("shift_order_three").get<bool>());
    CHECK(out.report.at("fixed_points_permutation") == out.report.at("fixed_points_direct"));
}

TEST_CASE("criterion 09 hessian factorization regression") {
    const ClaimOutcome out = run_claim("HESSIAN_CURVE2");
    CHECK(out.pass);
    CHECK(out.report.at("max_rel_error").get<double>() < 1e-12);
    CHECK(out.report.at("cases").size() == 15); // degrees 4, 5, 6 with 5 samples each
}

TEST_CASE("criterion 10 property suites") {
    // Hessian determinant is covariant under projective coordinate changes
    for (int d : {3, 4, 5}) {
        const HomPoly3 p = random_smooth_curve(d, 9000 + static_cast<std::uint64_t>(d));
        const CoordChange a = CoordChange::random_unitary(500 + static_cast<std::uint64_t>(d));
        const HomPoly3 lhs = hessian_det(change_coords(p, a));
        const HomPoly3 rhs = scale(change_coords(hessian_det(p), a), a.det() * a.det());
        CAPTURE(d);
        CHECK(relative_gap(lhs, rhs) < 1e-10);
    }

    // tracked loop actions compose and invert like the loops themselves
    const HomPoly3 base = random_smooth_curve(3, 77);
    const InflectionSet fiber = inflection_points(base, 77);
    const CoeffPath first = random_loop(base, 1);
    const CoeffPath second = random_loop(base, 2);
    const Permutation p1 = monodromy_permutation(first, fiber);
    const Permutation p2 = monodromy_permutation(second, fiber);
    CoeffPath joined;
    joined.degree = 3;
    joined.closed = true;
    joined.waypoints = first.waypoints;
    joined.waypoints.insert(joined.waypoints.end(), second.waypoints.begin() + 1,
                            second.waypoints.end());
    CHECK(monodromy_permutation(joined, fiber) == compose(p2, p1));
    CHECK(monodromy_permutation(reversed(first), fiber) == inverse(p1));

    // a tracked endpoint fiber agrees with a fresh solve of the end curve
    CoeffPath open_arc;
    open_arc.degree = 3;
    open_arc.closed = false;
    open_arc.waypoints.assign(first.waypoints.begin(),
                              first.waypoints.begin() + first.waypoints.size() / 2 + 1);
    REQUIRE(open_arc.waypoints.size() >= 2);
    const TrackResult tracked = track_path(open_arc, fiber);
    HomPoly3 end_curve(3);
    end_curve.coeffs() = open_arc.waypoints.back();
    const InflectionSet fresh = inflection_points(end_curve, 123);
    const Permutation matching = match_points(tracked.end_points, fresh.points);
    double worst = 0.0;
    for (std::size_t i = 0; i < tracked.end_points.size(); ++i)
        worst = std::max(worst, fs_distance(tracked.end_points[i],
                                            fresh.points[static_cast<std::size_t>(
                                                matching(static_cast<int>(i)))]));
    CHECK(worst < 1e-6);

    // exact group orders agree with brute-force enumeration on small degrees
    const std::vector<std::vector<Permutation>> small_groups = {
        {from_cycles(4, {{0, 1, 2, 3}}), from_cycles(4, {{0, 1}})},          // S4
        {from_cycles(4, {{0, 1, 2}}), from_cycles(4, {{1, 2, 3}})},          // A4
        {from_cycles(5, {{0, 1, 2, 3, 4}}), from_cycles(5, {{1, 4}, {2, 3}})}, // D5
        {from_cycles(6, {{0, 1, 2, 3, 4, 5}})},                              // C6
        {from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}), from_cycles(7, {{0, 1}})}, // S7
    };
    for (const auto& gens : small_groups)
        CHECK(group_order(gens) == brute_force_order(gens, gens.front().degree()));

    // symmetric-group recognition at the subset-size boundary 2*m1 >= m+2:
    // an S3 subgroup on 3 of 4 points meets the bound and concludes
    const std::vector<Permutation> s4 = {from_cycles(4, {{0, 1, 2, 3}}),
                                         from_cycles(4, {{0, 1}})};
    const std::vector<Permutation> s3_on_subset = {from_cycles(4, {{0, 1}}),
                                                   from_cycles(4, {{0, 1, 2}})};
    const Permutation witness4 = from_cycles(4, {{0, 1}});
    const auto meets = lemma_act_check(s4, s3_on_subset, {0, 1, 2}, witness4, 4);
    CHECK(meets.subset_size_bound);
    CHECK(meets.hypotheses_all);
    CHECK(meets.concludes_symmetric);
    CHECK(meets.group_order_decimal == "24");
    CHECK(meets.order_equals_m_factorial);

    // one point fewer (2*2 = 4 < 6) and nothing is concluded
    const std::vector<Permutation> s2_on_subset = {from_cycles(4, {{0, 1}})};
    const auto below = lemma_act_check(s4, s2_on_subset, {0, 1}, witness4, 4);
    CHECK(below.g1_2transitive_on_subset);
    CHECK_FALSE(below.subset_size_bound);
    CHECK_FALSE(below.concludes_symmetric);

    // on 3 points the bound needs the whole set: 2*2 = 4 < 5 fails,
    // the full subset 2*3 = 6 >= 5 concludes
    const std::vector<Permutation> s3 = {from_cycles(3, {{0, 1, 2}}), from_cycles(3, {{0, 1}})};
    const Permutation witness3 = from_cycles(3, {{0, 1}});
    const auto s3_below = lemma_act_check(s3, {from_cycles(3, {{0, 1}})}, {0, 1}, witness3, 3);
    CHECK_FALSE(s3_below.subset_size_bound);
    CHECK_FALSE(s3_below.concludes_symmetric);
    const auto s3_full = lemma_act_check(s3, s3, {0, 1, 2}, witness3, 3);
    CHECK(s3_full.subset_size_bound);
    CHECK(s3_full.concludes_symmetric);
    CHECK(s3_full.group_order_decimal == "6");
}
