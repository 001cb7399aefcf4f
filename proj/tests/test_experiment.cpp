// Experiment orchestration and the command-line surface: JSON round trips for
// every on-disk artifact, configuration resolution, certificate assembly and
// replay, determinism across thread counts, the claim registry, and smoke
// runs of the built binary checking its documented exit codes.

#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "inflecta/errors.hpp"
#include "inflecta/experiment.hpp"
#include "inflecta/loops.hpp"
#include "inflecta/serialize.hpp"
#include "inflecta/solver.hpp"

using namespace inflecta;
namespace fs = std::filesystem;

namespace {

// exit status of the built binary; args may carry shell redirections
int run_cli(const std::string& args) {
    const std::string cmd = std::string(INFLECTA_CLI_BINARY) + " " + args;
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("inflecta_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double coeff_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("curves, fibers, paths and permutations survive a JSON round trip") {
    const HomPoly3 curve = random_smooth_curve(4, 11);
    const HomPoly3 curve2 = curve_from_json(curve_to_json(curve));
    CHECK(curve2.degree() == 4);
    CHECK(approx_equal(curve, curve2, 1e-15));

    const InflectionSet fiber = inflection_points(random_smooth_curve(3, 5), 5);
    const InflectionSet fiber2 = fiber_from_json(fiber_to_json(fiber));
    REQUIRE(fiber2.points.size() == fiber.points.size());
    for (std::size_t i = 0; i < fiber.points.size(); ++i)
        CHECK(fs_distance(fiber2.points[i], fiber.points[i]) < 1e-14);
    CHECK(fiber2.residuals == fiber.residuals); // doubles round-trip exactly
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(fiber2.chart.at(r, c) == fiber.chart.at(r, c));

    const CoeffPath loop = random_loop(curve, 3);
    const json pj = path_to_json(loop, "random");
    CHECK(pj.at("provenance") == "random");
    const CoeffPath loop2 = path_from_json(pj);
    CHECK(loop2.closed);
    CHECK(loop2.degree == loop.degree);
    REQUIRE(loop2.waypoints.size() == loop.waypoints.size());
    CHECK(loop2.waypoints.front() == loop.waypoints.front());
    CHECK(loop2.waypoints.back() == loop.waypoints.back());

    const Permutation p(std::vector<int>{2, 0, 1, 3});
    CHECK(permutation_from_json(permutation_to_json(p)) == p);
}

TEST_CASE("malformed JSON artifacts are rejected as invalid arguments") {
    CHECK_THROWS_AS(curve_from_json(json{{"coeffs", json::array()}}), std::invalid_argument);

    json bad_curve = curve_to_json(fermat(3));
    bad_curve["coeffs"][0]["k"] = 7; // exponents no longer sum to the degree
    CHECK_THROWS_AS(curve_from_json(bad_curve), std::invalid_argument);

    CHECK_THROWS_AS(complex_from_json(json::array({1.0})), std::invalid_argument);
    CHECK_THROWS_AS(permutation_from_json(json::array({0, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(fiber_from_json(json{{"points", json::array()}}), std::invalid_argument);
    CHECK_THROWS_AS(path_from_json(json{{"degree", 3}}), std::invalid_argument);
}

TEST_CASE("experiment configuration round-trips with overrides intact") {
    ExperimentConfig cfg;
    cfg.degree = 4;
    cfg.seed = 9;
    cfg.num_random_loops = 7;
    cfg.bypasses.push_back({"nodal", 3, 2e-4});
    cfg.bypasses.push_back({"two-tuple", 1, 0.0});
    cfg.track.newton_tol = 1e-12;
    cfg.track.initial_step = 5e-3;
    cfg.output_path = "cert.json";

    const ExperimentConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.degree == 4);
    CHECK(back.seed == 9);
    CHECK(back.num_random_loops == 7);
    REQUIRE(back.bypasses.size() == 2);
    CHECK(back.bypasses[0].family == "nodal");
    CHECK(back.bypasses[0].seed == 3);
    CHECK(back.bypasses[0].radius == 2e-4);
    CHECK(back.bypasses[1].family == "two-tuple");
    CHECK(back.track.newton_tol == 1e-12);
    CHECK(back.track.initial_step == 5e-3);
    CHECK(back.output_path == "cert.json");

    // loop budget defaults depend on the degree
    CHECK(config_from_json(json{{"degree", 3}, {"seed", 1}}).num_random_loops == 25);
    CHECK(config_from_json(json{{"degree", 5}, {"seed", 1}}).num_random_loops == 50);

    CHECK_THROWS_AS(config_from_json(json{{"seed", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(json{{"degree", 2}, {"seed", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(json{{"degree", 3}, {"seed", 1}, {"track", json{{"step_contract", 1.5}}}}),
                    std::invalid_argument);
}

TEST_CASE("bypass families resolve to the documented pencils") {
    const FamilyPencil nodal = family_pencil("nodal", 5, 3);
    CHECK(nodal.center.degree() == 5);
    CHECK(coeff_norm(nodal.direction) == doctest::Approx(1.0));
    CHECK(nodal.default_radius == doctest::Approx(5e-4));
    CHECK(std::abs(nodal.direction[HomPoly3::index(5, 0, 0)] - cplx{1.0, 0.0}) < 1e-15);

    const FamilyPencil fu = family_pencil("fermat", 4, 1);
    CHECK(approx_equal(fu.center, fermat(4), 1e-15));
    CHECK(std::abs(fu.direction[HomPoly3::index(4, 2, 0)] - cplx{1.0, 0.0}) < 1e-15);
    CHECK(fu.default_radius == doctest::Approx(1e-3));

    const FamilyPencil tt = family_pencil("two-tuple", 4, 1);
    CHECK(tt.center.degree() == 4);
    CHECK(tt.default_radius > 0.0);

    CHECK_THROWS_AS(family_pencil("two-tuple", 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(family_pencil("elliptic", 4, 1), std::invalid_argument);
}

TEST_CASE("a bypass-only run measures the local pencil action") {
    ExperimentConfig cfg;
    cfg.degree = 4;
    cfg.seed = 4;
    cfg.num_random_loops = 0;
    cfg.bypasses.push_back({"nodal", 1, 0.0});

    const MonodromyCertificate cert = run_monodromy(cfg);
    REQUIRE(cert.loops.size() == 1);
    CHECK(cert.loops[0].kind == "bypass");
    CHECK(cert.loops[0].family == "nodal");
    CHECK(cert.loops[0].cycle_type == "3^2 1^18");
    CHECK(cert.group.at("order").get<std::string>() == "3");
    CHECK(cert.criterion.is_null());
    CHECK(cert.failures.empty());

    // no loops at all is not a runnable experiment
    ExperimentConfig empty;
    empty.num_random_loops = 0;
    CHECK_THROWS_AS(run_monodromy(empty), std::invalid_argument);
}

TEST_CASE("certificates round-trip, replay green and flag corruption by loop index") {
    ExperimentConfig cfg;
    cfg.degree = 3;
    cfg.seed = 77;
    const MonodromyCertificate cert = run_monodromy(cfg);
    CHECK(cert.group.at("order").get<std::string>() == "216");
    REQUIRE(!cert.loops.empty());

    const json cj = certificate_to_json(cert);
    const MonodromyCertificate back = certificate_from_json(cj);
    REQUIRE(back.loops.size() == cert.loops.size());
    for (std::size_t i = 0; i < cert.loops.size(); ++i)
        CHECK(back.loops[i].permutation == cert.loops[i].permutation);
    CHECK(back.group == cert.group);
    CHECK(approx_equal(back.base_curve, cert.base_curve, 1e-14));

    const json rep = replay_certificate(cj, 1);
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("retracked").get<int>() == 1);

    // a rotated image array is still a permutation, but not the recorded one
    json rotated = cj;
    const json img = rotated["loops"][0]["permutation"];
    json rot = json::array();
    for (std::size_t i = 0; i < img.size(); ++i) rot.push_back(img[(i + 1) % img.size()]);
    rotated["loops"][0]["permutation"] = rot;
    const json bad_rep = replay_certificate(rotated, 1);
    CHECK_FALSE(bad_rep.at("pass").get<bool>());
    bool names_loop_zero = false;
    for (const json& c : bad_rep.at("checks"))
        if (!c.at("pass").get<bool>() && c.contains("detail") &&
            c["detail"].contains("loop_index")) {
            CHECK(c["detail"]["loop_index"].get<int>() == 0);
            names_loop_zero = true;
            break;
        }
    CHECK(names_loop_zero);

    // a non-bijective image array does not even parse
    json broken = cj;
    broken["loops"][0]["permutation"][0] = broken["loops"][0]["permutation"][1];
    bool threw = false;
    try {
        certificate_from_json(broken);
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("loop 0") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("certificates are identical for any thread count") {
    const char* saved = std::getenv("INFLECTA_THREADS");
    const std::string saved_value = saved ? saved : "";

    ExperimentConfig cfg;
    cfg.degree = 3;
    cfg.seed = 77;
    ::setenv("INFLECTA_THREADS", "1", 1);
    json serial = certificate_to_json(run_monodromy(cfg));
    ::setenv("INFLECTA_THREADS", "3", 1);
    json threaded = certificate_to_json(run_monodromy(cfg));
    if (saved)
        ::setenv("INFLECTA_THREADS", saved_value.c_str(), 1);
    else
        ::unsetenv("INFLECTA_THREADS");

    serial.erase("wall_ms");
    threaded.erase("wall_ms");
    CHECK(serial == threaded);
}

TEST_CASE("the claim registry is well formed and closed under dispatch") {
    const auto& reg = claim_registry();
    CHECK(reg.size() == 10);
    std::set<std::string> ids;
    for (const Claim& c : reg) {
        CHECK_FALSE(c.id.empty());
        CHECK_FALSE(c.description.empty());
        CHECK(c.recipe.contains("experiment"));
        ids.insert(c.id);
    }
    CHECK(ids.size() == reg.size());
    CHECK(ids.count("THM_MAIN_D3") == 1);
    CHECK(ids.count("FERMAT_CLUSTERS") == 1);
    CHECK_THROWS_AS(run_claim("NOT_A_CLAIM"), std::invalid_argument);
}

TEST_CASE("the fast registered claims pass") {
    for (const char* id :
         {"HESSIAN_CURVE2", "HESSE_DEGENERATE", "HESSE_BASEPOINTS", "KLEIN_COUNT_AND_SYMMETRY"}) {
        const ClaimOutcome out = run_claim(id);
        CHECK_MESSAGE(out.pass, id);
        CHECK(out.report.at("claim") == id);
        CHECK(out.report.at("pass").get<bool>() == out.pass);
    }
}

TEST_CASE("single bypass reports carry the cycle structure") {
    const json nodal = run_bypass("nodal", 4, 1, 0.0);
    CHECK(nodal.at("cycle_type") == "3^2 1^18");
    CHECK(nodal.at("square_cycle_type") == "3^2 1^18");
    CHECK(nodal.at("cube_is_identity").get<bool>());
    CHECK(nodal.at("points").get<int>() == 24);

    const json tt = run_bypass("two-tuple", 4, 1, 0.0);
    CHECK(tt.at("cycle_type") == "2 1^22");
}

TEST_CASE("the binary exposes the documented commands and exit codes") {
    TempDir tmp;

    const std::string fiber = tmp.file("fiber.json");
    CHECK(run_cli("solve --degree 3 --curve fermat --out " + fiber + " >/dev/null") == 0);
    CHECK(read_json_file(fiber).at("points").size() == 9);

    CHECK(run_cli("solve --degree 4 --curve fermat >/dev/null 2>&1") == 3);
    CHECK(run_cli("solve --degree 2 >/dev/null 2>&1") == 1);

    const std::string bypass_report = tmp.file("bypass.json");
    CHECK(run_cli("bypass --family nodal --degree 4 --out " + bypass_report + " >/dev/null") == 0);
    CHECK(read_json_file(bypass_report).at("cycle_type") == "3^2 1^18");

    const std::string listing = tmp.file("claims.txt");
    CHECK(run_cli("verify > " + listing) == 0);
    CHECK(slurp(listing).find("THM_MAIN_D3") != std::string::npos);
    CHECK(run_cli("verify NOT_A_CLAIM >/dev/null 2>&1") == 1);
    CHECK(run_cli("verify HESSIAN_CURVE2 >/dev/null 2>&1") == 0);

    const std::string cert = tmp.file("cert.json");
    CHECK(run_cli("monodromy --degree 3 --seed 77 --out " + cert + " >/dev/null") == 0);
    CHECK(run_cli("replay " + cert + " >/dev/null") == 0);

    json corrupted = read_json_file(cert);
    const json img = corrupted["loops"][0]["permutation"];
    json rot = json::array();
    for (std::size_t i = 0; i < img.size(); ++i) rot.push_back(img[(i + 1) % img.size()]);
    corrupted["loops"][0]["permutation"] = rot;
    const std::string bad_cert = tmp.file("cert_bad.json");
    write_json_file(corrupted, bad_cert);
    CHECK(run_cli("replay " + bad_cert + " >/dev/null 2>&1") == 2);

    CHECK(run_cli("--help >/dev/null") == 0);
    CHECK(run_cli("solve --no-such-flag >/dev/null 2>&1") == 1);
}

} // TEST_SUITE
