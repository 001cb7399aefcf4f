#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inflecta/group.hpp"
#include "inflecta/loops.hpp"
#include "inflecta/serialize.hpp"
#include "inflecta/solver.hpp"
#include "inflecta/tracker.hpp"

namespace inflecta {

// One pencil bypass attached to a monodromy run, resolved by family name at
// the run's degree. radius is the pencil-parameter magnitude (|t|, |v| or |u|
// as the family defines it); nonpositive picks the family default.
struct BypassRequest {
    std::string family; // "nodal", "two-tuple" or "fermat"
    std::uint64_t seed = 1;
    double radius = 0.0;
};

// Inputs of a monodromy run. Random loops may be dropped entirely when at
// least one bypass is requested; a bypass-only run measures local monodromy.
struct ExperimentConfig {
    int degree = 3;
    std::uint64_t seed = 1;
    int num_random_loops = 25;
    std::vector<BypassRequest> bypasses;
    TrackOptions track;
    std::string output_path; // empty means the caller handles persistence
};

json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const json& j);

// Pencil geometry behind a named bypass family at a given degree.
struct FamilyPencil {
    HomPoly3 center;
    std::vector<cplx> direction; // unit vector in the coefficient layout
    double default_radius = 0.0; // pencil-parameter magnitude
};

// "nodal": the degree-d nodal pencil around t = 0.
// "two-tuple": degree 4 only, the double-inflection pencil around v = 0.
// "fermat": the u-pencil around the Fermat curve.
FamilyPencil family_pencil(const std::string& family, int degree, std::uint64_t seed);

struct LoopRecord {
    std::string kind;       // "random" or "bypass"
    std::uint64_t seed = 0; // the seed that actually produced the loop
    std::string family;     // bypasses only
    double radius = 0.0;    // bypasses only: effective pencil radius
    Permutation permutation = Permutation::identity(0);
    std::string cycle_type;
};

struct LoopFailure {
    std::string kind;
    std::uint64_t seed = 0;
    std::string family;
    std::string error;
};

// Evidence bundle of one monodromy run: everything needed to audit the group
// claim offline. Group verdicts are recomputable from the stored permutations
// alone; loops are re-trackable from their provenance plus the base fiber.
struct MonodromyCertificate {
    ExperimentConfig config;
    HomPoly3 base_curve = HomPoly3(0);
    InflectionSet base_fiber{HomPoly3(0), {}, {}, CoordChange::identity()};
    std::vector<LoopRecord> loops;
    std::vector<LoopFailure> failures;
    json group;     // group_report of the recorded permutations
    json criterion; // symmetric-group criterion verdict, or null
    double wall_ms = 0.0;
    long track_steps = 0;
    long track_rejections = 0;
};

json certificate_to_json(const MonodromyCertificate& cert);
MonodromyCertificate certificate_from_json(const json& j);

// Builds the base fiber, runs the requested bypasses and then random loops
// (early stop once the group is S_n for d >= 4, or reaches order 216 at
// d = 3), and assembles the certificate. Loops run in fixed-size waves via
// parallel_for; the certificate content is identical for any thread count.
// Writes to config.output_path when nonempty.
MonodromyCertificate run_monodromy(const ExperimentConfig& cfg);

// Subgroup-criterion verdict for the recorded permutations, or json(nullptr)
// when not applicable (degree < 4 or group not yet symmetric). The point
// subset is the first (m+2)/2 indices, its 2-transitive subgroup is generated
// by a transposition and a cycle on that subset (membership in the big group
// is checked explicitly), and the witness transposition is the first recorded
// permutation of cycle type {2, 1^(m-2)} if any.
json symmetric_criterion_report(const std::vector<Permutation>& perms, int degree);

// Recomputes the group analysis from the stored permutations and re-tracks
// the first retrack_loops loops from provenance, comparing images exactly.
// Returns {"pass": bool, "checks": [...]} with one entry per verification.
json replay_certificate(const json& cert, int retrack_loops = 1);

// Local monodromy of one pencil bypass, measured from the circle entry curve
// itself: reports the cycle type of the action, of its square, and whether
// its cube is the identity. radius as in BypassRequest (nonpositive picks
// the family default).
json run_bypass(const std::string& family, int degree, std::uint64_t seed, double radius = 0.0);

// ---- claim registry ----

struct Claim {
    std::string id;
    std::string description;
    json recipe; // experiment name plus parameters and expectations
};

const std::vector<Claim>& claim_registry();

struct ClaimOutcome {
    bool pass = false;
    json report;
};

// Runs the experiment bound to the claim id and compares against the
// registered expectations. Unknown ids throw std::invalid_argument. When
// csv_path is nonempty, claims with plot support (cluster diameters versus
// pencil radius, strand positions versus circle angle) also write CSV there.
ClaimOutcome run_claim(const std::string& id, const std::string& csv_path = "");

} // namespace inflecta
