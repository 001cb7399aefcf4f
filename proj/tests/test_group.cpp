#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "inflecta/group.hpp"
#include "inflecta/permutation.hpp"
#include "inflecta/rng.hpp"

using namespace inflecta;

namespace {

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i)
            images[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    return Permutation(images);
}

// ASL(2,3) acting on the nine points of the affine plane over F_3,
// point (a,b) indexed as 3a+b. Generated by the two unit translations
// and the two standard SL(2,3) matrices [[0,-1],[1,0]], [[1,1],[0,1]].
std::vector<Permutation> asl23_generators() {
    auto idx = [](int a, int b) { return 3 * ((a % 3 + 3) % 3) + ((b % 3 + 3) % 3); };
    std::vector<int> t1(9), t2(9), s(9), t(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const auto i = static_cast<std::size_t>(idx(a, b));
            t1[i] = idx(a + 1, b);
            t2[i] = idx(a, b + 1);
            s[i] = idx(-b, a);
            t[i] = idx(a + b, b);
        }
    return {Permutation(t1), Permutation(t2), Permutation(s), Permutation(t)};
}

std::vector<Permutation> symmetric_generators(int n) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    return {from_cycles(n, {{0, 1}}), from_cycles(n, {cyc})};
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.raw() % static_cast<std::uint64_t>(i + 1));
        std::swap(images[static_cast<std::size_t>(i)], images[j]);
    }
    return Permutation(images);
}

} // namespace

TEST_SUITE_BEGIN("permgroup");

TEST_CASE("permutation validation and basic operations") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);

    const Permutation id = Permutation::identity(5);
    CHECK(id.is_identity());
    CHECK(id.degree() == 5);

    const Permutation a = from_cycles(3, {{0, 1}});
    const Permutation b = from_cycles(3, {{1, 2}});
    // compose applies the right factor first: 0 -> b -> 0 -> a -> 1
    const Permutation ab = compose(a, b);
    CHECK(ab == from_cycles(3, {{0, 1, 2}}));
    const Permutation ba = compose(b, a);
    CHECK(ba == from_cycles(3, {{0, 2, 1}}));

    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(ab), ab).is_identity());
    CHECK(power(ab, 3).is_identity());
    CHECK(power(ab, 0).is_identity());
    CHECK(power(ab, -1) == inverse(ab));
    CHECK(power(ab, 2) == ba);
}

TEST_CASE("cycle types are descending and render compactly") {
    const Permutation g = from_cycles(24, {{0, 1, 2}, {3, 4, 5}, {7, 8}});
    const auto t = cycle_type(g);
    CHECK(t == std::vector<int>({3, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(std::accumulate(t.begin(), t.end(), 0) == 24);
    CHECK(cycle_type_string(t) == "3^2 2 1^16");
    CHECK(cycle_type_string(cycle_type(Permutation::identity(4))) == "1^4");
    CHECK(cycle_type_string(cycle_type(from_cycles(5, {{0, 1, 2, 3, 4}}))) == "5");
}

TEST_CASE("cycle type is invariant under conjugation") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5 + static_cast<int>(rng.raw() % 8);
        const Permutation g = random_permutation(n, rng);
        const Permutation h = random_permutation(n, rng);
        const Permutation conj = compose(compose(h, g), inverse(h));
        CHECK(cycle_type(conj) == cycle_type(g));
    }
}

TEST_CASE("factorials and symmetric group orders") {
    CHECK(factorial_big(0) == 1);
    CHECK(factorial_big(1) == 1);
    CHECK(factorial_big(5) == 120);
    CHECK(factorial_big(24).str() == "620448401733239439360000");

    for (int n = 2; n <= 7; ++n)
        CHECK(group_order(symmetric_generators(n)) == factorial_big(n));

    CHECK(group_order(symmetric_generators(24)).str() == "620448401733239439360000");
    CHECK(is_symmetric(symmetric_generators(24), 24));
}

TEST_CASE("schreier-sims matches exhaustive closure on small groups") {
    Rng rng(7);
    // fixed classics first
    const std::vector<std::pair<int, std::vector<Permutation>>> cases = {
        {4, {from_cycles(4, {{0, 1, 2}}), from_cycles(4, {{0, 1}, {2, 3}})}}, // A4
        {5, {from_cycles(5, {{0, 1, 2, 3, 4}}), from_cycles(5, {{1, 4}, {2, 3}})}}, // D5
        {6, {from_cycles(6, {{0, 1, 2, 3, 4, 5}})}},                          // C6
        {5, {from_cycles(5, {{0, 1, 2, 3, 4}}), from_cycles(5, {{0, 1, 2}})}}, // A5
        {7, {from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}), from_cycles(7, {{0, 1}})}}, // S7
    };
    const std::vector<BigInt> expected = {12, 10, 6, 60, 5040};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CHECK(group_order(cases[i].second) == expected[i]);
        CHECK(brute_force_order(cases[i].second, cases[i].first) == expected[i]);
    }
    // then random two-generator subgroups
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + static_cast<int>(rng.raw() % 4);
        const std::vector<Permutation> gens = {random_permutation(n, rng),
                                               random_permutation(n, rng)};
        CHECK(group_order(gens) == brute_force_order(gens, n));
    }
    CHECK(group_order({}) == 1);
    CHECK(group_order({Permutation::identity(6)}) == 1);
}

TEST_CASE("membership testing distinguishes subgroups") {
    const std::vector<Permutation> a4 = {from_cycles(4, {{0, 1, 2}}),
                                         from_cycles(4, {{0, 1}, {2, 3}})};
    PermGroup g(4, a4);
    CHECK(g.order() == 12);
    CHECK(g.contains(Permutation::identity(4)));
    CHECK(g.contains(from_cycles(4, {{1, 2, 3}})));
    CHECK(g.contains(from_cycles(4, {{0, 2}, {1, 3}})));
    CHECK(!g.contains(from_cycles(4, {{0, 1}})));
    CHECK(!g.contains(from_cycles(4, {{0, 1, 2, 3}})));

    PermGroup s5(5, symmetric_generators(5));
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(s5.contains(random_permutation(5, rng)));
}

TEST_CASE("affine special linear group over F_3: the order-216 oracle") {
    const auto gens = asl23_generators();
    PermGroup g(9, gens);
    CHECK(g.order() == 216);
    CHECK(g.order_decimal() == "216");
    CHECK(is_transitive(gens, 9));
    CHECK(is_2_transitive(gens, 9));
    CHECK(!is_symmetric(gens, 9));
    // 2-transitive yet transposition-free: no transposition may be a member
    CHECK(!g.contains(from_cycles(9, {{0, 1}})));
    CHECK(!g.contains(from_cycles(9, {{3, 7}})));
    // every generator product stays inside
    CHECK(g.contains(compose(gens[0], compose(gens[2], gens[3]))));
}

TEST_CASE("transitivity predicates on structured examples") {
    CHECK(!is_transitive({from_cycles(4, {{0, 1}})}, 4));
    CHECK(is_transitive({from_cycles(4, {{0, 1, 2, 3}})}, 4));
    CHECK(!is_2_transitive({from_cycles(4, {{0, 1, 2, 3}})}, 4)); // C4 transitive only
    CHECK(is_2_transitive(symmetric_generators(6), 6));
    const std::vector<Permutation> a5 = {from_cycles(5, {{0, 1, 2, 3, 4}}),
                                         from_cycles(5, {{0, 1, 2}})};
    CHECK(is_2_transitive(a5, 5)); // A5 is 2-transitive but not symmetric
    CHECK(!is_symmetric(a5, 5));
}

TEST_CASE("symmetric-group recognition: all hypotheses satisfied") {
    const auto g = symmetric_generators(6);
    // subgroup preserving {0,1,2,3} and 2-transitive on it
    const std::vector<Permutation> g1 = {from_cycles(6, {{0, 1}}),
                                         from_cycles(6, {{0, 1, 2, 3}})};
    const std::vector<int> m1 = {0, 1, 2, 3}; // 2*4 >= 6+2
    const auto v = lemma_act_check(g, g1, m1, from_cycles(6, {{0, 1}}), 6);
    CHECK(v.g_transitive);
    CHECK(v.g1_preserves_subset);
    CHECK(v.subset_size_bound);
    CHECK(v.g1_2transitive_on_subset);
    CHECK(v.witness_present);
    CHECK(v.witness_is_transposition);
    CHECK(v.witness_in_group);
    CHECK(v.hypotheses_all);
    CHECK(v.concludes_symmetric);
    CHECK(v.group_order_decimal == "720");
    CHECK(v.order_equals_m_factorial);
}

TEST_CASE("symmetric-group recognition: each hypothesis can fail alone") {
    const auto s6 = symmetric_generators(6);
    const std::vector<Permutation> g1_good = {from_cycles(6, {{0, 1}}),
                                              from_cycles(6, {{0, 1, 2, 3}})};
    const std::vector<int> m1_good = {0, 1, 2, 3};
    const auto witness = from_cycles(6, {{0, 1}});

    SUBCASE("subset one short of the size bound") {
        // 2*3 = 6 < 8: the bound needs at least (m+2)/2 points
        const std::vector<Permutation> g1 = {from_cycles(6, {{0, 1}}),
                                             from_cycles(6, {{0, 1, 2}})};
        const auto v = lemma_act_check(s6, g1, {0, 1, 2}, witness, 6);
        CHECK(v.g1_2transitive_on_subset);
        CHECK(!v.subset_size_bound);
        CHECK(!v.hypotheses_all);
        CHECK(!v.concludes_symmetric);
        // the order report is still filled in honestly
        CHECK(v.group_order_decimal == "720");
        CHECK(v.order_equals_m_factorial);
    }
    SUBCASE("ambient group not transitive") {
        const std::vector<Permutation> g_bad = {from_cycles(6, {{0, 1}}),
                                                from_cycles(6, {{0, 1, 2, 3}})};
        const auto v = lemma_act_check(g_bad, g1_good, m1_good, witness, 6);
        CHECK(!v.g_transitive);
        CHECK(!v.concludes_symmetric);
    }
    SUBCASE("subgroup moves points out of the subset") {
        const std::vector<Permutation> g1 = {from_cycles(6, {{0, 4}}),
                                             from_cycles(6, {{0, 1, 2, 3}})};
        const auto v = lemma_act_check(s6, g1, m1_good, witness, 6);
        CHECK(!v.g1_preserves_subset);
        CHECK(!v.concludes_symmetric);
    }
    SUBCASE("restriction merely transitive, not 2-transitive") {
        const std::vector<Permutation> g1 = {from_cycles(6, {{0, 1, 2, 3}})};
        const auto v = lemma_act_check(s6, g1, m1_good, witness, 6);
        CHECK(v.g1_preserves_subset);
        CHECK(!v.g1_2transitive_on_subset);
        CHECK(!v.concludes_symmetric);
    }
    SUBCASE("witness missing") {
        const auto v = lemma_act_check(s6, g1_good, m1_good, std::nullopt, 6);
        CHECK(!v.witness_present);
        CHECK(!v.witness_is_transposition);
        CHECK(!v.concludes_symmetric);
    }
    SUBCASE("witness not a transposition") {
        const auto v = lemma_act_check(s6, g1_good, m1_good, from_cycles(6, {{0, 1, 2}}), 6);
        CHECK(v.witness_present);
        CHECK(!v.witness_is_transposition);
        CHECK(!v.concludes_symmetric);
    }
    SUBCASE("witness outside the ambient group") {
        const std::vector<Permutation> a6 = {from_cycles(6, {{0, 1, 2, 3, 4}}),
                                             from_cycles(6, {{3, 4, 5}})};
        const std::vector<Permutation> g1 = {from_cycles(6, {{0, 1, 2}}),
                                             from_cycles(6, {{0, 1}, {2, 3}})};
        const auto v = lemma_act_check(a6, g1, m1_good, witness, 6);
        CHECK(v.g_transitive);
        CHECK(v.witness_is_transposition);
        CHECK(!v.witness_in_group);
        CHECK(!v.concludes_symmetric);
        CHECK(!v.order_equals_m_factorial); // |A6| = 360
    }
}

TEST_CASE("symmetric-group recognition at the exact size threshold") {
    // m = 8: the subset needs at least 5 points; check 5 passes and 4 fails
    const auto s8 = symmetric_generators(8);
    const std::vector<Permutation> g1_5 = {from_cycles(8, {{0, 1}}),
                                           from_cycles(8, {{0, 1, 2, 3, 4}})};
    const auto v5 = lemma_act_check(s8, g1_5, {0, 1, 2, 3, 4}, from_cycles(8, {{0, 1}}), 8);
    CHECK(v5.subset_size_bound);
    CHECK(v5.concludes_symmetric);
    CHECK(v5.group_order_decimal == "40320");

    const std::vector<Permutation> g1_4 = {from_cycles(8, {{0, 1}}),
                                           from_cycles(8, {{0, 1, 2, 3}})};
    const auto v4 = lemma_act_check(s8, g1_4, {0, 1, 2, 3}, from_cycles(8, {{0, 1}}), 8);
    CHECK(!v4.subset_size_bound);
    CHECK(!v4.concludes_symmetric);
}

TEST_SUITE_END();
