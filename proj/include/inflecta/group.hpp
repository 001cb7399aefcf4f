#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "inflecta/permutation.hpp"

namespace inflecta {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial_big(int n);

// Base and strong generating set built by deterministic (non-randomized)
// Schreier-Sims. New base points are chosen greedily: the point lying in the
// largest orbit of the generators active at that level (smallest index on
// ties), so the construction is reproducible.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return n_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<int>& base() const { return base_; }

    const BigInt& order() const { return order_; }
    std::string order_decimal() const { return order_.str(); }

    bool contains(const Permutation& g) const;

private:
    struct Level {
        int base_point = -1;
        std::vector<Permutation> gens;          // strong generators at this level
        std::vector<int> orbit;                 // discovery order
        std::vector<int> transversal_of;        // point -> index into transversal, -1 outside
        std::vector<Permutation> transversal;   // u with u(base_point) = point
    };

    void rebuild_orbit(std::size_t li);
    void add_generator_at(const Permutation& g, std::size_t level);
    // fixpoint pass: rebuild orbits, verify Schreier generators deepest level
    // first, push stalled residues down, until every condition holds
    void build();
    // returns identity residue iff g is in the group generated so far
    Permutation sift(const Permutation& g) const;
    static int greedy_base_point(const std::vector<Permutation>& gens, int n,
                                 const std::vector<int>& forbidden);

    int n_;
    std::vector<Permutation> gens_;
    std::vector<Level> levels_;
    std::vector<int> base_;
    BigInt order_;
};

BigInt group_order(const std::vector<Permutation>& gens);

bool is_transitive(const std::vector<Permutation>& gens, int n);
bool is_2_transitive(const std::vector<Permutation>& gens, int n);
bool is_symmetric(const std::vector<Permutation>& gens, int n);

// independent oracle: closure enumeration, refuses to run above degree 7
BigInt brute_force_order(const std::vector<Permutation>& gens, int n);

// Checks the hypotheses of the symmetric-group recognition criterion: a
// transitive G on m points, a subgroup G1 preserving a subset M1 with
// 2|M1| >= m+2 whose restriction to M1 is 2-transitive, and a transposition
// witness in G. When every hypothesis holds the conclusion G = S_m is
// recorded, cross-checked against the exact order m!.
struct SubgroupCriterionVerdict {
    bool g_transitive = false;
    bool g1_preserves_subset = false;
    bool subset_size_bound = false;
    bool g1_2transitive_on_subset = false;
    bool witness_present = false;
    bool witness_is_transposition = false;
    bool witness_in_group = false;
    bool hypotheses_all = false;
    bool concludes_symmetric = false;
    std::string group_order_decimal;
    bool order_equals_m_factorial = false;
};

SubgroupCriterionVerdict lemma_act_check(const std::vector<Permutation>& g_gens,
                                         const std::vector<Permutation>& g1_gens,
                                         const std::vector<int>& m1,
                                         const std::optional<Permutation>& witness,
                                         int m);

} // namespace inflecta
