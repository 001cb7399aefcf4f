#include "inflecta/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace inflecta {

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw std::invalid_argument("Permutation: images are not a bijection");
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(static_cast<std::size_t>(a.degree()));
    for (int i = 0; i < a.degree(); ++i) im[static_cast<std::size_t>(i)] = a(b(i));
    return Permutation(std::move(im));
}

Permutation inverse(const Permutation& a) {
    std::vector<int> im(static_cast<std::size_t>(a.degree()));
    for (int i = 0; i < a.degree(); ++i) im[static_cast<std::size_t>(a(i))] = i;
    return Permutation(std::move(im));
}

Permutation power(const Permutation& a, int e) {
    Permutation r = Permutation::identity(a.degree());
    Permutation base = e >= 0 ? a : inverse(a);
    int k = e >= 0 ? e : -e;
    while (k > 0) {
        if (k & 1) r = compose(base, r);
        base = compose(base, base);
        k >>= 1;
    }
    return r;
}

std::vector<int> cycle_type(const Permutation& a) {
    const int n = a.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            j = a(j);
            ++len;
        } while (j != i);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return lengths;
}

std::string cycle_type_string(const std::vector<int>& type) {
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < type.size()) {
        std::size_t j = i;
        while (j < type.size() && type[j] == type[i]) ++j;
        if (!first) os << " ";
        os << type[i];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

// ----------------------------------------------------------------- PermGroup

BigInt factorial_big(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

int PermGroup::greedy_base_point(const std::vector<Permutation>& gens, int n,
                                 const std::vector<int>& forbidden) {
    // orbit sizes of every point under <gens>, pick the largest orbit
    std::vector<int> orbit_id(static_cast<std::size_t>(n), -1);
    std::vector<int> orbit_size;
    for (int s = 0; s < n; ++s) {
        if (orbit_id[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(orbit_size.size());
        std::vector<int> stack{s};
        orbit_id[static_cast<std::size_t>(s)] = id;
        int count = 0;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            ++count;
            for (const auto& g : gens) {
                const int q = g(p);
                if (orbit_id[static_cast<std::size_t>(q)] < 0) {
                    orbit_id[static_cast<std::size_t>(q)] = id;
                    stack.push_back(q);
                }
            }
        }
        orbit_size.push_back(count);
    }
    int best = -1, best_size = 1; // orbits of size 1 are fixed points, useless
    for (int p = 0; p < n; ++p) {
        if (std::find(forbidden.begin(), forbidden.end(), p) != forbidden.end()) continue;
        const int sz = orbit_size[static_cast<std::size_t>(orbit_id[static_cast<std::size_t>(p)])];
        if (sz > best_size) {
            best_size = sz;
            best = p;
        }
    }
    return best; // -1 when every remaining point is fixed
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : n_(degree), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.degree() != n_)
            throw std::invalid_argument("PermGroup: generator degree mismatch");
    std::vector<Permutation> nontrivial;
    for (const auto& g : gens_)
        if (!g.is_identity()) nontrivial.push_back(g);
    if (!nontrivial.empty()) {
        Level level0;
        level0.base_point = greedy_base_point(nontrivial, n_, {});
        level0.gens = std::move(nontrivial);
        base_.push_back(level0.base_point);
        levels_.push_back(std::move(level0));
        build();
    }
    order_ = 1;
    for (const auto& level : levels_) order_ *= static_cast<int>(level.orbit.size());
}

void PermGroup::rebuild_orbit(std::size_t li) {
    // the group acting at level li is generated by this level's generators
    // together with everything assigned deeper (those fix this base point but
    // still move other points of its orbit)
    std::vector<const Permutation*> acting;
    for (std::size_t lj = li; lj < levels_.size(); ++lj)
        for (const auto& g : levels_[lj].gens) acting.push_back(&g);

    Level& level = levels_[li];
    level.orbit.clear();
    level.transversal.clear();
    level.transversal_of.assign(static_cast<std::size_t>(n_), -1);
    level.orbit.push_back(level.base_point);
    level.transversal_of[static_cast<std::size_t>(level.base_point)] = 0;
    level.transversal.push_back(Permutation::identity(n_));
    for (std::size_t qi = 0; qi < level.orbit.size(); ++qi) {
        const int p = level.orbit[qi];
        for (const Permutation* g : acting) {
            const int q = (*g)(p);
            if (level.transversal_of[static_cast<std::size_t>(q)] < 0) {
                level.transversal_of[static_cast<std::size_t>(q)] =
                    static_cast<int>(level.orbit.size());
                level.orbit.push_back(q);
                level.transversal.push_back(compose(*g, level.transversal[qi]));
            }
        }
    }
}

void PermGroup::add_generator_at(const Permutation& g, std::size_t lj) {
    if (lj == levels_.size()) {
        Level level;
        level.base_point = greedy_base_point({g}, n_, base_);
        if (level.base_point < 0)
            throw std::logic_error("PermGroup: non-identity residue fixes everything");
        base_.push_back(level.base_point);
        levels_.push_back(std::move(level));
    }
    levels_[lj].gens.push_back(g);
}

void PermGroup::build() {
    int inserted = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t li = 0; li < levels_.size(); ++li) rebuild_orbit(li);
        // deepest level first, so shallower checks run against settled tails
        for (std::size_t li = levels_.size(); li-- > 0 && !changed;) {
            std::vector<std::pair<std::size_t, std::size_t>> acting;
            for (std::size_t lj = li; lj < levels_.size(); ++lj)
                for (std::size_t t = 0; t < levels_[lj].gens.size(); ++t)
                    acting.emplace_back(lj, t);
            const std::size_t orbit_size = levels_[li].orbit.size();
            for (std::size_t qi = 0; qi < orbit_size && !changed; ++qi) {
                for (const auto& [lg, tg] : acting) {
                    const Permutation& up = levels_[li].transversal[qi];
                    const Permutation& s = levels_[lg].gens[tg];
                    const int q = s(levels_[li].orbit[qi]);
                    const int ti = levels_[li].transversal_of[static_cast<std::size_t>(q)];
                    Permutation res = compose(
                        inverse(levels_[li].transversal[static_cast<std::size_t>(ti)]),
                        compose(s, up));
                    if (res.is_identity()) continue;
                    // sift through deeper levels; the residue lands where it stalls
                    std::size_t lj = li + 1;
                    while (lj < levels_.size() && !res.is_identity()) {
                        const int img = res(levels_[lj].base_point);
                        const int tj =
                            levels_[lj].transversal_of[static_cast<std::size_t>(img)];
                        if (tj < 0) break;
                        res = compose(
                            inverse(levels_[lj].transversal[static_cast<std::size_t>(tj)]),
                            res);
                        ++lj;
                    }
                    if (res.is_identity()) continue;
                    add_generator_at(res, lj);
                    changed = true;
                    if (++inserted > 20000)
                        throw std::logic_error("PermGroup: strong generator fixpoint diverged");
                    break;
                }
            }
        }
    }
}

Permutation PermGroup::sift(const Permutation& g) const {
    Permutation res = g;
    for (const auto& level : levels_) {
        if (res.is_identity()) break;
        const int img = res(level.base_point);
        const int ti = level.transversal_of[static_cast<std::size_t>(img)];
        if (ti < 0) return res;
        res = compose(inverse(level.transversal[static_cast<std::size_t>(ti)]), res);
    }
    return res;
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != n_) return false;
    return sift(g).is_identity();
}

BigInt group_order(const std::vector<Permutation>& gens) {
    if (gens.empty()) return 1;
    return PermGroup(gens.front().degree(), gens).order();
}

bool is_transitive(const std::vector<Permutation>& gens, int n) {
    if (n <= 1) return true;
    if (gens.empty()) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 0;
    while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& g : gens) {
            const int q = g(p);
            if (!seen[static_cast<std::size_t>(q)]) {
                seen[static_cast<std::size_t>(q)] = true;
                stack.push_back(q);
            }
        }
    }
    return count == n;
}

bool is_2_transitive(const std::vector<Permutation>& gens, int n) {
    if (n <= 1) return true;
    if (gens.empty()) return false;
    // orbit of the ordered pair (0, 1) must cover all n(n-1) ordered pairs
    const auto key = [n](int a, int b) { return a * n + b; };
    std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
    std::vector<std::pair<int, int>> stack{{0, 1}};
    seen[static_cast<std::size_t>(key(0, 1))] = true;
    int count = 0;
    while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& g : gens) {
            const int qa = g(a), qb = g(b);
            if (!seen[static_cast<std::size_t>(key(qa, qb))]) {
                seen[static_cast<std::size_t>(key(qa, qb))] = true;
                stack.emplace_back(qa, qb);
            }
        }
    }
    return count == n * (n - 1);
}

bool is_symmetric(const std::vector<Permutation>& gens, int n) {
    if (gens.empty()) return n <= 1;
    return group_order(gens) == factorial_big(n);
}

BigInt brute_force_order(const std::vector<Permutation>& gens, int n) {
    if (n > 7)
        throw std::invalid_argument("brute_force_order: degree capped at 7");
    std::set<std::vector<int>> closure;
    closure.insert(Permutation::identity(n).images());
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& h : frontier) {
            for (const auto& g : gens) {
                const Permutation prod = compose(g, h);
                if (closure.insert(prod.images()).second) next.push_back(prod);
            }
        }
        frontier = std::move(next);
    }
    return BigInt(closure.size());
}

SubgroupCriterionVerdict lemma_act_check(const std::vector<Permutation>& g_gens,
                                         const std::vector<Permutation>& g1_gens,
                                         const std::vector<int>& m1,
                                         const std::optional<Permutation>& witness,
                                         int m) {
    SubgroupCriterionVerdict v;
    v.g_transitive = is_transitive(g_gens, m);

    std::vector<bool> in_m1(static_cast<std::size_t>(m), false);
    for (int p : m1) {
        if (p < 0 || p >= m)
            throw std::invalid_argument("lemma_act_check: subset point out of range");
        in_m1[static_cast<std::size_t>(p)] = true;
    }

    v.g1_preserves_subset = true;
    for (const auto& g : g1_gens)
        for (int p : m1)
            if (!in_m1[static_cast<std::size_t>(g(p))]) v.g1_preserves_subset = false;

    const int m1_size = static_cast<int>(m1.size());
    v.subset_size_bound = 2 * m1_size >= m + 2;

    if (v.g1_preserves_subset && m1_size >= 2) {
        // reindex the subset and test 2-transitivity of the restriction
        std::vector<int> pos(static_cast<std::size_t>(m), -1);
        for (int i = 0; i < m1_size; ++i)
            pos[static_cast<std::size_t>(m1[static_cast<std::size_t>(i)])] = i;
        std::vector<Permutation> restricted;
        for (const auto& g : g1_gens) {
            std::vector<int> im(static_cast<std::size_t>(m1_size));
            for (int i = 0; i < m1_size; ++i)
                im[static_cast<std::size_t>(i)] =
                    pos[static_cast<std::size_t>(g(m1[static_cast<std::size_t>(i)]))];
            restricted.emplace_back(std::move(im));
        }
        v.g1_2transitive_on_subset = is_2_transitive(restricted, m1_size);
    }

    v.witness_present = witness.has_value();
    if (witness) {
        const auto type = cycle_type(*witness);
        v.witness_is_transposition =
            type.size() >= 1 && type[0] == 2 && (type.size() == 1 || type[1] == 1);
        if (!g_gens.empty()) {
            PermGroup group(m, g_gens);
            v.witness_in_group = group.contains(*witness);
            v.group_order_decimal = group.order_decimal();
            v.order_equals_m_factorial = group.order() == factorial_big(m);
        }
    } else if (!g_gens.empty()) {
        PermGroup group(m, g_gens);
        v.group_order_decimal = group.order_decimal();
        v.order_equals_m_factorial = group.order() == factorial_big(m);
    }

    v.hypotheses_all = v.g_transitive && v.g1_preserves_subset && v.subset_size_bound &&
                       v.g1_2transitive_on_subset && v.witness_present &&
                       v.witness_is_transposition && v.witness_in_group;
    v.concludes_symmetric = v.hypotheses_all;
    return v;
}

} // namespace inflecta
