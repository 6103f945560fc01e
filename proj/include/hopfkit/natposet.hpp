#pragma once

// Classification of closure-operator monads on the poset (N0, +, 0) and the
// fusion-bijectivity check for unary-generated algebraic theories.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace hopfkit {

using nat = long long;

// Additively closed subset of N0 given by generators; membership is decided
// by dynamic programming up to the conductor (eventually periodic beyond it).
struct NumericalSubmonoid {
    std::set<nat> generators;
    nat gcd_value = 0;
    nat frobenius_bound = 0;  // membership(n) for n >= bound is n % gcd == 0
    std::vector<bool> table;  // membership of k*gcd for k < bound/gcd

    explicit NumericalSubmonoid(std::set<nat> gens) : generators(std::move(gens)) {
        for (nat g : generators)
            if (g <= 0) throw std::invalid_argument("NumericalSubmonoid: generators must be positive");
        if (generators.empty()) return;  // the trivial submonoid {0}
        gcd_value = 0;
        for (nat g : generators) gcd_value = std::gcd(gcd_value, g);
        nat m0 = *generators.begin() / gcd_value;
        // scaled copies; grow the DP table until m0 consecutive members appear
        std::vector<bool>& dp = table;
        dp.assign(1, true);
        nat run = 1, idx = 1;
        while (run < m0) {
            dp.push_back(false);
            for (nat g : generators) {
                nat s = g / gcd_value;
                if (idx >= s && dp[idx - s]) { dp[idx] = true; break; }
            }
            run = dp[idx] ? run + 1 : 0;
            ++idx;
        }
        frobenius_bound = (idx - m0) * gcd_value;
    }

    bool infinite() const { return !generators.empty(); }

    bool member(nat n) const {
        if (n == 0) return true;
        if (generators.empty()) return false;
        if (n % gcd_value != 0) return false;
        nat k = n / gcd_value;
        if (n >= frobenius_bound) return true;
        return k < static_cast<nat>(table.size()) && table[k];
    }
};

// Arbitrary infinite subsets: a finite exceptional prefix plus an eventually
// periodic tail, so membership and min-above stay decidable.
struct PeriodicSet {
    std::set<nat> prefix;     // members below `start`
    nat start = 0;
    nat period = 1;
    std::set<nat> residues;   // members at n >= start: n % period in residues

    bool infinite() const { return !residues.empty(); }
    bool member(nat n) const {
        if (n < start) return prefix.count(n) > 0;
        return residues.count(n % period) > 0;
    }
};

using IntSet = std::variant<NumericalSubmonoid, PeriodicSet>;

inline bool set_member(const IntSet& s, nat n) {
    return std::visit([n](const auto& x) { return x.member(n); }, s);
}

inline bool set_infinite(const IntSet& s) {
    return std::visit([](const auto& x) { return x.infinite(); }, s);
}

// The closure operator of an infinite subset: T(n) = min{m in S : n <= m}.
struct ClosureOp {
    IntSet set;

    explicit ClosureOp(IntSet s) : set(std::move(s)) {
        if (!set_infinite(set)) throw std::invalid_argument("ClosureOp: set must be infinite");
    }
    nat eval(nat n) const {
        for (nat m = n;; ++m)
            if (set_member(set, m)) return m;
    }
};

struct NatVerdict {
    bool monad = false;
    bool bimonad = false;
    bool hopf = false;
    std::string witness;  // first brute-force failure, when not hopf
};

// Monad <=> infinite set (checked at construction); bimonad <=> 0 in S and
// additive closure; Hopf <=> S is generated by a single element. The
// algebraic Hopf verdict is cross-validated against the brute-force identity
// T(T(n)+m) = T(n)+T(m) for all n,m <= bound; disagreement is a hard error.
inline NatVerdict classify_nat_monad(const IntSet& s, nat bound) {
    if (!set_infinite(s)) throw std::invalid_argument("classify_nat_monad: finite sets are not closure monads");
    NatVerdict v;
    v.monad = true;

    bool has_zero = set_member(s, 0);
    bool closed = true;
    std::string close_witness;
    {
        std::vector<nat> members;
        for (nat n = 0; n <= bound && closed; ++n)
            if (set_member(s, n)) members.push_back(n);
        for (size_t i = 0; i < members.size() && closed; ++i)
            for (size_t j = i; j < members.size() && closed; ++j)
                if (members[i] + members[j] <= bound && !set_member(s, members[i] + members[j])) {
                    closed = false;
                    close_witness = std::to_string(members[i]) + "+" + std::to_string(members[j]);
                }
    }
    v.bimonad = has_zero && closed;
    if (!v.bimonad && v.witness.empty())
        v.witness = !has_zero ? "0 not in S" : ("not additively closed at " + close_witness);

    // algebraic single-generator test
    bool singly = false;
    if (const auto* sub = std::get_if<NumericalSubmonoid>(&s)) {
        nat m0 = *sub->generators.begin();
        singly = std::all_of(sub->generators.begin(), sub->generators.end(),
                             [m0](nat g) { return g % m0 == 0; });
    } else {
        const auto& ps = std::get<PeriodicSet>(s);
        nat n0 = 0;
        for (nat n = 1;; ++n)
            if (ps.member(n)) { n0 = n; break; }
        singly = true;
        nat window = ps.start + std::lcm(ps.period, n0) * 2;
        for (nat n = 0; n <= window && singly; ++n)
            if (ps.member(n) != (n % n0 == 0)) singly = false;
    }
    bool hopf_alg = v.bimonad && singly;

    // brute-force fusion identity
    ClosureOp t{s};
    bool hopf_bf = true;
    for (nat n = 0; n <= bound && hopf_bf; ++n)
        for (nat m = 0; m <= bound && hopf_bf; ++m) {
            nat lhs = t.eval(t.eval(n) + m);
            nat rhs = t.eval(n) + t.eval(m);
            if (lhs != rhs) {
                hopf_bf = false;
                v.witness = "T(T(" + std::to_string(n) + ")+" + std::to_string(m) + ")=" +
                            std::to_string(lhs) + " != " + std::to_string(rhs);
            }
        }
    if (hopf_alg != hopf_bf)
        throw std::logic_error("classify_nat_monad: algebraic and brute-force Hopf verdicts disagree");
    v.hopf = hopf_alg;
    return v;
}

// Finite monoid by multiplication table (row i, column j holds i*j).
struct FiniteMonoid {
    Eigen::Index order = 0;
    std::vector<Eigen::Index> table;  // row-major
    Eigen::Index identity = 0;

    Eigen::Index mul(Eigen::Index i, Eigen::Index j) const { return table[i * order + j]; }

    void validate() const {
        if (order <= 0 || static_cast<Eigen::Index>(table.size()) != order * order)
            throw std::invalid_argument("FiniteMonoid: malformed table");
        for (Eigen::Index v : table)
            if (v < 0 || v >= order) throw std::invalid_argument("FiniteMonoid: entry out of range");
        for (Eigen::Index i = 0; i < order; ++i)
            if (mul(identity, i) != i || mul(i, identity) != i)
                throw std::invalid_argument("FiniteMonoid: identity law fails");
        for (Eigen::Index i = 0; i < order; ++i)
            for (Eigen::Index j = 0; j < order; ++j)
                for (Eigen::Index k = 0; k < order; ++k)
                    if (mul(mul(i, j), k) != mul(i, mul(j, k)))
                        throw std::invalid_argument("FiniteMonoid: associativity fails");
    }

    bool is_group() const {
        for (Eigen::Index i = 0; i < order; ++i) {
            bool inv = false;
            for (Eigen::Index j = 0; j < order; ++j)
                if (mul(i, j) == identity && mul(j, i) == identity) inv = true;
            if (!inv) return false;
        }
        return true;
    }
};

// An m-set on k points: one map phi_u per monoid element, phi_e = id and
// phi_u . phi_v = phi_{uv}.
struct MAction {
    Eigen::Index size = 0;
    std::vector<std::vector<Eigen::Index>> phi;  // phi[u][point]
};

namespace natdetail {

inline std::vector<Eigen::Index> canonical_form(const FiniteMonoid& m, const MAction& a) {
    std::vector<Eigen::Index> perm(a.size);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Eigen::Index> best;
    do {
        std::vector<Eigen::Index> inv(a.size);
        for (Eigen::Index i = 0; i < a.size; ++i) inv[perm[i]] = i;
        std::vector<Eigen::Index> flat;
        flat.reserve(m.order * a.size);
        for (Eigen::Index u = 0; u < m.order; ++u)
            for (Eigen::Index p = 0; p < a.size; ++p) flat.push_back(perm[a.phi[u][inv[p]]]);
        if (best.empty() || flat < best) best = flat;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace natdetail

// All m-sets on 1..max_points points, up to action isomorphism, plus the
// regular m-set (so the verdict matches the group criterion for any bound).
inline std::vector<MAction> enumerate_msets(const FiniteMonoid& m, Eigen::Index max_points) {
    m.validate();
    std::vector<MAction> out;
    std::set<std::vector<Eigen::Index>> seen;
    for (Eigen::Index k = 1; k <= max_points; ++k) {
        // choose phi_u for each non-identity u among k^k maps, then filter
        std::vector<Eigen::Index> free_elems;
        for (Eigen::Index u = 0; u < m.order; ++u)
            if (u != m.identity) free_elems.push_back(u);
        Eigen::Index nmaps = 1;
        for (Eigen::Index i = 0; i < k; ++i) nmaps *= k;  // k^k
        std::vector<Eigen::Index> choice(free_elems.size(), 0);
        auto decode = [&](Eigen::Index code) {
            std::vector<Eigen::Index> f(k);
            for (Eigen::Index i = 0; i < k; ++i) {
                f[i] = code % k;
                code /= k;
            }
            return f;
        };
        bool done = free_elems.empty();
        if (done) {
            MAction a{k, {}};
            a.phi.resize(m.order);
            std::vector<Eigen::Index> idmap(k);
            std::iota(idmap.begin(), idmap.end(), 0);
            a.phi[m.identity] = idmap;
            if (seen.insert(natdetail::canonical_form(m, a)).second) out.push_back(a);
            continue;
        }
        while (true) {
            MAction a{k, {}};
            a.phi.resize(m.order);
            std::vector<Eigen::Index> idmap(k);
            std::iota(idmap.begin(), idmap.end(), 0);
            a.phi[m.identity] = idmap;
            for (size_t i = 0; i < free_elems.size(); ++i) a.phi[free_elems[i]] = decode(choice[i]);
            bool ok = true;
            for (Eigen::Index u = 0; u < m.order && ok; ++u)
                for (Eigen::Index v = 0; v < m.order && ok; ++v) {
                    Eigen::Index uv = m.mul(u, v);
                    for (Eigen::Index p = 0; p < k && ok; ++p)
                        if (a.phi[u][a.phi[v][p]] != a.phi[uv][p]) ok = false;
                }
            if (ok && seen.insert(natdetail::canonical_form(m, a)).second) out.push_back(a);
            size_t pos = 0;
            while (pos < choice.size()) {
                if (++choice[pos] < nmaps) break;
                choice[pos] = 0;
                ++pos;
            }
            if (pos == choice.size()) break;
        }
    }
    // the regular m-set (skip when already covered by max_points >= order)
    if (max_points < m.order) {
        MAction reg{m.order, {}};
        reg.phi.resize(m.order);
        for (Eigen::Index u = 0; u < m.order; ++u) {
            reg.phi[u].resize(m.order);
            for (Eigen::Index p = 0; p < m.order; ++p) reg.phi[u][p] = m.mul(u, p);
        }
        if (seen.insert(natdetail::canonical_form(m, reg)).second) out.push_back(reg);
    }
    return out;
}

struct TheoryVerdict {
    bool hopf = false;
    std::string witness;  // offending element/probe when not hopf
};

// The unary theory of m has F(X) = m x X; on an m-set A the adjunction fusion
// map is Psi_A(u, a) = (u, u.a), bijective iff every phi_u is a bijection.
// The verdict over all probed m-sets is cross-validated against "m is a
// group"; disagreement is a hard error.
inline TheoryVerdict theory_fusion_check(const FiniteMonoid& m, Eigen::Index max_set) {
    if (max_set < 1) throw std::invalid_argument("theory_fusion_check: max_set must be >= 1");
    TheoryVerdict v;
    v.hopf = true;
    auto probes = enumerate_msets(m, max_set);
    for (size_t pi = 0; pi < probes.size() && v.hopf; ++pi) {
        const auto& a = probes[pi];
        for (Eigen::Index u = 0; u < m.order && v.hopf; ++u) {
            std::vector<bool> hit(a.size, false);
            for (Eigen::Index p = 0; p < a.size; ++p) hit[a.phi[u][p]] = true;
            if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
                v.hopf = false;
                v.witness = "element " + std::to_string(u) + " acts non-bijectively on probe " +
                            std::to_string(pi) + " (size " + std::to_string(a.size) + ")";
            }
        }
    }
    if (v.hopf != m.is_group())
        throw std::logic_error("theory_fusion_check: fusion verdict disagrees with the group test");
    return v;
}

struct PseudoConstantScan {
    std::vector<Eigen::Index> pseudo_constants;          // constant on every probe
    std::vector<std::vector<Eigen::Index>> per_probe;    // probe -> elements constant there
};

// Elements u with u.a = u.b for all a, b in every probed m-set. A nonempty
// aggregate forces a non-Hopf fusion verdict (asserted).
inline PseudoConstantScan pseudo_constant_scan(const FiniteMonoid& m, Eigen::Index max_set) {
    auto probes = enumerate_msets(m, max_set);
    PseudoConstantScan out;
    std::vector<bool> always(m.order, true);
    for (const auto& a : probes) {
        std::vector<Eigen::Index> here;
        for (Eigen::Index u = 0; u < m.order; ++u) {
            bool constant = true;
            for (Eigen::Index p = 1; p < a.size && constant; ++p)
                if (a.phi[u][p] != a.phi[u][0]) constant = false;
            if (constant) here.push_back(u);
            else always[u] = false;
        }
        out.per_probe.push_back(std::move(here));
    }
    for (Eigen::Index u = 0; u < m.order; ++u)
        if (always[u]) out.pseudo_constants.push_back(u);
    if (!out.pseudo_constants.empty() && theory_fusion_check(m, max_set).hopf)
        throw std::logic_error("pseudo_constant_scan: pseudo-constants found on a Hopf theory");
    return out;
}

// All monoid tables of the given order with identity 0, up to isomorphism.
inline std::vector<FiniteMonoid> enumerate_monoids(Eigen::Index order) {
    std::vector<FiniteMonoid> out;
    std::set<std::vector<Eigen::Index>> seen;
    Eigen::Index cells = (order - 1) * (order - 1);
    Eigen::Index total = 1;
    for (Eigen::Index i = 0; i < cells; ++i) total *= order;
    for (Eigen::Index code = 0; code < total; ++code) {
        FiniteMonoid m;
        m.order = order;
        m.identity = 0;
        m.table.assign(order * order, 0);
        Eigen::Index c = code;
        for (Eigen::Index i = 0; i < order; ++i) {
            m.table[0 * order + i] = i;
            m.table[i * order + 0] = i;
        }
        for (Eigen::Index i = 1; i < order; ++i)
            for (Eigen::Index j = 1; j < order; ++j) {
                m.table[i * order + j] = c % order;
                c /= order;
            }
        bool assoc = true;
        for (Eigen::Index i = 0; i < order && assoc; ++i)
            for (Eigen::Index j = 0; j < order && assoc; ++j)
                for (Eigen::Index k = 0; k < order && assoc; ++k)
                    if (m.mul(m.mul(i, j), k) != m.mul(i, m.mul(j, k))) assoc = false;
        if (!assoc) continue;
        // canonical form over permutations fixing the identity
        std::vector<Eigen::Index> perm(order);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Eigen::Index> best;
        do {
            if (perm[0] != 0) continue;
            std::vector<Eigen::Index> flat(order * order);
            std::vector<Eigen::Index> inv(order);
            for (Eigen::Index i = 0; i < order; ++i) inv[perm[i]] = i;
            for (Eigen::Index i = 0; i < order; ++i)
                for (Eigen::Index j = 0; j < order; ++j)
                    flat[i * order + j] = perm[m.mul(inv[i], inv[j])];
            if (best.empty() || flat < best) best = flat;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) out.push_back(m);
    }
    return out;
}

}  // namespace hopfkit
