#include "wsp/toric.hpp"
#include "wsp/errors.hpp"

#include <algorithm>
#include <numeric>

namespace wsp {

namespace {

void enumerate_rec(const std::vector<long long>& gens, std::size_t idx, long long rest,
                   std::vector<long long>& current, std::vector<Factorization>& out,
                   long long degree) {
    if (idx + 1 == gens.size()) {
        if (rest % gens[idx] == 0) {
            current[idx] = rest / gens[idx];
            out.push_back({current, degree});
            current[idx] = 0;
        }
        return;
    }
    for (long long e = rest / gens[idx]; e >= 0; --e) {
        current[idx] = e;
        enumerate_rec(gens, idx + 1, rest - e * gens[idx], current, out, degree);
    }
    current[idx] = 0;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool share_support(const std::vector<long long>& a, const std::vector<long long>& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > 0 && b[j] > 0) return true;
    return false;
}

// Connected components of the factorization graph at one degree; each
// component listed by the indices of its factorizations.
std::vector<std::vector<int>> components(const std::vector<Factorization>& facs) {
    const int n = static_cast<int>(facs.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (share_support(facs[i].exponents, facs[j].exponents)) uf.unite(i, j);
    std::vector<std::vector<int>> comps;
    std::vector<int> root_slot(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (root_slot[r] < 0) {
            root_slot[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[root_slot[r]].push_back(i);
    }
    return comps;
}

void require_presentable(const NumericalSemigroup& s) {
    if (s.embedding_dim() < 2)
        throw input_error("SingleGenerator: at least two minimal generators required");
}

} // namespace

bool canonical_less(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da < db;
    // grevlex: with equal total degree, a < b iff the rightmost nonzero
    // entry of a - b is positive.
    for (std::size_t j = a.size(); j-- > 0;) {
        if (a[j] != b[j]) return a[j] > b[j];
    }
    return false;
}

std::vector<Factorization> factorizations(const NumericalSemigroup& s, long long d) {
    std::vector<Factorization> out;
    if (d < 0 || !s.contains(d)) return out;
    std::vector<long long> current(s.min_gens().size(), 0);
    enumerate_rec(s.min_gens(), 0, d, current, out, d);
    return out;
}

std::vector<long long> betti_elements(const NumericalSemigroup& s) {
    require_presentable(s);
    const long long bound = s.frobenius() + s.min_gens().front() + s.min_gens().back();
    std::vector<long long> result;
    for (long long d = 1; d <= bound; ++d) {
        if (!s.contains(d)) continue;
        auto facs = factorizations(s, d);
        if (facs.size() < 2) continue;
        auto comps = components(facs);
        for (std::size_t k = 1; k < comps.size(); ++k) result.push_back(d);
    }
    return result;
}

std::vector<BinomialRelation> minimal_relations(const NumericalSemigroup& s,
                                                bool reversed_tiebreak) {
    require_presentable(s);
    auto pick = [&](const std::vector<Factorization>& facs, const std::vector<int>& comp) {
        int best = comp.front();
        for (int i : comp) {
            bool better = reversed_tiebreak
                              ? canonical_less(facs[best].exponents, facs[i].exponents)
                              : canonical_less(facs[i].exponents, facs[best].exponents);
            if (better) best = i;
        }
        return best;
    };

    const long long bound = s.frobenius() + s.min_gens().front() + s.min_gens().back();
    std::vector<BinomialRelation> relations;
    for (long long d = 1; d <= bound; ++d) {
        if (!s.contains(d)) continue;
        auto facs = factorizations(s, d);
        if (facs.size() < 2) continue;
        auto comps = components(facs);
        if (comps.size() < 2) continue;

        // Base component: the one containing the canonically extreme
        // factorization of the whole degree.
        std::vector<int> all(facs.size());
        std::iota(all.begin(), all.end(), 0);
        int global = pick(facs, all);
        std::size_t base = 0;
        std::vector<int> reps(comps.size());
        for (std::size_t k = 0; k < comps.size(); ++k) {
            reps[k] = pick(facs, comps[k]);
            if (std::find(comps[k].begin(), comps[k].end(), global) != comps[k].end()) base = k;
        }

        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (k == base) continue;
            const auto& u = facs[reps[k]].exponents;
            const auto& v = facs[reps[base]].exponents;
            const bool u_larger = canonical_less(v, u);
            BinomialRelation rel;
            rel.alpha = u_larger ? facs[reps[k]] : facs[reps[base]];
            rel.beta = u_larger ? facs[reps[base]] : facs[reps[k]];
            rel.degree = d;
            rel.lattice_vector.resize(u.size());
            for (std::size_t j = 0; j < u.size(); ++j) {
                if (rel.alpha.exponents[j] != 0 && rel.beta.exponents[j] != 0)
                    throw formula_inconsistency(
                        "relation representatives share support at degree " + std::to_string(d));
                rel.lattice_vector[j] = rel.alpha.exponents[j] - rel.beta.exponents[j];
            }
            relations.push_back(std::move(rel));
        }
    }
    return relations;
}

} // namespace wsp
