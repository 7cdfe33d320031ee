#pragma once

#include "wsp/semigroup.hpp"

#include <vector>

namespace wsp {

// A factorization of `degree` over the minimal generators:
// sum exponents[j] * min_gens[j] = degree.
struct Factorization {
    std::vector<long long> exponents;
    long long degree = 0;
};

// A binomial relation in Herzog disjoint-support form. alpha and beta are
// factorizations of the same degree with alpha_j * beta_j = 0 for all j;
// lattice_vector = alpha - beta lies in the kernel of the degree map.
struct BinomialRelation {
    Factorization alpha;
    Factorization beta;
    long long degree = 0;
    std::vector<long long> lattice_vector;
};

// All exponent vectors z >= 0 with sum z_j n_j = d, first coordinate
// descending (largest exponent of the smallest generator first). Empty when
// d < 0 or d is a gap.
std::vector<Factorization> factorizations(const NumericalSemigroup& s, long long d);

// Canonical order on factorizations of equal degree: graded reverse lex.
// Used to pick deterministic relation representatives.
bool canonical_less(const std::vector<long long>& a, const std::vector<long long>& b);

// Degrees d in (0, F + n_1 + n_r] at which the factorization graph is
// disconnected, each repeated (#components - 1) times, sorted.
std::vector<long long> betti_elements(const NumericalSemigroup& s);

// Minimal binomial generators of the toric ideal of the monomial curve: one
// relation per extra connected component of the factorization graph at each
// Betti degree, joining the canonical-least representative of the component
// to that of the base component. With reversed_tiebreak the canonical-largest
// representatives are used instead (ranks downstream must not change).
std::vector<BinomialRelation> minimal_relations(const NumericalSemigroup& s,
                                                bool reversed_tiebreak = false);

} // namespace wsp
