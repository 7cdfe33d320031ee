#include "wsp/cotangent.hpp"
#include "wsp/errors.hpp"
#include "wsp/linalg.hpp"

#include <algorithm>
#include <string>

namespace wsp {

std::vector<int> a_set(const NumericalSemigroup& s, long long l) {
    std::vector<int> indices;
    const auto& gens = s.min_gens();
    for (std::size_t j = 0; j < gens.size(); ++j)
        if (!s.contains(gens[j] + l)) indices.push_back(static_cast<int>(j) + 1);
    return indices;
}

int v_dim(const NumericalSemigroup& s, const std::vector<BinomialRelation>& relations,
          long long l) {
    std::vector<std::vector<long long>> rows;
    for (const auto& rel : relations)
        if (!s.contains(rel.degree + l)) rows.push_back(rel.lattice_vector);
    if (rows.empty()) return 0;
    return integer_matrix_rank(rows);
}

long long t1_dim(const NumericalSemigroup& s, const std::vector<BinomialRelation>& relations,
                 long long l) {
    if (in_end(s, l)) return 0;
    const long long a = static_cast<long long>(a_set(s, l).size());
    const long long v = v_dim(s, relations, l);
    const long long dim = a - v - 1;
    if (dim < 0)
        throw formula_inconsistency("dim T1 at degree " + std::to_string(l) + " computed as " +
                                    std::to_string(dim));
    return dim;
}

GradedT1Table t1_table(const NumericalSemigroup& s) {
    if (s.genus() < 1) throw input_error("GenusTooSmall: genus >= 1 required");
    if (s.embedding_dim() < 2)
        throw input_error("SingleGenerator: at least two minimal generators required");

    const auto relations = minimal_relations(s);
    long long max_degree = 0;
    for (const auto& rel : relations) max_degree = std::max(max_degree, rel.degree);

    GradedT1Table table;
    auto record = [&](long long l) {
        const long long dim = t1_dim(s, relations, l);
        if (dim == 0) return;
        table.by_degree[l] = dim;
        table.diagnostics[l] = {static_cast<long long>(a_set(s, l).size()),
                                static_cast<long long>(v_dim(s, relations, l))};
        (l > 0 ? table.t1_plus : table.t1_minus) += dim;
    };
    for (long long l = -max_degree; l <= -1; ++l) record(l);
    for (long long gap : s.gaps())
        if (!in_end(s, gap)) record(gap);
    return table;
}

bool is_negatively_graded(const NumericalSemigroup& s) {
    return t1_table(s).t1_plus == 0;
}

} // namespace wsp
