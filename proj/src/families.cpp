#include "wsp/families.hpp"
#include "wsp/cotangent.hpp"
#include "wsp/errors.hpp"
#include "wsp/toric.hpp"

#include <algorithm>
#include <sstream>

namespace wsp {

namespace {

std::vector<long long> family_generators(int family_id, long long tau) {
    if (family_id == 1) return {6, 3 + 6 * tau, 4 + 6 * tau, 7 + 6 * tau, 8 + 6 * tau};
    return {6, 1 + 6 * tau, 2 + 6 * tau, 3 + 6 * tau, 4 + 6 * tau};
}

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

void check(FamilyVerification& record, const std::string& name, long long got,
           long long expected) {
    if (got != expected)
        throw verification_failure("VerificationFailure: " + name + " = " + std::to_string(got) +
                                   ", expected " + std::to_string(expected));
    record.checks.push_back({name, std::to_string(got)});
}

} // namespace

FamilySpec family(int family_id, long long tau) {
    if (family_id != 1 && family_id != 2)
        throw input_error("BadFamilyId: family must be 1 or 2");
    if (tau < 1) throw input_error("TauTooSmall: tau >= 1 required");

    FamilySpec spec{family_id, tau, from_generators(family_generators(family_id, tau))};
    if (family_id == 1) {
        spec.closed_genus = 3 + 6 * tau;
        spec.closed_t1_minus = 11 * tau + 8;
        spec.closed_moduli_dim = 8 * tau + 7;
        spec.closed_cone_dim = 8 * tau + 8;
    } else {
        spec.closed_genus = 6 * tau;
        spec.closed_t1_minus = 11 * tau + 4;
        spec.closed_moduli_dim = 8 * tau + 3;
    }
    spec.closed_frobenius = 2 * spec.closed_genus - 1;
    return spec;
}

FamilyVerification verify_family(const FamilySpec& spec) {
    const auto& s = spec.semigroup;
    const long long tau = spec.tau;
    FamilyVerification record;

    check(record, "genus", s.genus(), spec.closed_genus);
    check(record, "frobenius", s.frobenius(), spec.closed_frobenius);
    check(record, "symmetric", is_symmetric(s) ? 1 : 0, 1);
    check(record, "lambda", lambda(s), 1);

    const auto gens = family_generators(spec.family_id, tau);
    if (s.min_gens() != gens)
        throw verification_failure("VerificationFailure: generators " + join(s.min_gens()) +
                                   " are not minimal as given, expected " + join(gens));
    record.checks.push_back({"min_gens", join(gens)});

    // Membership must match the disjoint residue-class decomposition:
    // 6N, the four shifted classes j+6tau+6N, and one doubly shifted class.
    long long threshold[6];
    threshold[0] = 0;
    if (spec.family_id == 1) {
        for (long long j : {3LL, 4LL, 7LL, 8LL}) threshold[(j + 6 * tau) % 6] = j + 6 * tau;
        threshold[(11 + 12 * tau) % 6] = 11 + 12 * tau;
    } else {
        for (long long j : {1LL, 2LL, 3LL, 4LL}) threshold[(j + 6 * tau) % 6] = j + 6 * tau;
        threshold[(5 + 12 * tau) % 6] = 5 + 12 * tau;
    }
    for (long long n = 0; n <= s.frobenius() + 6; ++n) {
        const bool predicted = n >= threshold[n % 6];
        if (s.contains(n) != predicted)
            throw verification_failure("VerificationFailure: decomposition mismatch at " +
                                       std::to_string(n));
    }
    record.checks.push_back({"decomposition", "matches membership"});

    const auto relations = minimal_relations(s);
    check(record, "minimal_relations", static_cast<long long>(relations.size()), 9);

    std::vector<long long> degrees;
    for (const auto& rel : relations) degrees.push_back(rel.degree);
    std::sort(degrees.begin(), degrees.end());
    std::vector<long long> expected_degrees;
    const auto offsets = spec.family_id == 1
                             ? std::vector<long long>{6, 7, 8, 10, 11, 12, 14, 15, 16}
                             : std::vector<long long>{2, 3, 4, 4, 5, 6, 6, 7, 8};
    for (long long i : offsets) expected_degrees.push_back(12 * tau + i);
    if (degrees != expected_degrees)
        throw verification_failure("VerificationFailure: relation degrees " + join(degrees) +
                                   ", expected " + join(expected_degrees));
    record.checks.push_back({"relation_degrees", join(degrees)});

    const auto table = t1_table(s);
    check(record, "t1_minus", table.t1_minus, spec.closed_t1_minus);
    const long long expected_plus = spec.family_id == 1 ? 4 * tau - 2 : 4 * tau - 4;
    check(record, "t1_plus", table.t1_plus, expected_plus);
    check(record, "2g-1-t1_plus", 2 * s.genus() - 1 - table.t1_plus, spec.closed_moduli_dim);

    record.t1_plus = table.t1_plus;
    record.t1_minus = table.t1_minus;
    return record;
}

} // namespace wsp
