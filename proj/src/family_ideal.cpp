#include "wsp/family_ideal.hpp"
#include "wsp/errors.hpp"

#include <set>
#include <string>

namespace wsp::fam {

namespace {

void validate(int family_id, long long tau) {
    if (family_id != 1 && family_id != 2)
        throw input_error("BadFamilyId: family must be 1 or 2");
    if (tau < 1) throw input_error("TauTooSmall: tau >= 1 required");
}

std::string symbol_name(char fg, int i, long long k) {
    return std::string(1, fg) + std::to_string(i) + "_" + std::to_string(k);
}

// X-degree of the partial polynomial f_i^{(j)} (or g_i^{(j)}), per the
// isobaric degree rules of the two families.
long long partial_degree(int family_id, long long tau, int i, int j) {
    const int delta = i - j;
    if (family_id == 1) {
        if (delta == 11) return 0;
        const int eps = delta / 6;
        switch (delta % 6) {
            case 0: return 2 * tau + eps;
            case 1:
            case 2: return tau - 1 + eps;
            case 3:
            case 4: return tau + eps;
            default: throw input_error("unsupported partial f" + std::to_string(i) + "^(" +
                                       std::to_string(j) + ") for family 1");
        }
    }
    if (delta == 0) return 2 * tau;
    if (delta == 6) return 2 * tau + 1;
    if (delta == 5) return 0;
    // floor division for negative delta
    const long long q = delta >= 0 ? delta / 6 : -((-delta + 5) / 6);
    return tau + q;
}

struct PartialId {
    char fg;
    int i;
    int j;
};

// The eleven partials occurring in the skew matrix, in a fixed order.
std::vector<PartialId> matrix_partials(int family_id) {
    if (family_id == 1)
        return {{'f', 16, 2}, {'f', 8, 1},  {'f', 12, 4}, {'f', 6, 4},
                {'f', 12, 3}, {'f', 15, 6}, {'f', 8, 6},  {'f', 14, 6},
                {'f', 12, 5}, {'f', 7, 5},  {'f', 10, 2}};
    return {{'g', 4, 2}, {'g', 4, 1}, {'f', 6, 4}, {'f', 2, 4}, {'f', 6, 3}, {'f', 8, 6},
            {'f', 3, 6}, {'f', 2, 6}, {'f', 6, 5}, {'f', 2, 5}, {'f', 4, 2}};
}

std::set<std::string> normalized_symbols(int family_id, Normalization norm) {
    if (family_id == 1) {
        if (norm == Normalization::main_text) return {"f8_1", "f12_4", "f8_6"};
        return {"f8_1", "f12_4", "f15_6"};
    }
    return {"f3_6", "g4_1", "f4_2"};
}

Polynomial var(const RingPtr& ring, const std::string& name) {
    return Polynomial::variable(ring, name);
}

} // namespace

RingPtr curve_ring(int family_id, long long tau) {
    validate(family_id, tau);
    std::vector<std::pair<std::string, long long>> vars{{"X", 6}};
    const auto js = family_id == 1 ? std::vector<int>{3, 4, 7, 8} : std::vector<int>{1, 2, 3, 4};
    for (int j : js) vars.emplace_back("Y" + std::to_string(j), j + 6 * tau);
    return poly::make_ring(std::move(vars));
}

std::vector<Polynomial> family_initial_forms(int family_id, long long tau) {
    const auto ring = curve_ring(family_id, tau);
    const Polynomial x = var(ring, "X");
    if (family_id == 1) {
        const Polynomial y3 = var(ring, "Y3"), y4 = var(ring, "Y4");
        const Polynomial y7 = var(ring, "Y7"), y8 = var(ring, "Y8");
        return {
            y3 * y3 - x.pow(2 * tau + 1),     // F6
            y3 * y4 - x.pow(tau) * y7,        // F7
            y4 * y4 - x.pow(tau) * y8,        // F8
            y3 * y7 - x.pow(tau + 1) * y4,    // F10
            y4 * y7 - y3 * y8,                // F11
            y4 * y8 - x.pow(2 * tau + 2),     // F12
            y7 * y7 - x.pow(tau + 1) * y8,    // F14
            y7 * y8 - x.pow(tau + 2) * y3,    // F15
            y8 * y8 - x.pow(tau + 2) * y4,    // F16
        };
    }
    const Polynomial y1 = var(ring, "Y1"), y2 = var(ring, "Y2");
    const Polynomial y3 = var(ring, "Y3"), y4 = var(ring, "Y4");
    return {
        y1 * y1 - x.pow(tau) * y2,     // F2
        y1 * y2 - x.pow(tau) * y3,     // F3
        y1 * y3 - x.pow(tau) * y4,     // F4
        y2 * y2 - x.pow(tau) * y4,     // G4
        y1 * y4 - y2 * y3,             // F5
        y2 * y4 - x.pow(2 * tau + 1),  // F6
        y3 * y3 - x.pow(2 * tau + 1),  // G6
        y3 * y4 - x.pow(tau + 1) * y1, // F7
        y4 * y4 - x.pow(tau + 1) * y2, // F8
    };
}

std::vector<Polynomial> smoothing_ideal_family1(long long tau, const Rational& a,
                                                const Rational& b, const Rational& c) {
    const auto ring = curve_ring(1, tau);
    const Polynomial x = var(ring, "X");
    const Polynomial y3 = var(ring, "Y3"), y4 = var(ring, "Y4");
    const Polynomial y7 = var(ring, "Y7"), y8 = var(ring, "Y8");
    const Polynomial pa = x.pow(tau) - Polynomial::constant(ring, a);
    const Polynomial pb = x.pow(tau + 1) - Polynomial::constant(ring, b);
    const Polynomial pc = x.pow(tau + 2) - Polynomial::constant(ring, c);
    return {
        y3 * y3 - pb * pa, y3 * y4 - pa * y7, y4 * y4 - pa * y8,
        y3 * y7 - pb * y4, y4 * y7 - y3 * y8, y4 * y8 - pc * pa,
        y7 * y7 - pb * y8, y7 * y8 - pc * y3, y8 * y8 - pc * y4,
    };
}

bool verify_syzygy_family1(long long tau, int index) {
    validate(1, tau);
    if (index < 1 || index > 8) throw input_error("syzygy index must be in 1..8");
    const auto ring = curve_ring(1, tau);
    const auto forms = family_initial_forms(1, tau);
    const Polynomial& f6 = forms[0];
    const Polynomial& f7 = forms[1];
    const Polynomial& f8 = forms[2];
    const Polynomial& f10 = forms[3];
    const Polynomial& f11 = forms[4];
    const Polynomial& f12 = forms[5];
    const Polynomial& f14 = forms[6];
    const Polynomial& f15 = forms[7];
    const Polynomial& f16 = forms[8];
    const Polynomial x = var(ring, "X");
    const Polynomial y3 = var(ring, "Y3"), y4 = var(ring, "Y4");
    const Polynomial y7 = var(ring, "Y7"), y8 = var(ring, "Y8");

    Polynomial lhs(ring);
    switch (index) {
        case 1: lhs = y4 * f6 - y3 * f7 - x.pow(tau) * f10; break;
        case 2: lhs = y4 * f7 - y3 * f8 + x.pow(tau) * f11; break;
        case 3: lhs = y4 * f10 - y7 * f7 + x.pow(tau + 1) * f8 - x.pow(tau) * f14; break;
        case 4: lhs = y4 * f11 - y7 * f8 + y8 * f7; break;
        case 5: lhs = y4 * f12 - y8 * f8 - x.pow(tau) * f16; break;
        case 6: lhs = y4 * f14 - y8 * f10 - y7 * f11; break;
        case 7: lhs = y4 * f15 - y7 * f12 + x.pow(tau + 2) * f7; break;
        case 8: lhs = y4 * f16 - y8 * f12 + x.pow(tau + 2) * f8; break;
    }
    if (!lhs.is_zero())
        throw verification_failure("SyzygyFailure: identity " + std::to_string(index) +
                                   " does not vanish: " + lhs.to_string());
    return true;
}

bool verify_syzygies_family1(long long tau) {
    for (int index = 1; index <= 8; ++index) verify_syzygy_family1(tau, index);
    return true;
}

RingPtr matrix_ring(int family_id, long long tau, Normalization norm) {
    validate(family_id, tau);
    const auto dropped = normalized_symbols(family_id, norm);
    std::vector<std::pair<std::string, long long>> vars{{"X", 6}};
    for (const auto& p : matrix_partials(family_id)) {
        const long long rho = partial_degree(family_id, tau, p.i, p.j);
        for (long long k = 0; k <= rho; ++k) {
            const long long w = p.j + 6 * k;
            std::string name = symbol_name(p.fg, p.i, w);
            if (dropped.count(name)) continue;
            vars.emplace_back(std::move(name), w);
        }
    }
    return poly::make_ring(std::move(vars));
}

Polynomial coefficient_partial(const RingPtr& ring, int family_id, long long tau, int i, int j,
                               char fg) {
    validate(family_id, tau);
    const long long rho = partial_degree(family_id, tau, i, j);
    const int xvar = ring->index("X");
    Polynomial result(ring);
    for (long long k = 0; k <= rho; ++k) {
        const int sym = ring->find(symbol_name(fg, i, j + 6 * k));
        if (sym < 0) continue; // normalized away
        result += Polynomial::variable(ring, sym) * Polynomial::variable(ring, xvar).pow(rho - k);
    }
    return result;
}

Polynomial SkewMatrix5::entry(int i, int j) const {
    if (i == j) return Polynomial(ring);
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    static constexpr int offset[5] = {0, 4, 7, 9, 10};
    const Polynomial& e = upper[static_cast<std::size_t>(offset[i] + (j - i - 1))];
    return flip ? -e : e;
}

SkewMatrix5 pfaffian_matrix(int family_id, long long tau, Normalization norm) {
    const auto ring = matrix_ring(family_id, tau, norm);
    const Polynomial x = var(ring, "X");
    auto partial = [&](int i, int j, char fg = 'f') {
        return coefficient_partial(ring, family_id, tau, i, j, fg);
    };
    SkewMatrix5 m{ring, {Polynomial(ring), Polynomial(ring), Polynomial(ring), Polynomial(ring),
                         Polynomial(ring), Polynomial(ring), Polynomial(ring), Polynomial(ring),
                         Polynomial(ring), Polynomial(ring)}};
    if (family_id == 1) {
        m.upper[0] = partial(16, 2);
        m.upper[1] = partial(8, 1);
        m.upper[2] = partial(12, 4);
        m.upper[3] = partial(6, 4);
        m.upper[4] = partial(12, 3);
        m.upper[5] = partial(15, 6) - x * x * partial(8, 6);
        m.upper[6] = partial(14, 6) - x * partial(8, 6);
        m.upper[7] = partial(12, 5);
        m.upper[8] = partial(7, 5);
        m.upper[9] = partial(10, 2);
    } else {
        m.upper[0] = partial(4, 2, 'g');
        m.upper[1] = partial(4, 1, 'g');
        m.upper[2] = partial(6, 4);
        m.upper[3] = -partial(2, 4);
        m.upper[4] = partial(6, 3);
        m.upper[5] = partial(8, 6) - x * partial(3, 6);
        m.upper[6] = partial(2, 6) - partial(3, 6);
        m.upper[7] = partial(6, 5);
        m.upper[8] = partial(2, 5);
        m.upper[9] = partial(4, 2);
    }
    return m;
}

std::array<Polynomial, 5> sub_pfaffians(const SkewMatrix5& m) {
    std::array<Polynomial, 5> result{Polynomial(m.ring), Polynomial(m.ring), Polynomial(m.ring),
                                     Polynomial(m.ring), Polynomial(m.ring)};
    for (int k = 0; k < 5; ++k) {
        int r[4];
        int t = 0;
        for (int i = 0; i < 5; ++i)
            if (i != k) r[t++] = i;
        result[static_cast<std::size_t>(k)] = m.entry(r[0], r[1]) * m.entry(r[2], r[3]) -
                                              m.entry(r[0], r[2]) * m.entry(r[1], r[3]) +
                                              m.entry(r[0], r[3]) * m.entry(r[1], r[2]);
    }
    return result;
}

std::vector<Polynomial> base_equations(int family_id, long long tau, Normalization norm) {
    const auto m = pfaffian_matrix(family_id, tau, norm);
    const auto& ring = m.ring;
    const int xvar = ring->index("X");
    const Polynomial divisor =
        Polynomial::variable(ring, xvar).pow(tau) -
        coefficient_partial(ring, family_id, tau, family_id == 1 ? 8 : 3, 6);

    std::vector<Polynomial> equations;
    for (const auto& pf : sub_pfaffians(m)) {
        const auto div = poly::divide_by_monic_in(pf, divisor, xvar);
        for (long long k = 0; k < tau; ++k)
            equations.push_back(div.remainder.coeff_of(xvar, k));
    }
    return equations;
}

bool verify_smoothing_solution(long long tau, const Rational& a, const Rational& b,
                               const Rational& c) {
    validate(1, tau);
    if (a == 0 || b == 0 || c == 0)
        throw input_error("smoothing parameters must be nonzero");

    // Pairwise coprimality of X^tau - a, X^{tau+1} - b, X^{tau+2} - c.
    auto power_poly = [](long long deg, const Rational& v) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, 0);
        coeffs.front() = -v;
        coeffs.back() = 1;
        return coeffs;
    };
    const auto pa = power_poly(tau, a), pb = power_poly(tau + 1, b), pc = power_poly(tau + 2, c);
    if (poly::resultant(pa, pb) == 0 || poly::resultant(pa, pc) == 0 ||
        poly::resultant(pb, pc) == 0)
        throw coprimality_failure(
            "CoprimalityFailure: the three deformed power polynomials share a root");

    // The f_{8,6} normalization collides with the solution at tau = 1, so
    // the f_{15,6} variant is used here.
    const auto norm = Normalization::trailing_fragment;
    const auto ring = matrix_ring(1, tau, norm);
    std::vector<Rational> values(static_cast<std::size_t>(ring->size()), 0);
    values[static_cast<std::size_t>(ring->index(symbol_name('f', 8, 6 * tau)))] = a;
    values[static_cast<std::size_t>(ring->index(symbol_name('f', 14, 6 * tau + 6)))] = b;
    values[static_cast<std::size_t>(ring->index(symbol_name('f', 15, 6 * tau + 12)))] = c;
    for (const auto& eq : base_equations(1, tau, norm))
        if (eq.evaluate(values) != 0) return false;

    // Setting the deformation to zero must recover the monomial cone.
    const auto reduced = smoothing_ideal_family1(tau, 0, 0, 0);
    const auto initial = family_initial_forms(1, tau);
    for (std::size_t i = 0; i < initial.size(); ++i)
        if (reduced[i] != initial[i]) return false;
    return true;
}

bool quadratic_cone_check(long long tau) {
    validate(1, tau);
    const auto m = pfaffian_matrix(1, tau);
    const auto& ring = m.ring;
    const int xvar = ring->index("X");

    // Truncation to k[X]/(X^tau).
    auto truncate = [&](const Polynomial& p) {
        Polynomial out(ring);
        for (long long k = 0; k < tau; ++k)
            out += p.coeff_of(xvar, k) * Polynomial::variable(ring, xvar).pow(k);
        return out;
    };
    SkewMatrix5 reduced{ring, m.upper};
    for (auto& e : reduced.upper) e = truncate(e);
    const auto pf_mod = sub_pfaffians(reduced);

    const auto equations = base_equations(1, tau);
    std::size_t idx = 0;
    for (const auto& pf : pf_mod) {
        const Polynomial t = truncate(pf);
        for (long long k = 0; k < tau; ++k) {
            const Polynomial quadratic = equations[idx++].total_degree_part(2);
            if (quadratic != t.coeff_of(xvar, k)) return false;
        }
    }
    return true;
}

} // namespace wsp::fam
