#include "wsp/poly.hpp"
#include "wsp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wsp::poly {

Ring::Ring(std::vector<std::pair<std::string, long long>> vars) {
    for (auto& [name, weight] : vars) {
        if (lookup_.count(name))
            throw input_error("duplicate variable name: " + name);
        lookup_[name] = static_cast<int>(names_.size());
        names_.push_back(name);
        weights_.push_back(weight);
    }
}

int Ring::find(const std::string& name) const {
    auto it = lookup_.find(name);
    return it == lookup_.end() ? -1 : it->second;
}

int Ring::index(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw input_error("unknown variable: " + name);
    return i;
}

RingPtr make_ring(std::vector<std::pair<std::string, long long>> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

bool TermLess::operator()(const Exponents& a, const Exponents& b) const {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da < db;
    return a < b;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_[Exponents(static_cast<std::size_t>(p.ring_->size()), 0)] = c;
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
    Polynomial p(ring);
    Exponents e(static_cast<std::size_t>(ring->size()), 0);
    e[static_cast<std::size_t>(var)] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    int i = ring->index(name);
    return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents e, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ring_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(a.ring_);
    Exponents e(a.ring_ ? static_cast<std::size_t>(a.ring_->size()) : 0, 0);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(ring_);
    if (c == 0) return p;
    for (const auto& [e, coeff] : terms_) p.terms_[e] = coeff * c;
    return p;
}

Polynomial Polynomial::pow(long long e) const {
    Polynomial result = constant(ring_, 1);
    for (long long i = 0; i < e; ++i) result = result * *this;
    return result;
}

long long Polynomial::degree_in(int var) const {
    long long deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, static_cast<long long>(e[static_cast<std::size_t>(var)]));
    return deg;
}

long long Polynomial::total_degree() const {
    long long deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0LL));
    return deg;
}

Polynomial Polynomial::coeff_of(int var, long long k) const {
    Polynomial p(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(var)] != k) continue;
        Exponents reduced = e;
        reduced[static_cast<std::size_t>(var)] = 0;
        p.add_term(reduced, c);
    }
    return p;
}

Polynomial Polynomial::total_degree_part(long long d) const {
    Polynomial p(ring_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0LL) == d) p.terms_[e] = c;
    return p;
}

long long Polynomial::term_weight(const Exponents& e) const {
    long long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        w += static_cast<long long>(e[i]) * ring_->weight(static_cast<int>(i));
    return w;
}

bool Polynomial::is_isobaric(long long* weight_out) const {
    bool first = true;
    long long w = 0;
    for (const auto& [e, c] : terms_) {
        long long tw = term_weight(e);
        if (first) {
            w = tw;
            first = false;
        } else if (tw != w) {
            return false;
        }
    }
    if (weight_out) *weight_out = w;
    return true;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * images[i].pow(e[i]);
        result += term;
    }
    return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= values[i];
        total += term;
    }
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string f = ring_->name(static_cast<int>(i));
            if (e[i] > 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            for (std::size_t i = 0; i < factors.size(); ++i)
                os << (i ? "*" : "") << factors[i];
        }
    }
    return os.str();
}

DivisionResult divide_by_monic_in(const Polynomial& p, const Polynomial& d, int var) {
    const long long deg = d.degree_in(var);
    if (deg < 1)
        throw not_monic_in_x("NotMonicInX: divisor has no positive degree in " +
                             p.ring()->name(var));
    const Polynomial lead = d.coeff_of(var, deg);
    if (lead != Polynomial::constant(d.ring(), 1))
        throw not_monic_in_x("NotMonicInX: leading coefficient in " + p.ring()->name(var) +
                             " is not 1");

    Polynomial quotient(p.ring());
    Polynomial rest = p;
    const Polynomial x = Polynomial::variable(p.ring(), var);
    for (;;) {
        const long long k = rest.degree_in(var);
        if (k < deg) break;
        Polynomial step = rest.coeff_of(var, k) * x.pow(k - deg);
        quotient += step;
        rest -= step * d;
    }
    return {std::move(quotient), std::move(rest)};
}

Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
    auto degree = [](const std::vector<Rational>& p) {
        long long d = -1;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) d = static_cast<long long>(i);
        return d;
    };
    const long long m = degree(f);
    const long long n = degree(g);
    if (m < 0 || n < 0) return 0;

    const std::size_t size = static_cast<std::size_t>(m + n);
    if (size == 0) return 1;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
    for (long long row = 0; row < n; ++row)
        for (long long k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + m - k)] =
                f[static_cast<std::size_t>(k)];
    for (long long row = 0; row < m; ++row)
        for (long long k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + n - k)] =
                g[static_cast<std::size_t>(k)];

    // Gaussian elimination with exact rationals.
    Rational det = 1;
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && s[pivot][col] == 0) ++pivot;
        if (pivot == size) return 0;
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            det = -det;
        }
        det *= s[col][col];
        for (std::size_t i = col + 1; i < size; ++i) {
            if (s[i][col] == 0) continue;
            Rational factor = s[i][col] / s[col][col];
            for (std::size_t j = col; j < size; ++j) s[i][j] -= factor * s[col][j];
        }
    }
    return det;
}

} // namespace wsp::poly
