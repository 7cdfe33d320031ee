#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wsp::poly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Named variables with integer weights. Rings are immutable and shared by
// the polynomials built over them.
class Ring {
public:
    explicit Ring(std::vector<std::pair<std::string, long long>> vars);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    long long weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    int find(const std::string& name) const; // -1 when absent
    int index(const std::string& name) const; // throws when absent

private:
    std::vector<std::string> names_;
    std::vector<long long> weights_;
    std::map<std::string, int> lookup_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::pair<std::string, long long>> vars);

using Exponents = std::vector<int>;

// Graded lex: total degree first, then lex on exponents.
struct TermLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact sparse multivariate polynomial over the rationals. Terms are kept
// canonically ordered and zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, TermLess>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int var);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial monomial(RingPtr ring, Exponents e, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial pow(long long e) const;

    long long degree_in(int var) const;   // -1 for the zero polynomial
    long long total_degree() const;       // -1 for the zero polynomial
    Polynomial coeff_of(int var, long long k) const;
    Polynomial total_degree_part(long long d) const;

    long long term_weight(const Exponents& e) const;
    // True when every term has the same weight; writes it to weight_out.
    bool is_isobaric(long long* weight_out = nullptr) const;

    // Image under var i -> images[i]; images live in `target`.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

    Rational evaluate(const std::vector<Rational>& values) const;

    // Canonical text form: terms in descending graded lex, explicit rational
    // coefficients.
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);

    RingPtr ring_;
    TermMap terms_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

// p = quotient * d + remainder with deg_var(remainder) < deg_var(d). The
// divisor must be monic in `var`: leading var-coefficient exactly 1, all
// other terms of strictly smaller var-degree. Throws not_monic_in_x.
DivisionResult divide_by_monic_in(const Polynomial& p, const Polynomial& d, int var);

// Resultant of two univariate rational polynomials given as coefficient
// vectors (index = power), via the Sylvester determinant.
Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g);

} // namespace wsp::poly
