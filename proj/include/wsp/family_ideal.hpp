#pragma once

#include "wsp/poly.hpp"

#include <array>
#include <vector>

namespace wsp::fam {

using poly::Polynomial;
using poly::Rational;
using poly::RingPtr;

// Which three residual coefficient normalizations to apply for family 1.
// The main text sets f_{8,1} = f_{12,4} = f_{8,6} = 0; the variant sets
// f_{15,6} = 0 instead of f_{8,6}. Family 2 always uses
// f_{3,6} = g_{4,1} = f_{4,2} = 0.
enum class Normalization { main_text, trailing_fragment };

// Ring of the affine curve chart: X of weight 6 and the four Y variables of
// the family (Y3,Y4,Y7,Y8 resp. Y1..Y4) with weights j + 6*tau.
RingPtr curve_ring(int family_id, long long tau);

// The nine binomial generators of the monomial-curve ideal, isobaric of
// weights 12*tau + i.
std::vector<Polynomial> family_initial_forms(int family_id, long long tau);

// The nine generators of the deformed family-1 ideal with the three
// smoothing parameters; at a = b = c = 0 they are the initial forms.
std::vector<Polynomial> smoothing_ideal_family1(long long tau, const Rational& a,
                                                const Rational& b, const Rational& c);

// The eight linear syzygies among the family-1 initial forms, as exact
// polynomial identities. index is 1-based.
bool verify_syzygy_family1(long long tau, int index);
bool verify_syzygies_family1(long long tau);

// 5x5 skew-symmetric matrix, upper triangle stored row-major:
// (0,1),(0,2),(0,3),(0,4),(1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
struct SkewMatrix5 {
    RingPtr ring;
    std::array<Polynomial, 10> upper;
    // Signed entry, zero on the diagonal.
    Polynomial entry(int i, int j) const;
};

// Ring of the matrix coefficients: X plus the 11*tau+8 (family 1) or
// 11*tau+4 (family 2) free symbols f{i}_{k} / g{i}_{k} of weight k.
RingPtr matrix_ring(int family_id, long long tau,
                    Normalization norm = Normalization::main_text);

// Partial polynomial f_i^{(j)} = sum_k f_{i,j+6k} X^{rho-k} in `ring`;
// normalized symbols are dropped. fg selects the f or g symbol family.
Polynomial coefficient_partial(const RingPtr& ring, int family_id, long long tau, int i, int j,
                               char fg = 'f');

SkewMatrix5 pfaffian_matrix(int family_id, long long tau,
                            Normalization norm = Normalization::main_text);

// Pfaffians of the five principal 4x4 minors (delete row/column k, k=0..4),
// with Pf = m01*m23 - m02*m13 + m03*m12 on the surviving indices in order.
std::array<Polynomial, 5> sub_pfaffians(const SkewMatrix5& m);

// Remainder coefficients of the five Pfaffians after division by the
// family's monic divisor (X^tau - f_8^{(6)} resp. X^tau - f_3^{(6)}):
// exactly 5*tau equations in the coefficient symbols, emitted per Pfaffian
// in ascending X-power of the remainder.
std::vector<Polynomial> base_equations(int family_id, long long tau,
                                       Normalization norm = Normalization::main_text);

// Checks the explicit negative smoothing of family 1: the constant
// top-weight assignments f_8^{(6)} = a, f_14^{(6)} = b, f_15^{(6)} = c (all
// other symbols zero) annihilate every base equation, and the deformed
// ideal reduces to the initial forms at a = b = c = 0. The three univariate
// polynomials X^tau - a, X^{tau+1} - b, X^{tau+2} - c must be pairwise
// coprime (nonzero resultants), else coprimality_failure.
bool verify_smoothing_solution(long long tau, const Rational& a, const Rational& b,
                               const Rational& c);

// The degree-2 parts of the family-1 base equations coincide with the
// coefficients, modulo X^tau, of the five Pfaffians computed with X^tau
// set to zero in the matrix.
bool quadratic_cone_check(long long tau);

} // namespace wsp::fam
