#pragma once

#include <cstdint>
#include <vector>

namespace wsp {

// A cofinite additive submonoid of the nonnegative integers, stored through
// its minimal generators, gap list and a membership table over [0, F].
// Immutable after construction; all operations on it are pure.
class NumericalSemigroup {
public:
    const std::vector<long long>& min_gens() const { return min_gens_; }
    long long frobenius() const { return frobenius_; }
    const std::vector<long long>& gaps() const { return gaps_; }

    long long genus() const { return static_cast<long long>(gaps_.size()); }
    long long multiplicity() const { return min_gens_.front(); }
    int embedding_dim() const { return static_cast<int>(min_gens_.size()); }

    bool contains(long long n) const {
        if (n < 0) return false;
        if (n > frobenius_) return true;
        return membership_[static_cast<std::size_t>(n)];
    }

    friend NumericalSemigroup from_generators(std::vector<long long> gens);
    friend NumericalSemigroup from_gaps(std::vector<long long> gap_set);

private:
    NumericalSemigroup() = default;

    std::vector<long long> min_gens_;
    long long frobenius_ = -1;
    std::vector<bool> membership_; // index 0..max(F,0)
    std::vector<long long> gaps_;
};

NumericalSemigroup from_generators(std::vector<long long> gens);
NumericalSemigroup from_gaps(std::vector<long long> gap_set);

// Least member in each residue class mod m, indexed by residue. m must be a
// positive member.
std::vector<long long> apery_set(const NumericalSemigroup& s, long long m);

// Gaps l with l + n in N for every nonzero member n. Membership in End(N) is
// tested against the minimal generators only; the full-definition check is
// equivalent by closure. Requires genus >= 1.
std::vector<long long> end_set_gaps(const NumericalSemigroup& s);
long long lambda(const NumericalSemigroup& s);

// True for nonnegative n with n + n_j in N for every minimal generator n_j.
// Members and integers beyond F qualify automatically.
bool in_end(const NumericalSemigroup& s, long long n);

bool is_symmetric(const NumericalSemigroup& s);

// Effective weight: sum over gaps l of #{ generators n_j < l }.
long long ewt(const NumericalSemigroup& s);

// Classical weight: sum of (l_i - i) over the gaps, i 1-based ascending.
long long wt(const NumericalSemigroup& s);

} // namespace wsp
