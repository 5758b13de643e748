#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hairy {

/// Weakly decreasing sequence of positive parts. Trailing zeros are stripped
/// on construction, so `Partition({2, 1, 0})` equals `Partition({2, 1})`.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    /// Part i, or 0 past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool dominates(const Partition& other) const;
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Multidegree over a fixed set of variables; entries are not sorted.
struct WeightVector {
    std::vector<int> multidegrees;

    int total() const;
    int num_vars() const { return static_cast<int>(multidegrees.size()); }
    bool is_dominant() const;
    Partition sorted() const;

    auto operator<=>(const WeightVector&) const = default;
};

/// `lambda` as a weight over `num_vars` variables (zero padded).
WeightVector as_weight(const Partition& lambda, int num_vars);

/// All partitions of n with at most max_parts parts, descending lexicographic.
std::vector<Partition> partitions_of(int n, int max_parts);

/// All weak compositions of n into exactly k parts, lexicographically descending.
std::vector<WeightVector> weak_compositions(int n, int k);

/// Number of distinct rearrangements of the entries of w.
std::uint64_t orbit_size(const WeightVector& w);

/// Number of semistandard tableaux of shape lambda and content mu.
/// Throws std::invalid_argument when |lambda| != mu.total().
std::uint64_t kostka(const Partition& lambda, const WeightVector& mu);

/// Dimension of the Schur functor S_lambda(k^m).
std::uint64_t weyl_dim(const Partition& lambda, int m);

std::uint64_t binomial(int n, int k);

// Dimension formulas. Every one of these returns 0 outside its domain.

/// Cusp forms of weight w for PSL_2(Z).
int cusp_dim(int w);
/// Modular forms of weight w for PSL_2(Z).
int mf_dim(int w);
/// ceil(k/3) for even k >= 0, 0 for odd k.
int omega_dim(int k);
/// omega_dim(k) - 1 clamped at 0; zero in odd subscripts.
int omega_cusp_dim(int k);
/// s'_{2m+2} = ceil(2m/3) - 1 for m > 0, zero otherwise.
int s_prime(int w);

int epsilon_term(int a, int b, int c);
int delta_term(int a, int b, int c);

/// Multiplicity of [a,b] in the rank-2 part for H = Sym(V): s_{a-b+2} if a, b
/// are even, s_{a-b+2} + 1 if both are odd, 0 otherwise or when a < b + 2.
/// Requires a >= b.
int rank2_bound(int a, int b);
/// The same rule with s_{a-b} in place of s_{a-b+2}. Kept for comparison; the
/// computed rank-2 tables disagree with it from degree 10 on.
int rank2_bound_unshifted(int a, int b);
/// Lower bound on the multiplicity of [a,b,c] in the rank-3 part.
int rank3_bound(int a, int b, int c);
/// Lower bound coming from the injection into Omega_3(Sym V)_even:
/// s_{b-c+2} + (omega_{a-b} - 1) + delta + epsilon, i.e. the cusp term in
/// a - b enlarged to its Omega counterpart.
int iota_bound(int a, int b, int c);
/// The same injection with the enlarged term placed on b - c instead:
/// s_{a-b+2} + (omega_{b-c+2} - 1) + delta + epsilon. Kept for comparison;
/// the computed Omega_3 tables violate it.
int iota_bound_swapped(int a, int b, int c);
/// Lower bound on the multiplicity of [a,b,c] in the Johnson cokernel.
int omega3intro_bound(int a, int b, int c);
/// Closed form for the multiplicity of [k,l] in Omega_2(Sym V).
int omega2_closed_form(int k, int l);

}  // namespace hairy
