#pragma once

#include "hairy/linear.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hairy {

enum class HopfKind { Sym, Tensor };

/// Monomial (exponent vector, Sym) or word (letter sequence, Tensor).
/// The interpretation of `data` is fixed by the owning HopfAlgebra.
struct HopfElement {
    std::vector<std::uint8_t> data;

    auto operator<=>(const HopfElement&) const = default;
};

using HopfVector = LinComb<HopfElement>;
using HopfPair = std::pair<HopfElement, HopfElement>;
using HopfPairVector = LinComb<HopfPair>;

/// One Sweedler term h_(1) (x) h_(2) with its integer multiplicity.
struct SweedlerTerm {
    long coeff;
    HopfElement left;
    HopfElement right;
};

/// Cocommutative Hopf algebra Sym(V) or T(V) with generators primitive.
class HopfAlgebra {
public:
    HopfAlgebra(HopfKind kind, int num_vars);

    HopfKind kind() const { return kind_; }
    int num_vars() const { return num_vars_; }
    bool commutative() const { return kind_ == HopfKind::Sym; }

    HopfElement unit() const;
    /// The generator v_var as an element of degree one.
    HopfElement generator(int var) const;
    /// Sym: exponents; Tensor: letters. Validates the content.
    HopfElement make(std::vector<std::uint8_t> data) const;

    int degree(const HopfElement& x) const;
    std::vector<int> weight(const HopfElement& x) const;
    std::string to_string(const HopfElement& x) const;

    HopfElement product(const HopfElement& x, const HopfElement& y) const;
    HopfPairVector coproduct(const HopfElement& x) const;
    /// Coproduct as merged Sweedler terms in a deterministic order.
    std::vector<SweedlerTerm> sweedler(const HopfElement& x) const;
    HopfVector antipode(const HopfElement& x) const;
    /// Antipode of a basis element is a signed basis element.
    std::pair<int, HopfElement> antipode_term(const HopfElement& x) const;
    Rational counit(const HopfElement& x) const;

    /// All basis elements of a given multidegree, in lexicographic order.
    std::vector<HopfElement> basis(const std::vector<int>& weight) const;

    /// Linear extensions of the structure maps.
    HopfVector product(const HopfVector& x, const HopfVector& y) const;
    HopfVector antipode(const HopfVector& x) const;

    friend bool operator==(const HopfAlgebra&, const HopfAlgebra&) = default;

private:
    HopfKind kind_;
    int num_vars_;
};

std::string to_string(HopfKind kind);

}  // namespace hairy
