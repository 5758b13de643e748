#pragma once

#include "hairy/combinatorics.hpp"
#include "hairy/hopf.hpp"
#include "hairy/linear.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace hairy {

/// Pure tensor h_1 (x) ... (x) h_n of basis elements.
struct TensorBasisElement {
    std::vector<HopfElement> slots;

    std::size_t arity() const { return slots.size(); }
    auto operator<=>(const TensorBasisElement&) const = default;
};

struct TensorBasisHash {
    std::size_t operator()(const TensorBasisElement& t) const noexcept;
};

using TensorVector = LinComb<TensorBasisElement>;

enum class AtomKind {
    Swap,           // sigma_ij
    AntipodeAt,     // S in slot i
    E,              // a (x) b (x) ... -> a_(1) (x) a_(2) b (x) ...
    F,              // a (x) b (x) ... -> a b_(1) (x) b_(2) (x) ...
    CoproductInto,  // (n-1)-tensors -> n-tensors, Delta in slot i
    Rank2Gamma,     // a (x) b -> S(b_(1)) (x) a S(b_(2))
    Rank2Tau,       // a (x) b -> b (x) a
    Rank2Delta,     // a (x) b -> S(a) (x) b
    Rank2S,         // a (x) b -> S(b) (x) a
};

/// Atomic operator. Slot indices are zero based.
struct Atom {
    AtomKind kind;
    int i = 0;
    int j = 0;

    auto operator<=>(const Atom&) const = default;
};

/// How a written word O_1 O_2 ... O_k acts on a tensor.
enum class Reading {
    /// x . (O_1 O_2) = (x . O_1) . O_2: the written word is applied left to right.
    right_action,
    /// Ordinary composition: O_k is applied first.
    left_action,
};

/// Formal rational combination of words of atomic operators.
class OperatorExpr {
public:
    struct Term {
        Rational coeff;
        std::vector<Atom> word;
    };

    OperatorExpr() = default;

    static OperatorExpr identity();
    static OperatorExpr atom(Atom a);

    const std::vector<Term>& terms() const { return terms_; }

    OperatorExpr& operator+=(const OperatorExpr& rhs);
    friend OperatorExpr operator+(OperatorExpr lhs, const OperatorExpr& rhs) { return lhs += rhs; }
    friend OperatorExpr operator-(OperatorExpr lhs, const OperatorExpr& rhs) { return lhs += rhs * Rational(-1); }
    friend OperatorExpr operator-(const OperatorExpr& x) { return x * Rational(-1); }
    friend OperatorExpr operator*(const OperatorExpr& x, const Rational& c);
    friend OperatorExpr operator*(const Rational& c, const OperatorExpr& x) { return x * c; }
    /// Written product: the word of lhs followed by the word of rhs.
    friend OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs);

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Operator constructors. Slot numbers are one based as in sigma_12.
namespace op {
OperatorExpr id();
OperatorExpr swap(int i, int j);
OperatorExpr antipode_at(int i);
/// S (x) S (x) ... (x) S on n slots.
OperatorExpr antipode_all(int n);
OperatorExpr E();
OperatorExpr F();
OperatorExpr coproduct_into(int i);
OperatorExpr gamma();
OperatorExpr tau();
OperatorExpr delta();
OperatorExpr s();
}  // namespace op

/// H^{(x) n} graded by weight, with the operator algebra acting on it.
class TensorSpace {
public:
    TensorSpace(HopfAlgebra hopf, int arity);

    const HopfAlgebra& hopf() const { return hopf_; }
    int arity() const { return arity_; }

    WeightVector weight(const TensorBasisElement& t) const;
    std::string to_string(const TensorBasisElement& t) const;
    std::string to_string(const TensorVector& v) const;

    /// Basis of the weight block, lexicographic on tuples.
    std::vector<TensorBasisElement> basis(const WeightVector& weight) const;

    /// Rows spanning the conjugation relations v (*) t for primitive v.
    /// Empty for commutative H.
    std::vector<TensorVector> bar_relations(const WeightVector& weight) const;

    TensorBasisElement make(std::vector<HopfElement> slots) const;

private:
    HopfAlgebra hopf_;
    int arity_;
};

/// Apply an operator to a homogeneous vector. Throws std::invalid_argument on
/// arity mismatch and std::logic_error if terms land in different weights.
TensorVector apply(const HopfAlgebra& hopf, const OperatorExpr& expr, const TensorVector& v,
                   Reading reading = Reading::right_action);

TensorVector apply_atom(const HopfAlgebra& hopf, const Atom& atom, const TensorVector& v);

/// Dense index of a weight block for turning tensor vectors into matrix rows.
class BlockIndex {
public:
    explicit BlockIndex(std::vector<TensorBasisElement> basis);

    std::size_t size() const { return basis_.size(); }
    const std::vector<TensorBasisElement>& basis() const { return basis_; }
    /// Column of a basis tuple; throws std::out_of_range when absent.
    std::uint32_t column(const TensorBasisElement& t) const;
    bool contains(const TensorBasisElement& t) const { return index_.count(t) != 0; }

private:
    std::vector<TensorBasisElement> basis_;
    std::unordered_map<TensorBasisElement, std::uint32_t, TensorBasisHash> index_;
};

}  // namespace hairy
