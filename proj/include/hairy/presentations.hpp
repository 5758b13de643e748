#pragma once

#include "hairy/combinatorics.hpp"
#include "hairy/exactla.hpp"
#include "hairy/hopf.hpp"
#include "hairy/tensorspace.hpp"

#include <string>
#include <vector>

namespace hairy {

class QuotientCache;

enum class Functor { HH, Omega };
enum class Parity { none, even, odd };

std::string to_string(Functor f);
std::string to_string(Parity p);

/// Which presented space to compute. The number of variables is not part of
/// the spec; it is taken from the weight being evaluated.
struct FunctorSpec {
    Functor functor = Functor::HH;
    int rank = 2;
    HopfKind hopf = HopfKind::Sym;
    Parity parity = Parity::none;

    /// Throws std::invalid_argument for unsupported combinations.
    void validate() const;
    /// Stable textual key, e.g. "H/3/sym/even".
    std::string key() const;

    auto operator<=>(const FunctorSpec&) const = default;
};

/// Relation rows in one weight block of H^{(x) rank}.
struct RelationBlock {
    BlockIndex index;
    SparseMatrix rows;
};

/// Relation operators of each presentation, written for the right action.
/// Rank 2 and rank 1 relations are built from explicit formulas instead; see
/// relation_vectors.
std::vector<OperatorExpr> rank2_operators(Functor f);
std::vector<OperatorExpr> rank3_operators(Functor f, Parity parity);

/// Bar relations plus the images of every listed relation on the weight block.
/// For rank 1 the rows span the commutators ab - ba.
RelationBlock relation_vectors(const FunctorSpec& spec, const WeightVector& weight,
                               Reading reading = Reading::right_action);

/// Rank 2 relations generated from the operator forms (id - tau, id + delta,
/// id + gamma + gamma^2, ...) instead of the explicit formulas. Used to check
/// that both descriptions cut out the same quotient.
RelationBlock rank2_operator_relations(Functor f, HopfKind kind, const WeightVector& weight);

/// Dimension of the weight block of the presented quotient. Degree 0 gives 0.
/// Unused variables (zero entries) are dropped before evaluation. The cache,
/// when given, is consulted and filled only for the right-action reading.
std::size_t quotient_dim(const FunctorSpec& spec, const WeightVector& weight, QuotientCache* cache = nullptr,
                         Reading reading = Reading::right_action);

/// Rank of (id - S) on the weight block of H / [H, H].
std::size_t h1_dim(HopfKind kind, const WeightVector& weight);

/// dim of H^1(GL_2(Z); Sym^g(k^2) (x) det^twist), computed from the
/// presentation M / <1 + s, 1 + st + (st)^2, 1 -+ tau>.
std::size_t gl2_h1_dim(int g, Parity det_twist);

}  // namespace hairy
