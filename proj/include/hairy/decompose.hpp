#pragma once

#include "hairy/combinatorics.hpp"
#include "hairy/presentations.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hairy {

/// Quotient dimension at one dominant weight.
struct WeightDim {
    Partition weight;
    std::size_t dim = 0;
};

struct Decomposition {
    FunctorSpec spec;
    int degree = 0;
    /// Nonzero multiplicities, descending lexicographic in the partition.
    std::vector<std::pair<Partition, std::uint64_t>> entries;
    /// Number of variables m -> sum of quotient dims over all weights in m variables.
    std::map<int, std::uint64_t> total_dims;
    /// Dominant weights that were evaluated, descending lexicographic.
    std::vector<WeightDim> weights;

    std::uint64_t multiplicity(const Partition& lambda) const;
    /// "[3,1] + 2[2,2]" style rendering; "0" when empty.
    std::string to_string() const;
};

/// Raised when the triangular solve produces a negative multiplicity or the
/// dimension cross-checks fail. what() includes the weight table.
class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DecomposeOptions {
    QuotientCache* cache = nullptr;
    Reading reading = Reading::right_action;
    /// Worker threads for the weight blocks; 0 keeps the OpenMP default.
    int jobs = 0;
};

/// Number of variables that suffices to see every irreducible: the tensor
/// arity for Sym, the degree for Tensor.
int row_bound(const FunctorSpec& spec, int degree);

/// Quotient dims at every dominant weight with at most row_bound + 1 parts,
/// then a unitriangular Kostka solve. Weight blocks run in parallel.
Decomposition decompose(const FunctorSpec& spec, int degree, const DecomposeOptions& options = {});

/// Same computation with the weight blocks evaluated one after another.
Decomposition decompose_serial(const FunctorSpec& spec, int degree, const DecomposeOptions& options = {});

/// Solve dims = K^T mult over the given dominant weights. Exposed for tests.
std::vector<std::pair<Partition, std::int64_t>> solve_multiplicities(const std::vector<WeightDim>& weights);

enum class BoundRelation { equal, greater, violation };

std::string to_string(BoundRelation r);

struct BoundRow {
    Partition lambda;
    std::uint64_t computed = 0;
    int bound = 0;
    BoundRelation relation = BoundRelation::equal;
};

struct BoundsReport {
    std::string bound_name;
    std::vector<BoundRow> rows;

    bool has_violation() const;
};

/// Compare a rank 2 or rank 3 Sym decomposition against its closed-form bound:
/// H rank 2: rank2_bound; Omega rank 2: omega2_closed_form; H rank 3:
/// rank3_bound; Omega rank 3: iota_bound. Throws std::invalid_argument for
/// other specs.
BoundsReport verify_bounds(const Decomposition& dec);

}  // namespace hairy
