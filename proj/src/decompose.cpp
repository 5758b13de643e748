#include "hairy/decompose.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <sstream>

namespace hairy {

std::uint64_t Decomposition::multiplicity(const Partition& lambda) const {
    for (const auto& [p, m] : entries) {
        if (p == lambda) {
            return m;
        }
    }
    return 0;
}

std::string Decomposition::to_string() const {
    if (entries.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [p, m] : entries) {
        if (!out.empty()) {
            out += " + ";
        }
        if (m != 1) {
            out += std::to_string(m);
        }
        out += p.to_string();
    }
    return out;
}

int row_bound(const FunctorSpec& spec, int degree) {
    if (spec.hopf == HopfKind::Sym) {
        return spec.rank;
    }
    return std::max(degree, 1);
}

namespace {

std::string weight_table(const std::vector<WeightDim>& weights) {
    std::ostringstream os;
    os << "weight table:";
    for (const auto& w : weights) {
        os << "\n  " << w.weight.to_string() << " -> " << w.dim;
    }
    return os.str();
}

std::vector<Partition> weights_for(const FunctorSpec& spec, int degree) {
    return partitions_of(degree, row_bound(spec, degree) + 1);
}

std::vector<WeightDim> evaluate_serial(const FunctorSpec& spec, const std::vector<Partition>& weights,
                                       const DecomposeOptions& options) {
    std::vector<WeightDim> out;
    out.reserve(weights.size());
    for (const auto& lambda : weights) {
        const auto w = as_weight(lambda, std::max(lambda.length(), 1));
        out.push_back({lambda, quotient_dim(spec, w, options.cache, options.reading)});
    }
    return out;
}

std::vector<WeightDim> evaluate_parallel(const FunctorSpec& spec, const std::vector<Partition>& weights,
                                         const DecomposeOptions& options) {
    std::vector<WeightDim> out(weights.size());
    std::exception_ptr failure;
    const int n = static_cast<int>(weights.size());
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
    // Later partitions in descending-lex order have more parts and hence the
    // biggest blocks; hand those out first.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(n - 1 - k);
        const auto& lambda = weights[idx];
        try {
            const auto w = as_weight(lambda, std::max(lambda.length(), 1));
            out[idx] = {lambda, quotient_dim(spec, w, options.cache, options.reading)};
        } catch (...) {
#pragma omp critical(hairy_decompose_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

Decomposition assemble(const FunctorSpec& spec, int degree, std::vector<WeightDim> weights) {
    Decomposition dec;
    dec.spec = spec;
    dec.degree = degree;
    dec.weights = std::move(weights);
    const int m = row_bound(spec, degree);

    std::vector<std::pair<Partition, std::int64_t>> solved;
    try {
        solved = solve_multiplicities(dec.weights);
    } catch (const DecompositionError& e) {
        throw DecompositionError(std::string(e.what()) + " for " + spec.key() + " in degree " + std::to_string(degree));
    }
    for (const auto& [lambda, mult] : solved) {
        if (mult == 0) {
            continue;
        }
        if (lambda.length() > m) {
            throw DecompositionError("irreducible " + lambda.to_string() + " has more than " + std::to_string(m) +
                                     " rows for " + spec.key() + " in degree " + std::to_string(degree) + "\n" +
                                     weight_table(dec.weights));
        }
        dec.entries.emplace_back(lambda, static_cast<std::uint64_t>(mult));
    }

    // Total dimension in m and m + 1 variables, from weights and from characters.
    for (int vars : {m, m + 1}) {
        std::uint64_t from_weights = 0;
        for (const auto& w : dec.weights) {
            if (w.weight.length() <= vars) {
                from_weights += orbit_size(as_weight(w.weight, vars)) * w.dim;
            }
        }
        std::uint64_t from_characters = 0;
        for (const auto& [lambda, mult] : dec.entries) {
            from_characters += mult * weyl_dim(lambda, vars);
        }
        if (from_weights != from_characters) {
            throw DecompositionError("total dimension mismatch in " + std::to_string(vars) + " variables: " +
                                     std::to_string(from_weights) + " from weights, " +
                                     std::to_string(from_characters) + " from characters\n" +
                                     weight_table(dec.weights));
        }
        dec.total_dims[vars] = from_weights;
    }
    return dec;
}

}  // namespace

std::vector<std::pair<Partition, std::int64_t>> solve_multiplicities(const std::vector<WeightDim>& weights) {
    std::vector<WeightDim> sorted = weights;
    std::sort(sorted.begin(), sorted.end(), [](const WeightDim& a, const WeightDim& b) { return a.weight > b.weight; });
    std::vector<std::pair<Partition, std::int64_t>> out;
    out.reserve(sorted.size());
    for (const auto& w : sorted) {
        const int n = std::max(w.weight.length(), 1);
        std::int64_t mult = static_cast<std::int64_t>(w.dim);
        for (const auto& [kappa, m] : out) {
            if (m != 0 && kappa.length() <= n) {
                mult -= m * static_cast<std::int64_t>(kostka(kappa, as_weight(w.weight, n)));
            }
        }
        if (mult < 0) {
            throw DecompositionError("negative multiplicity " + std::to_string(mult) + " at " + w.weight.to_string() +
                                     "\n" + weight_table(sorted));
        }
        out.emplace_back(w.weight, mult);
    }
    return out;
}

Decomposition decompose(const FunctorSpec& spec, int degree, const DecomposeOptions& options) {
    spec.validate();
    if (degree < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    if (degree == 0) {
        return assemble(spec, degree, {});
    }
    return assemble(spec, degree, evaluate_parallel(spec, weights_for(spec, degree), options));
}

Decomposition decompose_serial(const FunctorSpec& spec, int degree, const DecomposeOptions& options) {
    spec.validate();
    if (degree < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    if (degree == 0) {
        return assemble(spec, degree, {});
    }
    return assemble(spec, degree, evaluate_serial(spec, weights_for(spec, degree), options));
}

// ---------------------------------------------------------------------------
// Bounds

std::string to_string(BoundRelation r) {
    switch (r) {
        case BoundRelation::equal:
            return "=";
        case BoundRelation::greater:
            return ">";
        case BoundRelation::violation:
            return "VIOLATION";
    }
    return "?";
}

bool BoundsReport::has_violation() const {
    return std::any_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.relation == BoundRelation::violation; });
}

BoundsReport verify_bounds(const Decomposition& dec) {
    const auto& spec = dec.spec;
    if (spec.hopf != HopfKind::Sym || spec.rank < 2) {
        throw std::invalid_argument("bounds exist only for rank 2 and rank 3 over sym, not " + spec.key());
    }
    BoundsReport report;
    const bool hh = spec.functor == Functor::HH;
    if (spec.rank == 2) {
        report.bound_name = hh ? "rank2" : "omega2_closed_form";
    } else {
        report.bound_name = hh ? "rank3" : "iota";
    }
    for (const auto& lambda : partitions_of(dec.degree, spec.rank)) {
        const int a = lambda[0];
        const int b = lambda[1];
        const int c = lambda[2];
        int bound = 0;
        if (spec.rank == 2) {
            bound = hh ? rank2_bound(a, b) : omega2_closed_form(a, b);
        } else {
            bound = hh ? rank3_bound(a, b, c) : iota_bound(a, b, c);
        }
        const auto computed = dec.multiplicity(lambda);
        if (computed == 0 && bound == 0) {
            continue;
        }
        BoundRow row{lambda, computed, bound, BoundRelation::equal};
        if (computed < static_cast<std::uint64_t>(bound)) {
            row.relation = BoundRelation::violation;
        } else if (computed > static_cast<std::uint64_t>(bound)) {
            row.relation = BoundRelation::greater;
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace hairy
