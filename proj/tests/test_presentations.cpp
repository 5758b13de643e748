#include "hairy/presentations.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hairy;

namespace {

FunctorSpec spec_of(Functor f, int rank, HopfKind h, Parity p = Parity::none) { return FunctorSpec{f, rank, h, p}; }

std::size_t total_over_weights(const FunctorSpec& spec, int degree, int vars) {
    std::size_t total = 0;
    for (const auto& w : weak_compositions(degree, vars)) {
        total += quotient_dim(spec, w);
    }
    return total;
}

// Words with the given letter content.
std::vector<std::vector<int>> words_with_content(const std::vector<int>& content) {
    std::vector<int> letters;
    for (int v = 0; v < static_cast<int>(content.size()); ++v) {
        letters.insert(letters.end(), static_cast<std::size_t>(content[static_cast<std::size_t>(v)]), v);
    }
    std::vector<std::vector<int>> out;
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<int> min_rotation(const std::vector<int>& w) {
    auto best = w;
    auto r = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        best = std::min(best, r);
    }
    return best;
}

// H/[H,H] for T(V) has the cyclic words as basis and S acts as (-1)^d times
// reversal, so rank(id - S) counts reversal orbits of necklaces (odd d) or
// necklaces not fixed by reversal, paired up (even d).
std::size_t tensor_h1_oracle(const std::vector<int>& content) {
    int d = 0;
    for (int c : content) {
        d += c;
    }
    std::set<std::vector<int>> necklaces;
    std::set<std::vector<int>> bracelets;
    std::size_t symmetric = 0;
    for (const auto& w : words_with_content(content)) {
        const auto n = min_rotation(w);
        if (necklaces.insert(n).second) {
            auto rev = n;
            std::reverse(rev.begin(), rev.end());
            const auto nr = min_rotation(rev);
            bracelets.insert(std::min(n, nr));
            if (nr == n) {
                ++symmetric;
            }
        }
    }
    if (d % 2 == 1) {
        return bracelets.size();
    }
    return (necklaces.size() - symmetric) / 2;
}

// Row spaces are equal iff stacking them does not raise either rank.
bool same_row_space(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix both = a;
    for (const auto& r : b.rows()) {
        both.add_row(r);
    }
    const auto ra = rank(a);
    return ra == rank(b) && rank(both) == ra;
}

}  // namespace

TEST_SUITE("presentations") {

TEST_CASE("functor specs") {
    CHECK(spec_of(Functor::HH, 3, HopfKind::Sym, Parity::even).key() == "H/3/sym/even");
    CHECK(spec_of(Functor::Omega, 2, HopfKind::Tensor).key() == "Omega/2/tensor");
    CHECK_THROWS_AS(spec_of(Functor::Omega, 3, HopfKind::Sym, Parity::odd).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(Functor::HH, 3, HopfKind::Tensor, Parity::even).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(Functor::HH, 4, HopfKind::Sym).validate(), std::invalid_argument);
    CHECK_THROWS_AS(quotient_dim(spec_of(Functor::HH, 3, HopfKind::Sym, Parity::even), WeightVector{{2, 1}}),
                    std::invalid_argument);
    CHECK(quotient_dim(spec_of(Functor::HH, 2, HopfKind::Sym), WeightVector{{0, 0}}) == 0);
}

TEST_CASE("quotient examples") {
    const auto h2 = spec_of(Functor::HH, 2, HopfKind::Sym);
    CHECK(quotient_dim(h2, WeightVector{{1, 1}}) == 0);
    for (int d = 1; d <= 7; d += 2) {
        for (const auto& w : weak_compositions(d, 2)) {
            CHECK(quotient_dim(h2, w) == 0);
        }
    }
    CHECK(quotient_dim(spec_of(Functor::Omega, 2, HopfKind::Sym), WeightVector{{4}}) == 1);
    CHECK(quotient_dim(spec_of(Functor::Omega, 2, HopfKind::Sym), WeightVector{{8}}) == 2);
    CHECK(quotient_dim(spec_of(Functor::HH, 3, HopfKind::Sym), WeightVector{{2, 1, 0}}) == 1);
    // [2,1] in three variables: weight (1,1,1) sees it twice.
    CHECK(quotient_dim(spec_of(Functor::HH, 3, HopfKind::Sym), WeightVector{{1, 1, 1}}) == 2);
    CHECK(quotient_dim(spec_of(Functor::HH, 3, HopfKind::Sym), WeightVector{{3}}) == 0);
}

TEST_CASE("single-variable Omega_2 dimensions") {
    const auto spec = spec_of(Functor::Omega, 2, HopfKind::Sym);
    for (int n = 1; n <= 6; ++n) {
        const int expected = (2 * n + 2) / 3 - 1;  // ceil(2n/3) - 1
        CHECK(quotient_dim(spec, WeightVector{{2 * n}}) == static_cast<std::size_t>(expected));
        CHECK(quotient_dim(spec, WeightVector{{2 * n - 1}}) == 0);
    }
}

TEST_CASE("rank one") {
    std::size_t total = 0;
    for (const auto& w : weak_compositions(3, 2)) {
        total += h1_dim(HopfKind::Sym, w);
    }
    CHECK(total == 4);
    for (const auto& w : weak_compositions(2, 3)) {
        CHECK(h1_dim(HopfKind::Sym, w) == 0);
    }
    for (int n = 1; n <= 4; ++n) {
        std::size_t sum = 0;
        for (const auto& w : weak_compositions(1, n)) {
            sum += h1_dim(HopfKind::Tensor, w);
        }
        CHECK(sum == static_cast<std::size_t>(n));
    }
    // Sym: no commutators and S = (-1)^d, so the answer is the block size in odd degrees.
    for (int d = 1; d <= 7; ++d) {
        for (const auto& w : weak_compositions(d, 2)) {
            CHECK(h1_dim(HopfKind::Sym, w) == (d % 2 == 1 ? 1u : 0u));
        }
    }
    // Tensor against the necklace count.
    for (int d = 1; d <= 7; ++d) {
        for (const auto& w : weak_compositions(d, 3)) {
            CAPTURE(d);
            CHECK(h1_dim(HopfKind::Tensor, w) == tensor_h1_oracle(w.multidegrees));
        }
    }
    CHECK(quotient_dim(spec_of(Functor::HH, 1, HopfKind::Sym), WeightVector{{3}}) == 1);
    CHECK(quotient_dim(spec_of(Functor::Omega, 1, HopfKind::Tensor), WeightVector{{2, 1}}) ==
          tensor_h1_oracle({2, 1}));
}

TEST_CASE("GL_2 cohomology against modular form dimensions") {
    for (int g = 0; g <= 30; ++g) {
        CAPTURE(g);
        if (g % 2 == 1) {
            CHECK(gl2_h1_dim(g, Parity::even) == 0);
            CHECK(gl2_h1_dim(g, Parity::odd) == 0);
        } else {
            CHECK(gl2_h1_dim(g, Parity::even) == static_cast<std::size_t>(cusp_dim(g + 2)));
            CHECK(gl2_h1_dim(g, Parity::odd) == static_cast<std::size_t>(mf_dim(g + 2)));
        }
    }
    CHECK(gl2_h1_dim(10, Parity::even) == 1);
    CHECK(gl2_h1_dim(2, Parity::odd) == 1);
    CHECK_THROWS_AS(gl2_h1_dim(4, Parity::none), std::invalid_argument);
}

TEST_CASE("rank 2 operator forms cut out the same relations") {
    for (auto f : {Functor::HH, Functor::Omega}) {
        for (auto kind : {HopfKind::Sym, HopfKind::Tensor}) {
            const int max_degree = kind == HopfKind::Sym ? 6 : 4;
            for (int d = 1; d <= max_degree; ++d) {
                for (const auto& p : partitions_of(d, 3)) {
                    const auto w = as_weight(p, p.length());
                    CAPTURE(to_string(f));
                    CAPTURE(to_string(kind));
                    CAPTURE(p.to_string());
                    const auto explicit_rows = relation_vectors(spec_of(f, 2, kind), w);
                    const auto operator_rows = rank2_operator_relations(f, kind, w);
                    CHECK(explicit_rows.index.basis() == operator_rows.index.basis());
                    CHECK(same_row_space(explicit_rows.rows, operator_rows.rows));
                }
            }
        }
    }
}

TEST_CASE("even and odd specialisations agree with the general rank 3 presentation") {
    const auto general = spec_of(Functor::HH, 3, HopfKind::Sym);
    for (int d = 1; d <= 6; ++d) {
        const auto parity = d % 2 == 0 ? Parity::even : Parity::odd;
        const auto special = spec_of(Functor::HH, 3, HopfKind::Sym, parity);
        for (const auto& p : partitions_of(d, 4)) {
            const auto w = as_weight(p, p.length());
            CAPTURE(p.to_string());
            CHECK(quotient_dim(special, w) == quotient_dim(general, w));
        }
    }
}

TEST_CASE("quotient bounded by the ambient block") {
    for (auto f : {Functor::HH, Functor::Omega}) {
        for (int rank = 1; rank <= 3; ++rank) {
            for (auto kind : {HopfKind::Sym, HopfKind::Tensor}) {
                const auto spec = spec_of(f, rank, kind);
                const int max_degree = kind == HopfKind::Sym ? 5 : 3;
                for (int d = 1; d <= max_degree; ++d) {
                    for (const auto& p : partitions_of(d, 3)) {
                        const auto w = as_weight(p, p.length());
                        const auto block = relation_vectors(spec, w);
                        const auto q = quotient_dim(spec, w);
                        CHECK(q <= block.index.size());
                        if (rank > 1) {
                            CHECK(q + rank_rational(block.rows) == block.index.size());
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("Omega dominates H weight by weight") {
    for (int rank = 1; rank <= 3; ++rank) {
        for (auto kind : {HopfKind::Sym, HopfKind::Tensor}) {
            const int max_degree = kind == HopfKind::Sym ? 6 : 4;
            for (int d = 1; d <= max_degree; ++d) {
                for (const auto& p : partitions_of(d, 3)) {
                    const auto w = as_weight(p, p.length());
                    CAPTURE(rank);
                    CAPTURE(p.to_string());
                    CHECK(quotient_dim(spec_of(Functor::Omega, rank, kind), w) >=
                          quotient_dim(spec_of(Functor::HH, rank, kind), w));
                }
            }
        }
    }
}

TEST_CASE("weight permutation invariance, random spot checks") {
    std::mt19937_64 rng(314159);
    const std::vector<FunctorSpec> specs = {
        spec_of(Functor::HH, 2, HopfKind::Sym),     spec_of(Functor::Omega, 2, HopfKind::Sym),
        spec_of(Functor::HH, 3, HopfKind::Sym),     spec_of(Functor::Omega, 3, HopfKind::Sym),
        spec_of(Functor::HH, 2, HopfKind::Tensor),  spec_of(Functor::Omega, 2, HopfKind::Tensor),
        spec_of(Functor::HH, 3, HopfKind::Tensor),  spec_of(Functor::Omega, 3, HopfKind::Tensor),
        spec_of(Functor::HH, 1, HopfKind::Tensor)};
    for (const auto& spec : specs) {
        const int d = spec.hopf == HopfKind::Sym ? 6 : 3;
        auto weights = weak_compositions(d, 3);
        std::shuffle(weights.begin(), weights.end(), rng);
        for (std::size_t i = 0; i < 4 && i < weights.size(); ++i) {
            auto w = weights[i];
            const auto q = quotient_dim(spec, w);
            std::shuffle(w.multidegrees.begin(), w.multidegrees.end(), rng);
            CAPTURE(spec.key());
            CHECK(quotient_dim(spec, w) == q);
            // Zero entries carry no information.
            w.multidegrees.push_back(0);
            CHECK(quotient_dim(spec, w) == q);
        }
    }
}

TEST_CASE("rank 2 dims match the closed-form multiplicities through degree 12") {
    const auto spec = spec_of(Functor::HH, 2, HopfKind::Sym);
    for (int d = 1; d <= 12; ++d) {
        for (const auto& mu : partitions_of(d, 3)) {
            const auto w = as_weight(mu, mu.length());
            std::uint64_t predicted = 0;
            for (const auto& lambda : partitions_of(d, 2)) {
                const auto m = rank2_bound(lambda[0], lambda[1]);
                if (m > 0 && w.num_vars() > 0) {
                    predicted += static_cast<std::uint64_t>(m) * kostka(lambda, w);
                }
            }
            CAPTURE(mu.to_string());
            CHECK(quotient_dim(spec, w) == predicted);
        }
    }
}

TEST_CASE("rank 2 rule agrees with GL_2 cohomology") {
    // [a,b] with a >= b + 2 contributes H^1(GL_2(Z); Sym^{a-b} (x) det^b).
    for (int a = 0; a <= 24; ++a) {
        for (int b = 0; b + 2 <= a; ++b) {
            const auto twist = b % 2 == 0 ? Parity::even : Parity::odd;
            CAPTURE(a);
            CAPTURE(b);
            CHECK(static_cast<std::size_t>(rank2_bound(a, b)) == gl2_h1_dim(a - b, twist));
        }
    }
}

TEST_CASE("totals over all weights in two variables") {
    // H_2(Sym V) in degree 4 is [3,1]: dimension 2 in two variables.
    CHECK(total_over_weights(spec_of(Functor::HH, 2, HopfKind::Sym), 4, 2) == weyl_dim(Partition({3, 1}), 2));
}

}  // TEST_SUITE
