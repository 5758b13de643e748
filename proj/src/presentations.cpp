#include "hairy/presentations.hpp"

#include "hairy/cache.hpp"

#include <array>
#include <stdexcept>

namespace hairy {

std::string to_string(Functor f) { return f == Functor::HH ? "H" : "Omega"; }

std::string to_string(Parity p) {
    switch (p) {
        case Parity::none:
            return "none";
        case Parity::even:
            return "even";
        case Parity::odd:
            return "odd";
    }
    return "?";
}

void FunctorSpec::validate() const {
    if (rank < 1 || rank > 3) {
        throw std::invalid_argument("rank must be 1, 2 or 3");
    }
    if (parity != Parity::none && !(functor == Functor::HH && rank == 3 && hopf == HopfKind::Sym)) {
        throw std::invalid_argument("parity specialisation exists only for H, rank 3, sym");
    }
}

std::string FunctorSpec::key() const {
    std::string k = to_string(functor) + "/" + std::to_string(rank) + "/" + to_string(hopf);
    if (parity != Parity::none) {
        k += "/" + to_string(parity);
    }
    return k;
}

// ---------------------------------------------------------------------------
// Relation operators

std::vector<OperatorExpr> rank2_operators(Functor f) {
    using namespace op;
    const auto g = gamma();
    if (f == Functor::HH) {
        return {id() - tau(), id() + delta(), id() + g + g * g};
    }
    return {id() - tau(), id() - antipode_all(2), id() + g + g * g};
}

std::vector<OperatorExpr> rank3_operators(Functor f, Parity parity) {
    using namespace op;
    const auto s12 = swap(1, 2);
    const auto s13 = swap(1, 3);
    const auto s23 = swap(2, 3);
    const auto S1 = antipode_at(1);
    const auto EF = E() * s23 + F() * s13;
    const auto twisted = s23 * E() * s23 + s23 * F() * s13;

    if (parity == Parity::even) {
        return {id() + s12, id() + s23, id() - S1, E() + F() - id()};
    }
    if (parity == Parity::odd) {
        return {
            id() - s12,
            (id() + S1) * (id() + s23),
            (id() + S1) * (id() + EF),
            (id() - S1) * (EF - twisted),
        };
    }
    const auto r1 = id() + antipode_all(3) * s12;
    const auto r2 = id() + s13 - s12 * s23 - s12;
    const auto r6 = S1 * twisted + EF;
    if (f == Functor::Omega) {
        return {r1, r2, r6};
    }
    return {
        r1,
        r2,
        (id() + S1) * (id() + s23),
        id() + EF - s12 - s12 * F() * s13 - s12 * E() * s23,
        (id() + S1) * (id() + EF),
        r6,
    };
}

// ---------------------------------------------------------------------------
// Relation blocks

namespace {

void push_row(SparseMatrix& m, const BlockIndex& index, const TensorVector& v) {
    if (v.empty()) {
        return;
    }
    SparseRow row;
    row.reserve(v.size());
    for (const auto& [t, c] : v) {
        row.emplace_back(index.column(t), c);
    }
    m.add_row(std::move(row));
}

// a (x) b + S(a_(1)) b (x) S(a_(2)) + S(b_(1)) (x) S(b_(2)) a
TensorVector rank2_hh_three_term(const HopfAlgebra& h, const HopfElement& a, const HopfElement& b) {
    TensorVector v;
    v.add(TensorBasisElement{{a, b}}, 1);
    for (const auto& t : h.sweedler(a)) {
        auto [s1, l] = h.antipode_term(t.left);
        auto [s2, r] = h.antipode_term(t.right);
        v.add(TensorBasisElement{{h.product(l, b), r}}, t.coeff * s1 * s2);
    }
    for (const auto& t : h.sweedler(b)) {
        auto [s1, l] = h.antipode_term(t.left);
        auto [s2, r] = h.antipode_term(t.right);
        v.add(TensorBasisElement{{l, h.product(r, a)}}, t.coeff * s1 * s2);
    }
    return v;
}

// a (x) b + S(b) a_(1) (x) a_(2) + b_(1) (x) S(a) b_(2)
TensorVector rank2_omega_three_term(const HopfAlgebra& h, const HopfElement& a, const HopfElement& b) {
    TensorVector v;
    v.add(TensorBasisElement{{a, b}}, 1);
    auto [sb_sign, sb] = h.antipode_term(b);
    auto [sa_sign, sa] = h.antipode_term(a);
    for (const auto& t : h.sweedler(a)) {
        v.add(TensorBasisElement{{h.product(sb, t.left), t.right}}, t.coeff * sb_sign);
    }
    for (const auto& t : h.sweedler(b)) {
        v.add(TensorBasisElement{{t.left, h.product(sa, t.right)}}, t.coeff * sa_sign);
    }
    return v;
}

void add_bar_rows(const TensorSpace& space, const WeightVector& weight, const BlockIndex& index, SparseMatrix& m) {
    for (const auto& v : space.bar_relations(weight)) {
        push_row(m, index, v);
    }
}

void add_operator_rows(const HopfAlgebra& h, const std::vector<OperatorExpr>& ops, const BlockIndex& index,
                       Reading reading, SparseMatrix& m) {
    for (const auto& t : index.basis()) {
        const TensorVector x(t, 1);
        for (const auto& o : ops) {
            push_row(m, index, apply(h, o, x, reading));
        }
    }
}

RelationBlock rank1_block(const HopfAlgebra& h, const WeightVector& weight) {
    const TensorSpace space(h, 1);
    BlockIndex index(space.basis(weight));
    SparseMatrix m(static_cast<std::uint32_t>(index.size()));
    if (!h.commutative()) {
        // [u, w] for words u, w of the block is spanned by rotations of words.
        for (const auto& t : index.basis()) {
            const auto& word = t.slots[0].data;
            for (std::size_t k = 1; k < word.size(); ++k) {
                HopfElement rotated;
                rotated.data.assign(word.begin() + static_cast<std::ptrdiff_t>(k), word.end());
                rotated.data.insert(rotated.data.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
                TensorVector v(t, 1);
                v.add(TensorBasisElement{{rotated}}, -1);
                push_row(m, index, v);
            }
        }
    }
    return {std::move(index), std::move(m)};
}

void check_parity(const FunctorSpec& spec, const WeightVector& weight) {
    if (spec.parity == Parity::none) {
        return;
    }
    const bool even = weight.total() % 2 == 0;
    if (even != (spec.parity == Parity::even)) {
        throw std::invalid_argument("the " + to_string(spec.parity) + " presentation does not apply in degree " +
                                    std::to_string(weight.total()));
    }
}

}  // namespace

RelationBlock relation_vectors(const FunctorSpec& spec, const WeightVector& weight, Reading reading) {
    spec.validate();
    check_parity(spec, weight);
    const HopfAlgebra h(spec.hopf, weight.num_vars());
    if (spec.rank == 1) {
        return rank1_block(h, weight);
    }
    const TensorSpace space(h, spec.rank);
    BlockIndex index(space.basis(weight));
    SparseMatrix m(static_cast<std::uint32_t>(index.size()));
    add_bar_rows(space, weight, index, m);

    if (spec.rank == 2) {
        const auto unit = h.unit();
        for (const auto& t : index.basis()) {
            const auto& a = t.slots[0];
            const auto& b = t.slots[1];
            TensorVector swap_row(t, 1);
            swap_row.add(TensorBasisElement{{b, a}}, -1);
            push_row(m, index, swap_row);
            auto [sa_sign, sa] = h.antipode_term(a);
            if (spec.functor == Functor::HH) {
                TensorVector r(t, 1);
                r.add(TensorBasisElement{{sa, b}}, sa_sign);
                push_row(m, index, r);
                push_row(m, index, rank2_hh_three_term(h, a, b));
            } else {
                auto [sb_sign, sb] = h.antipode_term(b);
                TensorVector r(t, 1);
                r.add(TensorBasisElement{{sa, sb}}, -sa_sign * sb_sign);
                push_row(m, index, r);
                if (a == unit) {
                    push_row(m, index, TensorVector(t, 1));
                }
                push_row(m, index, rank2_omega_three_term(h, a, b));
            }
        }
        return {std::move(index), std::move(m)};
    }

    add_operator_rows(h, rank3_operators(spec.functor, spec.parity), index, reading, m);
    if (spec.functor == Functor::Omega) {
        const auto unit = h.unit();
        // 1 (x) a (x) b + 1 (x) b (x) a
        for (const auto& t : index.basis()) {
            if (t.slots[0] == unit) {
                TensorVector v(t, 1);
                v.add(TensorBasisElement{{t.slots[0], t.slots[2], t.slots[1]}}, 1);
                push_row(m, index, v);
            }
        }
        // a (x) Delta(b), over the whole two-fold block of the same weight.
        const TensorSpace pairs(h, 2);
        const auto insert = op::coproduct_into(2);
        for (const auto& t : pairs.basis(weight)) {
            push_row(m, index, apply(h, insert, TensorVector(t, 1), reading));
        }
    }
    return {std::move(index), std::move(m)};
}

RelationBlock rank2_operator_relations(Functor f, HopfKind kind, const WeightVector& weight) {
    const HopfAlgebra h(kind, weight.num_vars());
    const TensorSpace space(h, 2);
    BlockIndex index(space.basis(weight));
    SparseMatrix m(static_cast<std::uint32_t>(index.size()));
    add_bar_rows(space, weight, index, m);
    add_operator_rows(h, rank2_operators(f), index, Reading::right_action, m);
    if (f == Functor::Omega) {
        // The counit relation, written as 1 (x) a = 0.
        const auto unit = h.unit();
        for (const auto& t : index.basis()) {
            if (t.slots[0] == unit) {
                push_row(m, index, TensorVector(t, 1));
            }
        }
    }
    return {std::move(index), std::move(m)};
}

// ---------------------------------------------------------------------------
// Dimensions

std::size_t h1_dim(HopfKind kind, const WeightVector& weight) {
    const HopfAlgebra h(kind, weight.num_vars());
    auto block = rank1_block(h, weight);
    const auto commutators = rank(block.rows);
    SparseMatrix with_image = block.rows;
    for (const auto& t : block.index.basis()) {
        auto [sign, e] = h.antipode_term(t.slots[0]);
        TensorVector v(t, 1);
        v.add(TensorBasisElement{{e}}, -sign);
        push_row(with_image, block.index, v);
    }
    return rank(with_image) - commutators;
}

std::size_t quotient_dim(const FunctorSpec& spec, const WeightVector& weight, QuotientCache* cache, Reading reading) {
    spec.validate();
    if (weight.total() == 0) {
        return 0;
    }
    WeightVector used;
    for (int e : weight.multidegrees) {
        if (e < 0) {
            throw std::invalid_argument("weights must be nonnegative");
        }
        if (e > 0) {
            used.multidegrees.push_back(e);
        }
    }
    check_parity(spec, used);
    const bool cacheable = cache != nullptr && reading == Reading::right_action;
    const auto key = spec.key();
    if (cacheable) {
        if (auto hit = cache->find(key, used)) {
            return hit->quotient_dim;
        }
    }
    CacheRecord record;
    record.spec = key;
    record.weight = used.multidegrees;
    record.engine_version_hash = engine_version();
    if (spec.rank == 1) {
        const HopfAlgebra h(spec.hopf, used.num_vars());
        record.ambient_dim = h.basis(used.multidegrees).size();
        record.quotient_dim = h1_dim(spec.hopf, used);
        record.rank = record.ambient_dim - record.quotient_dim;
    } else {
        const auto block = relation_vectors(spec, used, reading);
        record.ambient_dim = block.index.size();
        record.rank = rank(block.rows);
        record.quotient_dim = record.ambient_dim - record.rank;
    }
    if (cacheable) {
        cache->store(record);
    }
    return record.quotient_dim;
}

namespace {

using Matrix2 = std::array<std::array<int, 2>, 2>;

Matrix2 mul(const Matrix2& a, const Matrix2& b) {
    Matrix2 c{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return c;
}

// Coefficients (indexed by the power of x) of p(A v) for p = x^i y^(g-i).
std::vector<BigInt> substitute(int i, int g, const Matrix2& A) {
    auto power = [](int a, int b, int n) {
        // (a x + b y)^n
        std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            BigInt c = BigInt(static_cast<unsigned long>(binomial(n, k)));
            BigInt ak;
            BigInt bk;
            mpz_pow_ui(ak.get_mpz_t(), BigInt(a).get_mpz_t(), static_cast<unsigned long>(k));
            mpz_pow_ui(bk.get_mpz_t(), BigInt(b).get_mpz_t(), static_cast<unsigned long>(n - k));
            out[static_cast<std::size_t>(k)] = c * ak * bk;
        }
        return out;
    };
    const auto first = power(A[0][0], A[0][1], i);
    const auto second = power(A[1][0], A[1][1], g - i);
    std::vector<BigInt> out(static_cast<std::size_t>(g) + 1);
    for (std::size_t p = 0; p < first.size(); ++p) {
        for (std::size_t q = 0; q < second.size(); ++q) {
            out[p + q] += first[p] * second[q];
        }
    }
    return out;
}

}  // namespace

std::size_t gl2_h1_dim(int g, Parity det_twist) {
    if (det_twist == Parity::none) {
        throw std::invalid_argument("determinant twist must be even or odd");
    }
    if (g < 0) {
        return 0;
    }
    const Matrix2 s{{{0, 1}, {-1, 0}}};
    const Matrix2 t{{{1, 1}, {0, 1}}};
    const Matrix2 tau{{{0, 1}, {1, 0}}};
    const Matrix2 st = mul(s, t);
    const Matrix2 st2 = mul(st, st);
    const int tau_sign = det_twist == Parity::even ? -1 : 1;

    const auto n = static_cast<std::uint32_t>(g + 1);
    SparseMatrix m(n);
    auto image = [&](int i, const std::vector<std::pair<Matrix2, int>>& terms) {
        std::vector<BigInt> acc(n);
        acc[static_cast<std::size_t>(i)] += 1;
        for (const auto& [A, sign] : terms) {
            const auto p = substitute(i, g, A);
            for (std::size_t k = 0; k < n; ++k) {
                acc[k] += sign * p[k];
            }
        }
        SparseRow row;
        for (std::uint32_t k = 0; k < n; ++k) {
            if (acc[k] != 0) {
                row.emplace_back(k, Rational(acc[k]));
            }
        }
        m.add_row(std::move(row));
    };
    for (int i = 0; i <= g; ++i) {
        image(i, {{s, 1}});
        image(i, {{st, 1}, {st2, 1}});
        image(i, {{tau, tau_sign}});
    }
    return n - rank(m);
}

}  // namespace hairy
