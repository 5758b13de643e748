#include "hairy/tensorspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hairy {

std::size_t TensorBasisHash::operator()(const TensorBasisElement& t) const noexcept {
    // FNV-1a over slot contents with a separator per slot.
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& slot : t.slots) {
        for (auto byte : slot.data) {
            h = (h ^ byte) * 1099511628211ull;
        }
        h = (h ^ 0xffu) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// OperatorExpr

OperatorExpr OperatorExpr::identity() {
    OperatorExpr x;
    x.terms_.push_back({1, {}});
    return x;
}

OperatorExpr OperatorExpr::atom(Atom a) {
    OperatorExpr x;
    x.terms_.push_back({1, {a}});
    return x;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& rhs) {
    for (const auto& t : rhs.terms_) {
        auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& u) { return u.word == t.word; });
        if (it == terms_.end()) {
            terms_.push_back(t);
        } else {
            it->coeff += t.coeff;
            if (it->coeff == 0) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

OperatorExpr operator*(const OperatorExpr& x, const Rational& c) {
    OperatorExpr out;
    if (c == 0) {
        return out;
    }
    out.terms_ = x.terms_;
    for (auto& t : out.terms_) {
        t.coeff *= c;
    }
    return out;
}

OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs) {
    OperatorExpr out;
    for (const auto& a : lhs.terms_) {
        for (const auto& b : rhs.terms_) {
            OperatorExpr::Term t{a.coeff * b.coeff, a.word};
            t.word.insert(t.word.end(), b.word.begin(), b.word.end());
            OperatorExpr single;
            single.terms_.push_back(std::move(t));
            out += single;
        }
    }
    return out;
}

namespace {

std::string atom_name(const Atom& a) {
    switch (a.kind) {
        case AtomKind::Swap:
            return "s" + std::to_string(a.i + 1) + std::to_string(a.j + 1);
        case AtomKind::AntipodeAt:
            return "S" + std::to_string(a.i + 1);
        case AtomKind::E:
            return "E";
        case AtomKind::F:
            return "F";
        case AtomKind::CoproductInto:
            return "D" + std::to_string(a.i + 1);
        case AtomKind::Rank2Gamma:
            return "gamma";
        case AtomKind::Rank2Tau:
            return "tau";
        case AtomKind::Rank2Delta:
            return "delta";
        case AtomKind::Rank2S:
            return "s";
    }
    return "?";
}

}  // namespace

std::string OperatorExpr::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += t.coeff.get_str();
        for (const auto& a : t.word) {
            out += "*" + atom_name(a);
        }
    }
    return out;
}

namespace op {
OperatorExpr id() { return OperatorExpr::identity(); }
OperatorExpr swap(int i, int j) { return OperatorExpr::atom({AtomKind::Swap, i - 1, j - 1}); }
OperatorExpr antipode_at(int i) { return OperatorExpr::atom({AtomKind::AntipodeAt, i - 1, 0}); }
OperatorExpr antipode_all(int n) {
    auto x = id();
    for (int i = 1; i <= n; ++i) {
        x = x * antipode_at(i);
    }
    return x;
}
OperatorExpr E() { return OperatorExpr::atom({AtomKind::E}); }
OperatorExpr F() { return OperatorExpr::atom({AtomKind::F}); }
OperatorExpr coproduct_into(int i) { return OperatorExpr::atom({AtomKind::CoproductInto, i - 1, 0}); }
OperatorExpr gamma() { return OperatorExpr::atom({AtomKind::Rank2Gamma}); }
OperatorExpr tau() { return OperatorExpr::atom({AtomKind::Rank2Tau}); }
OperatorExpr delta() { return OperatorExpr::atom({AtomKind::Rank2Delta}); }
OperatorExpr s() { return OperatorExpr::atom({AtomKind::Rank2S}); }
}  // namespace op

// ---------------------------------------------------------------------------
// Atomic actions

namespace {

int input_arity(const Atom& a, int arity) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) {
            throw std::invalid_argument(std::string("operator ") + what + " does not act on " +
                                        std::to_string(arity) + "-fold tensors");
        }
    };
    switch (a.kind) {
        case AtomKind::Swap:
            need(a.i >= 0 && a.j >= 0 && a.i < arity && a.j < arity, "swap");
            return arity;
        case AtomKind::AntipodeAt:
            need(a.i >= 0 && a.i < arity, "antipode");
            return arity;
        case AtomKind::E:
        case AtomKind::F:
            need(arity >= 2, "E/F");
            return arity;
        case AtomKind::CoproductInto:
            need(a.i >= 0 && a.i < arity, "coproduct");
            return arity + 1;
        default:
            need(arity == 2, "rank-2 matrix");
            return arity;
    }
}

}  // namespace

TensorVector apply_atom(const HopfAlgebra& hopf, const Atom& atom, const TensorVector& v) {
    TensorVector out;
    for (const auto& [t, c] : v) {
        const int arity = static_cast<int>(t.arity());
        input_arity(atom, arity);
        switch (atom.kind) {
            case AtomKind::Swap: {
                auto u = t;
                std::swap(u.slots[static_cast<std::size_t>(atom.i)], u.slots[static_cast<std::size_t>(atom.j)]);
                out.add(u, c);
                break;
            }
            case AtomKind::AntipodeAt: {
                auto u = t;
                auto [sign, e] = hopf.antipode_term(u.slots[static_cast<std::size_t>(atom.i)]);
                u.slots[static_cast<std::size_t>(atom.i)] = std::move(e);
                out.add(u, c * sign);
                break;
            }
            case AtomKind::E: {
                for (const auto& term : hopf.sweedler(t.slots[0])) {
                    auto u = t;
                    u.slots[0] = term.left;
                    u.slots[1] = hopf.product(term.right, t.slots[1]);
                    out.add(u, c * term.coeff);
                }
                break;
            }
            case AtomKind::F: {
                for (const auto& term : hopf.sweedler(t.slots[1])) {
                    auto u = t;
                    u.slots[0] = hopf.product(t.slots[0], term.left);
                    u.slots[1] = term.right;
                    out.add(u, c * term.coeff);
                }
                break;
            }
            case AtomKind::CoproductInto: {
                const auto i = static_cast<std::size_t>(atom.i);
                for (const auto& term : hopf.sweedler(t.slots[i])) {
                    auto u = t;
                    u.slots[i] = term.left;
                    u.slots.insert(u.slots.begin() + static_cast<std::ptrdiff_t>(i) + 1, term.right);
                    out.add(u, c * term.coeff);
                }
                break;
            }
            case AtomKind::Rank2Gamma: {
                const auto& a = t.slots[0];
                for (const auto& term : hopf.sweedler(t.slots[1])) {
                    auto [s1, left] = hopf.antipode_term(term.left);
                    auto [s2, right] = hopf.antipode_term(term.right);
                    out.add(TensorBasisElement{{std::move(left), hopf.product(a, right)}}, c * term.coeff * s1 * s2);
                }
                break;
            }
            case AtomKind::Rank2Tau:
                out.add(TensorBasisElement{{t.slots[1], t.slots[0]}}, c);
                break;
            case AtomKind::Rank2Delta: {
                auto [sign, e] = hopf.antipode_term(t.slots[0]);
                out.add(TensorBasisElement{{std::move(e), t.slots[1]}}, c * sign);
                break;
            }
            case AtomKind::Rank2S: {
                auto [sign, e] = hopf.antipode_term(t.slots[1]);
                out.add(TensorBasisElement{{std::move(e), t.slots[0]}}, c * sign);
                break;
            }
        }
    }
    return out;
}

namespace {

std::vector<int> total_weight(const HopfAlgebra& hopf, const TensorBasisElement& t) {
    std::vector<int> w(static_cast<std::size_t>(hopf.num_vars()), 0);
    for (const auto& slot : t.slots) {
        auto sw = hopf.weight(slot);
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] += sw[i];
        }
    }
    return w;
}

}  // namespace

TensorVector apply(const HopfAlgebra& hopf, const OperatorExpr& expr, const TensorVector& v, Reading reading) {
    TensorVector out;
    if (v.empty()) {
        return out;
    }
    const auto in_weight = total_weight(hopf, v.begin()->first);
    int out_arity = -1;
    for (const auto& term : expr.terms()) {
        TensorVector w = v;
        if (reading == Reading::right_action) {
            for (const auto& a : term.word) {
                w = apply_atom(hopf, a, w);
            }
        } else {
            for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
                w = apply_atom(hopf, *it, w);
            }
        }
        if (w.empty()) {
            continue;
        }
        const auto& first = w.begin()->first;
        if (out_arity >= 0 && static_cast<int>(first.arity()) != out_arity) {
            throw std::invalid_argument("operator sum mixes target arities");
        }
        out_arity = static_cast<int>(first.arity());
        if (total_weight(hopf, first) != in_weight) {
            throw std::logic_error("operator term changed the weight");
        }
        out.add(w, term.coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// TensorSpace

TensorSpace::TensorSpace(HopfAlgebra hopf, int arity) : hopf_(hopf), arity_(arity) {
    if (arity < 1) {
        throw std::invalid_argument("tensor arity must be positive");
    }
}

WeightVector TensorSpace::weight(const TensorBasisElement& t) const { return {total_weight(hopf_, t)}; }

std::string TensorSpace::to_string(const TensorBasisElement& t) const {
    std::string out;
    for (std::size_t i = 0; i < t.slots.size(); ++i) {
        if (i > 0) {
            out += "(x)";
        }
        out += hopf_.to_string(t.slots[i]);
    }
    return out;
}

std::string TensorSpace::to_string(const TensorVector& v) const {
    if (v.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [t, c] : v) {
        if (!out.empty()) {
            out += " + ";
        }
        out += c.get_str() + " " + to_string(t);
    }
    return out;
}

TensorBasisElement TensorSpace::make(std::vector<HopfElement> slots) const {
    if (static_cast<int>(slots.size()) != arity_) {
        throw std::invalid_argument("wrong number of tensor slots");
    }
    return TensorBasisElement{std::move(slots)};
}

std::vector<TensorBasisElement> TensorSpace::basis(const WeightVector& weight) const {
    if (weight.num_vars() != hopf_.num_vars()) {
        throw std::invalid_argument("weight has " + std::to_string(weight.num_vars()) + " entries but the algebra has " +
                                    std::to_string(hopf_.num_vars()) + " variables");
    }
    std::vector<TensorBasisElement> out;
    const auto m = static_cast<std::size_t>(hopf_.num_vars());
    const auto n = static_cast<std::size_t>(arity_);
    // slot_weights[s][v]: how many copies of variable v sit in slot s.
    std::vector<std::vector<int>> slot_weights(n, std::vector<int>(m, 0));
    std::function<void(std::size_t)> split_var = [&](std::size_t var) {
        if (var == m) {
            std::vector<std::vector<HopfElement>> choices(n);
            for (std::size_t s = 0; s < n; ++s) {
                choices[s] = hopf_.basis(slot_weights[s]);
            }
            TensorBasisElement t;
            t.slots.resize(n);
            std::function<void(std::size_t)> pick = [&](std::size_t s) {
                if (s == n) {
                    out.push_back(t);
                    return;
                }
                for (const auto& e : choices[s]) {
                    t.slots[s] = e;
                    pick(s + 1);
                }
            };
            pick(0);
            return;
        }
        for (const auto& comp : weak_compositions(weight.multidegrees[var], static_cast<int>(n))) {
            for (std::size_t s = 0; s < n; ++s) {
                slot_weights[s][var] = comp.multidegrees[s];
            }
            split_var(var + 1);
        }
    };
    split_var(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TensorVector> TensorSpace::bar_relations(const WeightVector& weight) const {
    std::vector<TensorVector> out;
    if (hopf_.commutative()) {
        return out;
    }
    for (int v = 0; v < hopf_.num_vars(); ++v) {
        if (weight.multidegrees[static_cast<std::size_t>(v)] == 0) {
            continue;
        }
        WeightVector smaller = weight;
        --smaller.multidegrees[static_cast<std::size_t>(v)];
        const auto gen = hopf_.generator(v);
        for (const auto& t : basis(smaller)) {
            // v (*) t = sum_i ... (x) (v h_i - h_i v) (x) ...
            TensorVector row;
            for (std::size_t i = 0; i < t.slots.size(); ++i) {
                auto left = t;
                left.slots[i] = hopf_.product(gen, t.slots[i]);
                auto right = t;
                right.slots[i] = hopf_.product(t.slots[i], gen);
                row.add(left, 1);
                row.add(right, -1);
            }
            if (!row.empty()) {
                out.push_back(std::move(row));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// BlockIndex

BlockIndex::BlockIndex(std::vector<TensorBasisElement> basis) : basis_(std::move(basis)) {
    index_.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        index_.emplace(basis_[i], static_cast<std::uint32_t>(i));
    }
}

std::uint32_t BlockIndex::column(const TensorBasisElement& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) {
        throw std::out_of_range("tensor is not in this weight block");
    }
    return it->second;
}

}  // namespace hairy
