#include "hairy/exactla.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace hairy {

void SparseMatrix::add_row(SparseRow row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    merged.reserve(row.size());
    for (auto& [col, val] : row) {
        if (col >= ncols_) {
            throw std::out_of_range("column index past the matrix width");
        }
        if (!merged.empty() && merged.back().first == col) {
            merged.back().second += val;
        } else {
            merged.emplace_back(col, std::move(val));
        }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    rows_.push_back(std::move(merged));
}

namespace {

struct Entry {
    std::uint32_t col;
    BigInt val;

    bool operator==(const Entry& o) const { return col == o.col && val == o.val; }
    bool operator<(const Entry& o) const { return col != o.col ? col < o.col : val < o.val; }
};

using IntRow = std::vector<Entry>;

// Divide by the content and make the leading entry positive.
void normalize(IntRow& row) {
    if (row.empty()) {
        return;
    }
    BigInt g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.val.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    if (row.front().val < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto& e : row) {
            mpz_divexact(e.val.get_mpz_t(), e.val.get_mpz_t(), g.get_mpz_t());
        }
    }
}

IntRow to_integer_row(const SparseRow& row) {
    BigInt den = 1;
    for (const auto& [col, val] : row) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), val.get_den_mpz_t());
    }
    IntRow out;
    out.reserve(row.size());
    for (const auto& [col, val] : row) {
        BigInt scaled = val.get_num() * (den / val.get_den());
        out.push_back({col, std::move(scaled)});
    }
    normalize(out);
    return out;
}

const BigInt* find_col(const IntRow& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const Entry& e, std::uint32_t c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? &it->val : nullptr;
}

// (a/g) * target - (b/g) * pivot, where a, b are the entries in column col.
IntRow eliminate(const IntRow& target, const IntRow& pivot, std::uint32_t col) {
    const BigInt& a = *find_col(pivot, col);
    const BigInt& b = *find_col(target, col);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const BigInt fa = a / g;
    const BigInt fb = b / g;
    IntRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    BigInt tmp;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].col < pivot[j].col)) {
            out.push_back({target[i].col, fa * target[i].val});
            ++i;
        } else if (i == target.size() || pivot[j].col < target[i].col) {
            out.push_back({pivot[j].col, -fb * pivot[j].val});
            ++j;
        } else {
            tmp = fa * target[i].val - fb * pivot[j].val;
            if (tmp != 0) {
                out.push_back({target[i].col, tmp});
            }
            ++i;
            ++j;
        }
    }
    normalize(out);
    return out;
}

class Eliminator {
public:
    Eliminator(std::vector<IntRow> rows, std::uint32_t ncols)
        : rows_(std::move(rows)), active_(rows_.size(), true), col_count_(ncols, 0), col_rows_(ncols) {
        for (std::uint32_t r = 0; r < rows_.size(); ++r) {
            for (const auto& e : rows_[r]) {
                ++col_count_[e.col];
                col_rows_[e.col].push_back(r);
            }
        }
        for (std::uint32_t c = 0; c < ncols; ++c) {
            if (col_count_[c] > 0) {
                queue_.insert({col_count_[c], c});
            }
        }
    }

    std::size_t run() {
        std::size_t rank = 0;
        while (!queue_.empty()) {
            auto [row, col] = choose_pivot();
            ++rank;
            pivot_on(row, col);
        }
        return rank;
    }

private:
    static constexpr int kCandidateColumns = 4;

    bool holds(std::uint32_t r, std::uint32_t c) const { return active_[r] && find_col(rows_[r], c) != nullptr; }

    // Rows currently holding column c, deduplicated and in increasing order.
    std::vector<std::uint32_t>& live_rows(std::uint32_t c) {
        auto& list = col_rows_[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        std::erase_if(list, [&](std::uint32_t r) { return !holds(r, c); });
        return list;
    }

    std::pair<std::uint32_t, std::uint32_t> choose_pivot() {
        std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
        std::pair<std::uint32_t, std::uint32_t> best{0, 0};
        bool found = false;
        int seen = 0;
        for (auto it = queue_.begin(); it != queue_.end() && seen < kCandidateColumns; ++it, ++seen) {
            const auto [count, c] = *it;
            for (std::uint32_t r : live_rows(c)) {
                const std::uint64_t cost = static_cast<std::uint64_t>(rows_[r].size() - 1) * (count - 1);
                const std::pair<std::uint32_t, std::uint32_t> cand{r, c};
                if (!found || cost < best_cost || (cost == best_cost && cand < best)) {
                    best_cost = cost;
                    best = cand;
                    found = true;
                }
            }
        }
        if (!found) {
            throw std::logic_error("elimination lost track of column counts");
        }
        return best;
    }

    void adjust(std::uint32_t c, int delta) {
        if (col_count_[c] > 0) {
            queue_.erase({col_count_[c], c});
        }
        col_count_[c] = static_cast<std::uint32_t>(static_cast<int>(col_count_[c]) + delta);
        if (col_count_[c] > 0) {
            queue_.insert({col_count_[c], c});
        }
    }

    void pivot_on(std::uint32_t p, std::uint32_t c) {
        const std::vector<std::uint32_t> targets = live_rows(c);
        active_[p] = false;
        for (const auto& e : rows_[p]) {
            adjust(e.col, -1);
        }
        for (std::uint32_t r : targets) {
            if (r == p) {
                continue;
            }
            IntRow updated = eliminate(rows_[r], rows_[p], c);
            // Column count bookkeeping by merging old and new supports.
            const IntRow& old = rows_[r];
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < old.size() || j < updated.size()) {
                if (j == updated.size() || (i < old.size() && old[i].col < updated[j].col)) {
                    adjust(old[i].col, -1);
                    ++i;
                } else if (i == old.size() || updated[j].col < old[i].col) {
                    adjust(updated[j].col, +1);
                    col_rows_[updated[j].col].push_back(r);
                    ++j;
                } else {
                    ++i;
                    ++j;
                }
            }
            rows_[r] = std::move(updated);
            if (rows_[r].empty()) {
                active_[r] = false;
            }
        }
        rows_[p].clear();
        rows_[p].shrink_to_fit();
    }

    std::vector<IntRow> rows_;
    std::vector<bool> active_;
    std::vector<std::uint32_t> col_count_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::set<std::pair<std::uint32_t, std::uint32_t>> queue_;
};

}  // namespace

std::size_t rank(const SparseMatrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.nrows());
    for (const auto& row : m.rows()) {
        auto r = to_integer_row(row);
        if (!r.empty()) {
            rows.push_back(std::move(r));
        }
    }
    // Relation sets repeat rows a lot; duplicates (up to sign) never add rank.
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return Eliminator(std::move(rows), m.ncols()).run();
}

std::size_t rank_rational(const SparseMatrix& m) {
    // Echelon rows keyed by leading column, each scaled to a leading 1.
    std::map<std::uint32_t, std::map<std::uint32_t, Rational>> pivots;
    for (const auto& src : m.rows()) {
        std::map<std::uint32_t, Rational> row(src.begin(), src.end());
        while (!row.empty()) {
            const auto lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                const Rational inv = 1 / row.begin()->second;
                for (auto& [c, v] : row) {
                    v *= inv;
                }
                pivots.emplace(lead, std::move(row));
                break;
            }
            const Rational factor = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto& slot = row[c];
                slot -= factor * v;
                if (slot == 0) {
                    row.erase(c);
                }
            }
        }
    }
    return pivots.size();
}

std::size_t quotient_dim(std::size_t ambient, const SparseMatrix& relations) {
    if (relations.ncols() != ambient) {
        throw std::invalid_argument("relation matrix width " + std::to_string(relations.ncols()) +
                                    " does not match ambient dimension " + std::to_string(ambient));
    }
    return ambient - rank(relations);
}

}  // namespace hairy
