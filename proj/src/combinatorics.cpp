#include "hairy/combinatorics.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hairy {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
            throw std::invalid_argument("partition parts must be weakly decreasing and nonnegative");
        }
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::dominates(const Partition& other) const {
    if (size() != other.size()) {
        return false;
    }
    int lhs = 0;
    int rhs = 0;
    const auto n = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        lhs += (*this)[i];
        rhs += other[i];
        if (lhs < rhs) {
            return false;
        }
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

int WeightVector::total() const { return std::accumulate(multidegrees.begin(), multidegrees.end(), 0); }

bool WeightVector::is_dominant() const {
    return std::is_sorted(multidegrees.begin(), multidegrees.end(), std::greater<>());
}

Partition WeightVector::sorted() const {
    auto parts = multidegrees;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

WeightVector as_weight(const Partition& lambda, int num_vars) {
    if (lambda.length() > num_vars) {
        throw std::invalid_argument("partition " + lambda.to_string() + " has more parts than variables");
    }
    WeightVector w;
    w.multidegrees.assign(static_cast<std::size_t>(num_vars), 0);
    for (int i = 0; i < lambda.length(); ++i) {
        w.multidegrees[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
    }
    return w;
}

std::vector<Partition> partitions_of(int n, int max_parts) {
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    std::vector<int> current;
    // Largest first part first gives descending lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts) {
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<WeightVector> weak_compositions(int n, int k) {
    std::vector<WeightVector> out;
    if (k <= 0) {
        if (n == 0) {
            out.push_back({});
        }
        return out;
    }
    std::vector<int> current(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == k - 1) {
            current[static_cast<std::size_t>(slot)] = remaining;
            out.push_back({current});
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current[static_cast<std::size_t>(slot)] = v;
            rec(slot + 1, remaining - v);
        }
    };
    rec(0, n);
    return out;
}

std::uint64_t orbit_size(const WeightVector& w) {
    std::map<int, int> counts;
    for (int v : w.multidegrees) {
        ++counts[v];
    }
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), w.multidegrees.size());
    for (const auto& [value, count] : counts) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(count));
        num /= f;
    }
    return num.get_ui();
}

namespace {

using ShapeKey = std::pair<std::vector<int>, std::size_t>;

// Strip the last letter's cells as a horizontal strip and recurse on the rest.
std::uint64_t kostka_rec(const std::vector<int>& shape, const std::vector<int>& content, std::size_t letters,
                         std::map<ShapeKey, std::uint64_t>& memo) {
    if (letters == 0) {
        return std::all_of(shape.begin(), shape.end(), [](int p) { return p == 0; }) ? 1 : 0;
    }
    // A shape with more rows than letters cannot be filled.
    std::size_t rows = 0;
    for (int p : shape) {
        rows += p > 0 ? 1 : 0;
    }
    if (rows > letters) {
        return 0;
    }
    const ShapeKey key{shape, letters};
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const int strip = content[letters - 1];
    std::uint64_t total = 0;
    std::vector<int> inner = shape;
    std::function<void(std::size_t, int)> choose = [&](std::size_t row, int left) {
        if (row == shape.size()) {
            if (left == 0) {
                total += kostka_rec(inner, content, letters - 1, memo);
            }
            return;
        }
        const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
        const int max_take = std::min(left, shape[row] - below);
        for (int take = 0; take <= max_take; ++take) {
            inner[row] = shape[row] - take;
            choose(row + 1, left - take);
        }
        inner[row] = shape[row];
    };
    choose(0, strip);
    memo.emplace(key, total);
    return total;
}

}  // namespace

std::uint64_t kostka(const Partition& lambda, const WeightVector& mu) {
    if (lambda.size() != mu.total()) {
        throw std::invalid_argument("kostka: |lambda| = " + std::to_string(lambda.size()) +
                                    " but content has total " + std::to_string(mu.total()));
    }
    std::map<ShapeKey, std::uint64_t> memo;
    return kostka_rec(lambda.parts(), mu.multidegrees, mu.multidegrees.size(), memo);
}

std::uint64_t weyl_dim(const Partition& lambda, int m) {
    if (lambda.length() > m) {
        return 0;
    }
    mpz_class num = 1;
    mpz_class den = 1;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    }
    mpz_class q = num / den;
    return q.get_ui();
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r.get_ui();
}

int cusp_dim(int w) {
    if (w < 12 || w % 2 != 0 || w == 14) {
        return 0;
    }
    const int base = w / 12;
    return std::max(0, w % 12 == 2 ? base - 1 : base);
}

int mf_dim(int w) {
    if (w < 0 || w % 2 != 0) {
        return 0;
    }
    const int base = w / 12;
    return std::max(0, w % 12 == 2 ? base : base + 1);
}

int omega_dim(int k) {
    if (k < 0 || k % 2 != 0) {
        return 0;
    }
    return (k + 2) / 3;
}

int omega_cusp_dim(int k) { return std::max(0, omega_dim(k) - 1); }

int s_prime(int w) {
    if (w % 2 != 0 || w < 4) {
        return 0;
    }
    const int two_m = w - 2;
    return std::max(0, (two_m + 2) / 3 - 1);
}

namespace {

void require_sorted(int a, int b, int c) {
    if (!(a >= b && b >= c && c >= 0)) {
        throw std::invalid_argument("bound formulas need a >= b >= c >= 0, got (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

}  // namespace

int epsilon_term(int a, int b, int c) {
    return (a > b && b > c && a % 2 == 0 && b % 2 == 0 && c % 2 == 0) ? 1 : 0;
}

int delta_term(int a, int b, int c) { return (a - b == b - c) ? cusp_dim(a - b + 2) : 0; }

int rank2_bound(int a, int b) {
    require_sorted(a, b, 0);
    if (a < b + 2) {
        return 0;
    }
    if (a % 2 == 0 && b % 2 == 0) {
        return cusp_dim(a - b + 2);
    }
    if (a % 2 == 1 && b % 2 == 1) {
        return cusp_dim(a - b + 2) + 1;
    }
    return 0;
}

int rank2_bound_unshifted(int a, int b) {
    require_sorted(a, b, 0);
    if (a < b + 2) {
        return 0;
    }
    if (a % 2 == 0 && b % 2 == 0) {
        return cusp_dim(a - b);
    }
    if (a % 2 == 1 && b % 2 == 1) {
        return cusp_dim(a - b) + 1;
    }
    return 0;
}

int rank3_bound(int a, int b, int c) {
    require_sorted(a, b, c);
    return cusp_dim(a - b + 2) + cusp_dim(b - c + 2) + delta_term(a, b, c) + epsilon_term(a, b, c);
}

int iota_bound(int a, int b, int c) {
    require_sorted(a, b, c);
    return cusp_dim(b - c + 2) + omega_cusp_dim(a - b) + delta_term(a, b, c) + epsilon_term(a, b, c);
}

int iota_bound_swapped(int a, int b, int c) {
    require_sorted(a, b, c);
    return cusp_dim(a - b + 2) + omega_cusp_dim(b - c + 2) + delta_term(a, b, c) + epsilon_term(a, b, c);
}

int omega3intro_bound(int a, int b, int c) {
    require_sorted(a, b, c);
    return cusp_dim(a - b + 2) + s_prime(b - c + 2) + delta_term(a, b, c) + epsilon_term(a, b, c);
}

int omega2_closed_form(int k, int l) {
    require_sorted(k, l, 0);
    if (l == 0) {
        return k % 2 == 0 ? omega_cusp_dim(k) : 0;
    }
    return k > l ? omega_dim(k - l) : 0;
}

}  // namespace hairy
