#include "hairy/hopf.hpp"

#include "hairy/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace hairy {

std::string to_string(HopfKind kind) { return kind == HopfKind::Sym ? "sym" : "tensor"; }

HopfAlgebra::HopfAlgebra(HopfKind kind, int num_vars) : kind_(kind), num_vars_(num_vars) {
    if (num_vars < 1 || num_vars > 255) {
        throw std::invalid_argument("Hopf algebra needs between 1 and 255 variables");
    }
}

HopfElement HopfAlgebra::unit() const {
    if (kind_ == HopfKind::Sym) {
        return HopfElement{std::vector<std::uint8_t>(static_cast<std::size_t>(num_vars_), 0)};
    }
    return HopfElement{};
}

HopfElement HopfAlgebra::generator(int var) const {
    if (var < 0 || var >= num_vars_) {
        throw std::out_of_range("generator index out of range");
    }
    if (kind_ == HopfKind::Sym) {
        auto e = unit();
        e.data[static_cast<std::size_t>(var)] = 1;
        return e;
    }
    return HopfElement{{static_cast<std::uint8_t>(var)}};
}

HopfElement HopfAlgebra::make(std::vector<std::uint8_t> data) const {
    if (kind_ == HopfKind::Sym) {
        if (data.size() != static_cast<std::size_t>(num_vars_)) {
            throw std::invalid_argument("exponent vector length must equal the number of variables");
        }
    } else {
        for (auto letter : data) {
            if (letter >= num_vars_) {
                throw std::invalid_argument("word letter out of range");
            }
        }
    }
    return HopfElement{std::move(data)};
}

int HopfAlgebra::degree(const HopfElement& x) const {
    if (kind_ == HopfKind::Sym) {
        return std::accumulate(x.data.begin(), x.data.end(), 0);
    }
    return static_cast<int>(x.data.size());
}

std::vector<int> HopfAlgebra::weight(const HopfElement& x) const {
    if (kind_ == HopfKind::Sym) {
        return {x.data.begin(), x.data.end()};
    }
    std::vector<int> w(static_cast<std::size_t>(num_vars_), 0);
    for (auto letter : x.data) {
        ++w[letter];
    }
    return w;
}

std::string HopfAlgebra::to_string(const HopfElement& x) const {
    if (degree(x) == 0) {
        return "1";
    }
    auto letter = [](int v) {
        return v < 3 ? std::string(1, static_cast<char>('x' + v)) : "v" + std::to_string(v);
    };
    std::string out;
    if (kind_ == HopfKind::Sym) {
        for (int v = 0; v < num_vars_; ++v) {
            const int e = x.data[static_cast<std::size_t>(v)];
            if (e > 0) {
                out += letter(v);
                if (e > 1) {
                    out += "^" + std::to_string(e);
                }
            }
        }
    } else {
        for (auto v : x.data) {
            out += letter(v);
        }
    }
    return out;
}

HopfElement HopfAlgebra::product(const HopfElement& x, const HopfElement& y) const {
    if (kind_ == HopfKind::Sym) {
        if (x.data.size() != y.data.size()) {
            throw std::invalid_argument("product of elements from different algebras");
        }
        HopfElement out = x;
        for (std::size_t i = 0; i < out.data.size(); ++i) {
            out.data[i] = static_cast<std::uint8_t>(out.data[i] + y.data[i]);
        }
        return out;
    }
    HopfElement out = x;
    out.data.insert(out.data.end(), y.data.begin(), y.data.end());
    return out;
}

std::vector<SweedlerTerm> HopfAlgebra::sweedler(const HopfElement& x) const {
    std::vector<SweedlerTerm> out;
    if (kind_ == HopfKind::Sym) {
        // Binomial coproduct: x^a -> sum_b prod C(a_i, b_i) x^b (x) x^(a-b).
        const auto n = x.data.size();
        std::vector<std::uint8_t> beta(n, 0);
        while (true) {
            long coeff = 1;
            HopfElement left{beta};
            HopfElement right{x.data};
            for (std::size_t i = 0; i < n; ++i) {
                coeff *= static_cast<long>(binomial(x.data[i], beta[i]));
                right.data[i] = static_cast<std::uint8_t>(x.data[i] - beta[i]);
            }
            out.push_back({coeff, std::move(left), std::move(right)});
            std::size_t i = 0;
            while (i < n && beta[i] == x.data[i]) {
                beta[i] = 0;
                ++i;
            }
            if (i == n) {
                break;
            }
            ++beta[i];
        }
    } else {
        // Unshuffle: every subset of positions goes left, its complement right.
        const auto k = x.data.size();
        if (k > 30) {
            throw std::length_error("word too long for unshuffle coproduct");
        }
        std::map<HopfPair, long> merged;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            HopfPair p;
            for (std::size_t i = 0; i < k; ++i) {
                ((mask >> i) & 1u ? p.first : p.second).data.push_back(x.data[i]);
            }
            merged[std::move(p)] += 1;
        }
        out.reserve(merged.size());
        for (auto& [p, c] : merged) {
            out.push_back({c, p.first, p.second});
        }
        return out;
    }
    std::sort(out.begin(), out.end(), [](const SweedlerTerm& a, const SweedlerTerm& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    return out;
}

HopfPairVector HopfAlgebra::coproduct(const HopfElement& x) const {
    HopfPairVector out;
    for (const auto& t : sweedler(x)) {
        out.add({t.left, t.right}, t.coeff);
    }
    return out;
}

std::pair<int, HopfElement> HopfAlgebra::antipode_term(const HopfElement& x) const {
    const int sign = degree(x) % 2 == 0 ? 1 : -1;
    if (kind_ == HopfKind::Sym) {
        return {sign, x};
    }
    HopfElement rev{std::vector<std::uint8_t>(x.data.rbegin(), x.data.rend())};
    return {sign, std::move(rev)};
}

HopfVector HopfAlgebra::antipode(const HopfElement& x) const {
    auto [sign, e] = antipode_term(x);
    return HopfVector(e, sign);
}

Rational HopfAlgebra::counit(const HopfElement& x) const { return degree(x) == 0 ? 1 : 0; }

std::vector<HopfElement> HopfAlgebra::basis(const std::vector<int>& weight) const {
    if (weight.size() != static_cast<std::size_t>(num_vars_)) {
        throw std::invalid_argument("weight length must equal the number of variables");
    }
    if (kind_ == HopfKind::Sym) {
        return {HopfElement{std::vector<std::uint8_t>(weight.begin(), weight.end())}};
    }
    std::vector<std::uint8_t> letters;
    for (int v = 0; v < num_vars_; ++v) {
        letters.insert(letters.end(), static_cast<std::size_t>(weight[static_cast<std::size_t>(v)]),
                       static_cast<std::uint8_t>(v));
    }
    std::vector<HopfElement> out;
    do {
        out.push_back(HopfElement{letters});
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

HopfVector HopfAlgebra::product(const HopfVector& x, const HopfVector& y) const {
    HopfVector out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            out.add(product(a, b), ca * cb);
        }
    }
    return out;
}

HopfVector HopfAlgebra::antipode(const HopfVector& x) const {
    HopfVector out;
    for (const auto& [a, ca] : x) {
        auto [sign, e] = antipode_term(a);
        out.add(e, ca * sign);
    }
    return out;
}

}  // namespace hairy
