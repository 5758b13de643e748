#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>

namespace hairy {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Finite formal linear combination with exact rational coefficients.
/// Zero coefficients are never stored.
template <typename Key>
class LinComb {
public:
    using map_type = std::map<Key, Rational>;

    LinComb() = default;
    LinComb(const Key& key, const Rational& coeff) { add(key, coeff); }

    void add(const Key& key, const Rational& coeff) {
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    void add(const LinComb& other, const Rational& scale = 1) {
        for (const auto& [key, coeff] : other.terms_) {
            add(key, coeff * scale);
        }
    }

    LinComb& operator*=(const Rational& scale) {
        if (scale == 0) {
            terms_.clear();
        } else {
            for (auto& [key, coeff] : terms_) {
                coeff *= scale;
            }
        }
        return *this;
    }

    Rational coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    friend LinComb operator+(LinComb lhs, const LinComb& rhs) {
        lhs.add(rhs);
        return lhs;
    }
    friend LinComb operator-(LinComb lhs, const LinComb& rhs) {
        lhs.add(rhs, -1);
        return lhs;
    }
    friend bool operator==(const LinComb& lhs, const LinComb& rhs) { return lhs.terms_ == rhs.terms_; }

private:
    map_type terms_;
};

}  // namespace hairy
