#pragma once
#include <map>
#include <type_traits>
#include <utility>

#include "diffschub/rational.hpp"

namespace diffschub {

// Finite formal linear combination of basis keys K with exact rational
// coefficients.  Zero coefficients are never stored; iteration order is the
// canonical order given by K::operator<, which makes every printed /
// serialized form deterministic.
template <class K>
class FormalSum {
public:
    using Terms = std::map<K, Rational>;
    using const_iterator = typename Terms::const_iterator;

    FormalSum() = default;

    static FormalSum unit(const K& key, Rational c = Rational(1)) {
        FormalSum s;
        s.add(key, c);
        return s;
    }

    void add(const K& key, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    FormalSum& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [k, v] : terms_) v *= c;
        }
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }
    friend FormalSum operator-(const FormalSum& a) { return Rational(-1) * a; }

    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormalSum& a, const FormalSum& b) {
        return !(a == b);
    }

    // Linear extension: f maps a key to a FormalSum over possibly different
    // keys; the whole sum maps term by term, coefficients carried through.
    template <class F>
    auto map(F&& f) const -> std::decay_t<decltype(f(std::declval<const K&>()))> {
        std::decay_t<decltype(f(std::declval<const K&>()))> out;
        for (const auto& [k, c] : terms_) {
            auto img = f(k);
            img *= c;
            out += img;
        }
        return out;
    }

private:
    Terms terms_;
};

// Split by a degree functional (e.g. |lambda| or l(w)); used wherever an
// operation processes homogeneous components independently.
template <class K, class SizeFn>
std::map<int, FormalSum<K>> split_homogeneous(const FormalSum<K>& s, SizeFn&& size) {
    std::map<int, FormalSum<K>> out;
    for (const auto& [k, c] : s) out[size(k)].add(k, c);
    return out;
}

// All final theorems of the calculus produce integers; a denominator anywhere
// downstream of them is silent corruption, so we make it loud.
template <class K>
void assert_integral(const FormalSum<K>& s, const char* what) {
    for (const auto& [k, c] : s)
        if (!c.is_integer())
            throw InternalInconsistency(std::string(what) + ": non-integer coefficient " +
                                        c.str());
}

}  // namespace diffschub
