#pragma once

#include <cstdint>
#include <map>
#include <type_traits>
#include <utility>

namespace nano {

/// Finitely supported integer combination of keys: an element of the free
/// abelian group on Key. Zero coefficients are never stored.
template <class Key>
class FormalSum {
public:
    using Coefficient = std::int64_t;
    using Terms = std::map<Key, Coefficient>;

    FormalSum() = default;

    static FormalSum of(Key key, Coefficient c = 1) {
        FormalSum s;
        s.add(std::move(key), c);
        return s;
    }

    void add(const Key& key, Coefficient c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh && (it->second += c) == 0) terms_.erase(it);
    }

    Coefficient coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Sum of all coefficients (the augmentation).
    Coefficient total() const {
        Coefficient t = 0;
        for (const auto& [k, c] : terms_) t += c;
        return t;
    }

    FormalSum& operator+=(const FormalSum& other) {
        for (const auto& [k, c] : other.terms_) add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& other) {
        for (const auto& [k, c] : other.terms_) add(k, -c);
        return *this;
    }
    FormalSum& operator*=(Coefficient s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator-(FormalSum a) { return a *= -1; }
    friend FormalSum operator*(Coefficient s, FormalSum a) { return a *= s; }

    bool operator==(const FormalSum&) const = default;

    /// Linear extension of a key map; terms landing on the same key merge.
    template <class F>
    auto rekey(F&& f) const {
        using Out = std::decay_t<std::invoke_result_t<F&, const Key&>>;
        FormalSum<Out> out;
        for (const auto& [k, c] : terms_) out.add(f(k), c);
        return out;
    }

    /// Linear extension of a map Key -> FormalSum<Out>.
    template <class F>
    auto extend(F&& f) const {
        using Image = std::decay_t<std::invoke_result_t<F&, const Key&>>;
        Image out;
        for (const auto& [k, c] : terms_) {
            Image part = f(k);
            part *= c;
            out += part;
        }
        return out;
    }

private:
    Terms terms_;
};

}  // namespace nano
