#pragma once

#include <map>

#include "hochhom/scalar.hpp"

namespace hochhom {

/**
 * Finite linear combination of basis keys with nonzero Scalar coefficients.
 *
 * Zero coefficients are never stored, so two combinations are equal exactly
 * when their maps are equal.
 */
template <typename Key>
class Combination
{
  public:
    using Map = std::map<Key, Scalar>;
    using const_iterator = typename Map::const_iterator;

    Combination() = default;

    Combination(const Key& key, const Scalar& coeff)
    {
        add(key, coeff);
    }

    void add(const Key& key, const Scalar& coeff)
    {
        if (coeff.is_zero())
            return;
        auto it = terms_.find(key);
        if (it == terms_.end())
        {
            terms_.emplace(key, coeff);
            return;
        }
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    void add(const Combination& other, const Scalar& factor)
    {
        for (const auto& [k, c] : other.terms_)
            add(k, c * factor);
    }

    void add(const Combination& other)
    {
        for (const auto& [k, c] : other.terms_)
            add(k, c);
    }

    const Scalar* find(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? nullptr : &it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    Combination scaled(const Scalar& factor) const
    {
        Combination out;
        for (const auto& [k, c] : terms_)
            out.add(k, c * factor);
        return out;
    }

    Combination operator-() const
    {
        Combination out;
        for (const auto& [k, c] : terms_)
            out.terms_.emplace(k, -c);
        return out;
    }

    Combination& operator+=(const Combination& b)
    {
        add(b);
        return *this;
    }

    Combination& operator-=(const Combination& b)
    {
        for (const auto& [k, c] : b.terms_)
            add(k, -c);
        return *this;
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }

    friend bool operator==(const Combination& a, const Combination& b)
    {
        return a.terms_ == b.terms_;
    }

  private:
    Map terms_;
};

}   // namespace hochhom
