#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hhgabber {

/// Exponent vector of fixed length (the ring's arity). Exponents are
/// machine-width and additions are overflow-checked: degrees at this scale
/// never get near the limit, and wrapping silently would corrupt every
/// verdict downstream.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exp_(arity, 0) {}
    explicit Monomial(std::vector<std::int32_t> exponents) : exp_(std::move(exponents)) {
        for (auto e : exp_)
            if (e < 0)
                throw std::invalid_argument("Monomial: negative exponent");
    }

    static Monomial variable(std::size_t arity, std::size_t index, std::int32_t power = 1) {
        if (index >= arity)
            throw std::out_of_range("Monomial::variable: index out of range");
        Monomial m(arity);
        m.exp_[index] = power;
        return m;
    }

    std::size_t arity() const { return exp_.size(); }
    std::int32_t operator[](std::size_t i) const { return exp_[i]; }
    const std::vector<std::int32_t>& exponents() const { return exp_; }

    bool is_one() const {
        for (auto e : exp_)
            if (e != 0)
                return false;
        return true;
    }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (auto e : exp_)
            d += e;
        return d;
    }

    std::int64_t weighted_degree(const std::vector<std::int32_t>& w) const {
        if (w.size() != exp_.size())
            throw std::invalid_argument("weighted_degree: weight arity mismatch");
        std::int64_t d = 0;
        for (std::size_t i = 0; i < exp_.size(); ++i)
            d += static_cast<std::int64_t>(w[i]) * exp_[i];
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        check_arity(o);
        Monomial r(exp_.size());
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(exp_[i]) + o.exp_[i];
            if (s > INT32_MAX)
                throw std::overflow_error("Monomial: exponent overflow");
            r.exp_[i] = static_cast<std::int32_t>(s);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > o.exp_[i])
                return false;
        return true;
    }

    /// this / o; caller must ensure o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        check_arity(o);
        Monomial r(exp_.size());
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            if (o.exp_[i] > exp_[i])
                throw std::invalid_argument("Monomial: inexact division");
            r.exp_[i] = exp_[i] - o.exp_[i];
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_arity(b);
        Monomial r(a.exp_.size());
        for (std::size_t i = 0; i < a.exp_.size(); ++i)
            r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_arity(b);
        Monomial r(a.exp_.size());
        for (std::size_t i = 0; i < a.exp_.size(); ++i)
            r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        a.check_arity(b);
        for (std::size_t i = 0; i < a.exp_.size(); ++i)
            if (a.exp_[i] != 0 && b.exp_[i] != 0)
                return false;
        return true;
    }

    // Default comparison is the canonical term-map key order (plain
    // lexicographic on exponent vectors), not a term order.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    void check_arity(const Monomial& o) const {
        if (exp_.size() != o.exp_.size())
            throw std::invalid_argument("Monomial: arity mismatch");
    }

    std::vector<std::int32_t> exp_;
};

}  // namespace hhgabber
