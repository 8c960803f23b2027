#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hhgabber {

/// Variable context for polynomials. A cotangent ring carries the marker
/// pairing x_i with xi_i (positions i and n+i): that pairing is what the
/// canonical symplectic bracket and the symbol map read.
class PolyRing {
public:
    PolyRing(std::vector<std::string> names, bool cotangent = false)
        : names_(std::move(names)), cotangent_(cotangent) {
        if (names_.empty())
            throw std::invalid_argument("PolyRing: no variables");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("PolyRing: duplicate variable name " + names_[i]);
        if (cotangent_ && names_.size() % 2 != 0)
            throw std::invalid_argument("PolyRing: cotangent ring needs an even number of variables");
    }

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    bool cotangent() const { return cotangent_; }

    /// Number of (x, xi) pairs; only meaningful on cotangent rings.
    std::size_t pairs() const {
        if (!cotangent_)
            throw std::logic_error("PolyRing::pairs: not a cotangent ring");
        return names_.size() / 2;
    }

    /// Index of a variable name, or -1.
    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    bool operator==(const PolyRing& o) const {
        return cotangent_ == o.cotangent_ && names_ == o.names_;
    }

private:
    std::vector<std::string> names_;
    bool cotangent_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> names, bool cotangent = false) {
    return std::make_shared<const PolyRing>(std::move(names), cotangent);
}

/// k[x1..xn, xi1..xin] with the cotangent pairing, the home of principal
/// symbols and characteristic ideals.
inline RingPtr cotangent_ring(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("cotangent_ring: n must be positive");
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("xi" + std::to_string(i));
    return make_ring(std::move(names), true);
}

/// Same variables plus fresh ones appended; the cotangent marker is dropped
/// (the extension is never a cotangent ring).
inline RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
    std::vector<std::string> names = ring->names();
    names.insert(names.end(), extra.begin(), extra.end());
    return make_ring(std::move(names), false);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (a == b)
        return;
    if (!a || !b || !(*a == *b))
        throw std::invalid_argument(std::string(op) + ": ring mismatch");
}

}  // namespace hhgabber
