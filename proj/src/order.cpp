#include "hhgabber/order.hpp"

#include <stdexcept>

namespace hhgabber {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// Graded reverse lexicographic: higher total degree wins; on ties the
// monomial whose last nonzero exponent difference is negative is larger.
int cmp_grevlex(const Monomial& a, const Monomial& b) {
    std::int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = a.arity(); i-- > 0;) {
        std::int32_t d = a[i] - b[i];
        if (d != 0)
            return d < 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity())
        throw std::invalid_argument("MonomialOrder::compare: arity mismatch");
    switch (kind_) {
    case Kind::lex:
        return cmp_lex(a, b);
    case Kind::grevlex:
        return cmp_grevlex(a, b);
    case Kind::weighted: {
        std::int64_t wa = a.weighted_degree(weight_), wb = b.weighted_degree(weight_);
        if (wa != wb)
            return wa < wb ? -1 : 1;
        return cmp_grevlex(a, b);
    }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind_) {
    case Kind::lex:
        return "lex";
    case Kind::grevlex:
        return "grevlex";
    case Kind::weighted: {
        std::string s = "weight:";
        for (std::size_t i = 0; i < weight_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(weight_[i]);
        }
        return s;
    }
    }
    return "";
}

}  // namespace hhgabber
