#include "sgb/order.hpp"

namespace sgb {

namespace {

// Lexicographic walk over two sparse exponent vectors, variable 0 first.
// Returns the comparison of the first differing exponent (missing = 0).
std::strong_ordering lex_cmp(const PowerProduct& a, const PowerProduct& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.begin(), ib = fb.begin();
    while (ia != fa.end() || ib != fb.end()) {
        if (ib == fb.end() || (ia != fa.end() && ia->first < ib->first)) {
            return std::strong_ordering::greater;  // a has the earlier variable
        }
        if (ia == fa.end() || ib->first < ia->first) {
            return std::strong_ordering::less;
        }
        if (ia->second != ib->second) {
            return ia->second < ib->second ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
        }
        ++ia;
        ++ib;
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const PowerProduct& a, const PowerProduct& b) const {
    switch (kind) {
        case Kind::lex:
            return lex_cmp(a, b);
        case Kind::deglex: {
            if (auto c = a.degree() <=> b.degree(); c != 0) return c;
            return lex_cmp(a, b);
        }
        case Kind::degrevlex: {
            if (auto c = a.degree() <=> b.degree(); c != 0) return c;
            // Equal degree: smaller exponent at the first differing variable wins.
            auto c = lex_cmp(a, b);
            if (c == std::strong_ordering::less) return std::strong_ordering::greater;
            if (c == std::strong_ordering::greater) return std::strong_ordering::less;
            return std::strong_ordering::equal;
        }
    }
    return std::strong_ordering::equal;  // unreachable
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::lex: return "lex";
        case Kind::deglex: return "deglex";
        case Kind::degrevlex: return "degrevlex";
    }
    return "?";
}

std::string Term::str() const {
    return "(" + pp.str() + ", " + std::to_string(component) + ")";
}

std::optional<PowerProduct> term_divide(const Term& u, const Term& v) {
    if (u.component != v.component) return std::nullopt;
    return PowerProduct::divide(u.pp, v.pp);
}

std::strong_ordering TermOrder::compare(const Term& u, const Term& v) const {
    if (kind == Kind::pot) {
        if (auto c = u.component <=> v.component; c != 0) return c;
        return mono.compare(u.pp, v.pp);
    }
    if (auto c = mono.compare(u.pp, v.pp); c != 0) return c;
    return u.component <=> v.component;
}

std::string TermOrder::name() const { return kind == Kind::pot ? "pot" : "top"; }

}  // namespace sgb
