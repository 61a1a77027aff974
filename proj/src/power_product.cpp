#include "sgb/power_product.hpp"

#include <algorithm>

namespace sgb {

PowerProduct::PowerProduct(std::initializer_list<Factor> factors) {
    factors_.assign(factors.begin(), factors.end());
    std::sort(factors_.begin(), factors_.end());
    std::vector<Factor> merged;
    for (const auto& [var, exp] : factors_) {
        if (!merged.empty() && merged.back().first == var) {
            merged.back().second += exp;
        } else {
            merged.emplace_back(var, exp);
        }
    }
    std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
    factors_ = std::move(merged);
}

std::uint64_t PowerProduct::degree() const {
    std::uint64_t d = 0;
    for (const auto& [var, exp] : factors_) d += exp;
    return d;
}

std::uint32_t PowerProduct::exponent(std::uint32_t var) const {
    for (const auto& [v, e] : factors_) {
        if (v == var) return e;
        if (v > var) break;
    }
    return 0;
}

PowerProduct operator*(const PowerProduct& a, const PowerProduct& b) {
    PowerProduct out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first < ib->first) {
            out.factors_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            out.factors_.push_back(*ib++);
        } else {
            out.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
    out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
    return out;
}

PowerProduct PowerProduct::lcm(const PowerProduct& a, const PowerProduct& b) {
    PowerProduct out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first < ib->first) {
            out.factors_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            out.factors_.push_back(*ib++);
        } else {
            out.factors_.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
    out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
    return out;
}

std::optional<PowerProduct> PowerProduct::divide(const PowerProduct& a, const PowerProduct& b) {
    PowerProduct out;
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ib != b.factors_.end()) {
        if (ia == a.factors_.end() || ia->first > ib->first) return std::nullopt;
        if (ia->first < ib->first) {
            out.factors_.push_back(*ia++);
            continue;
        }
        if (ia->second < ib->second) return std::nullopt;
        if (ia->second > ib->second) out.factors_.emplace_back(ia->first, ia->second - ib->second);
        ++ia;
        ++ib;
    }
    out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
    return out;
}

bool PowerProduct::divides(const PowerProduct& multiple) const {
    auto im = multiple.factors_.begin();
    for (const auto& [var, exp] : factors_) {
        while (im != multiple.factors_.end() && im->first < var) ++im;
        if (im == multiple.factors_.end() || im->first != var || im->second < exp) return false;
    }
    return true;
}

std::string PowerProduct::str() const {
    if (is_one()) return "1";
    std::string out;
    for (const auto& [var, exp] : factors_) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(var);
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

}  // namespace sgb
