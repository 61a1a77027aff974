#ifndef SGB_POWER_PRODUCT_HPP
#define SGB_POWER_PRODUCT_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgb {

/// A power-product: a product of indeterminates with natural exponents.
///
/// Stored as a sparse exponent vector sorted by variable index, with no zero
/// exponents; the empty vector is the unit power-product 1.
class PowerProduct {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (variable, exponent)

    PowerProduct() = default;

    /// Canonicalizes: sorts by variable, merges duplicates, drops zeros.
    PowerProduct(std::initializer_list<Factor> factors);

    static PowerProduct variable(std::uint32_t var, std::uint32_t exp = 1) {
        PowerProduct p;
        if (exp > 0) p.factors_.emplace_back(var, exp);
        return p;
    }

    bool is_one() const { return factors_.empty(); }
    std::uint64_t degree() const;
    std::uint32_t exponent(std::uint32_t var) const;
    const std::vector<Factor>& factors() const { return factors_; }

    friend PowerProduct operator*(const PowerProduct& a, const PowerProduct& b);

    /// Componentwise max of exponents.
    static PowerProduct lcm(const PowerProduct& a, const PowerProduct& b);

    /// a / b when b divides a componentwise, otherwise absent.
    static std::optional<PowerProduct> divide(const PowerProduct& a, const PowerProduct& b);

    bool divides(const PowerProduct& multiple) const;

    friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const PowerProduct& a, const PowerProduct& b) {
        return !(a == b);
    }

    /// Debug/test rendering with variables named x0, x1, ...
    std::string str() const;

private:
    std::vector<Factor> factors_;
};

}  // namespace sgb

#endif
