#include "lextrop/valuegroup.hpp"

#include <sstream>
#include <stdexcept>

namespace lextrop {

LexValue::LexValue(std::vector<Rational> coords)
    : dim_(static_cast<int>(coords.size())), infinite_(false), coords_(std::move(coords)) {
    if (dim_ < 1)
        throw std::invalid_argument("LexValue needs dimension >= 1");
}

LexValue LexValue::infinity(int dim) {
    if (dim < 1)
        throw std::invalid_argument("LexValue needs dimension >= 1");
    return LexValue(dim, true);
}

LexValue LexValue::zero(int dim) {
    return LexValue(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
}

const Rational& LexValue::coord(int s) const {
    if (infinite_)
        throw std::invalid_argument("coordinate of infinite LexValue");
    if (s < 1 || s > dim_)
        throw std::invalid_argument("LexValue coordinate out of range");
    return coords_[static_cast<std::size_t>(s - 1)];
}

const std::vector<Rational>& LexValue::coords() const {
    if (infinite_)
        throw std::invalid_argument("coordinates of infinite LexValue");
    return coords_;
}

void LexValue::check_same_dim(const LexValue& other) const {
    if (dim_ != other.dim_)
        throw std::invalid_argument("LexValue dimension mismatch: " + std::to_string(dim_) +
                                    " vs " + std::to_string(other.dim_));
}

LexValue LexValue::operator+(const LexValue& other) const {
    check_same_dim(other);
    if (infinite_ || other.infinite_)
        return infinity(dim_);
    std::vector<Rational> sum(coords_);
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += other.coords_[i];
    return LexValue(std::move(sum));
}

LexValue LexValue::operator-() const {
    return scalar_mul(Rational(-1), *this);
}

LexValue LexValue::operator-(const LexValue& other) const {
    if (other.infinite_)
        throw std::invalid_argument("cannot subtract infinite LexValue");
    return *this + (-other);
}

bool LexValue::operator==(const LexValue& other) const {
    return lex_compare(*this, other) == std::strong_ordering::equal;
}

bool LexValue::operator<(const LexValue& other) const {
    return lex_compare(*this, other) == std::strong_ordering::less;
}

bool LexValue::operator<=(const LexValue& other) const {
    return lex_compare(*this, other) != std::strong_ordering::greater;
}

std::string LexValue::str() const {
    if (infinite_)
        return "inf";
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0)
            out << ", ";
        out << rational_to_string(coords_[i]);
    }
    out << ")";
    return out.str();
}

std::strong_ordering lex_compare(const LexValue& a, const LexValue& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("lex_compare: dimension mismatch");
    if (a.is_infinity() && b.is_infinity())
        return std::strong_ordering::equal;
    if (a.is_infinity())
        return std::strong_ordering::greater;
    if (b.is_infinity())
        return std::strong_ordering::less;
    // Scan from the most significant coordinate (the last one) downward.
    for (int s = a.dim(); s >= 1; --s) {
        int c = cmp(a.coord(s), b.coord(s));
        if (c < 0)
            return std::strong_ordering::less;
        if (c > 0)
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

LexValue scalar_mul(const Rational& c, const LexValue& a) {
    if (a.is_infinity())
        throw std::invalid_argument("scalar_mul of infinite LexValue");
    std::vector<Rational> scaled(a.coords());
    for (auto& q : scaled)
        q *= c;
    return LexValue(std::move(scaled));
}

MinLexResult min_lex(const std::vector<LexValue>& values) {
    if (values.empty())
        throw std::invalid_argument("min_lex of empty list");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (lex_compare(values[i], values[best]) == std::strong_ordering::less)
            best = i;
    }
    MinLexResult result{values[best], {}};
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (lex_compare(values[i], result.value) == std::strong_ordering::equal)
            result.achievers.push_back(i);
    }
    return result;
}

}  // namespace lextrop
