#include "lextrop/hlf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lextrop {

BaseField BaseField::prime(long p) {
    if (p < 2)
        throw std::invalid_argument("GF(p) needs a prime p >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("GF(p): " + std::to_string(p) + " is not prime");
    BaseField f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    return f;
}

Rational BaseField::normalize(const Rational& value) const {
    if (kind_ == Kind::rationals)
        return value;
    mpz_class p(p_);
    mpz_class num = value.get_num() % p;
    if (num < 0)
        num += p;
    mpz_class den = value.get_den() % p;
    if (den == 0)
        throw std::invalid_argument("denominator vanishes in GF(" + std::to_string(p_) + ")");
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::invalid_argument("denominator not invertible in GF(" + std::to_string(p_) + ")");
    return Rational((num * inv) % p);
}

Rational BaseField::div(const Rational& a, const Rational& b) const {
    Rational bn = normalize(b);
    if (bn == 0)
        throw std::invalid_argument("division by zero coefficient");
    return normalize(a / bn);
}

std::string BaseField::str() const {
    return kind_ == Kind::rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

FieldTower::FieldTower(BaseField base, std::vector<std::string> uniformizer_names)
    : base_(std::move(base)), names_(std::move(uniformizer_names)),
      ram_(names_.size(), 1) {
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty())
            throw std::invalid_argument("empty uniformizer name");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate uniformizer name: " + name);
    }
}

const std::string& FieldTower::uniformizer_name(int stage) const {
    if (stage < 1 || stage > height())
        throw std::invalid_argument("stage out of range: " + std::to_string(stage));
    return names_[static_cast<std::size_t>(stage - 1)];
}

bool FieldTower::same_field(const FieldTower& other) const {
    return base_ == other.base_ && names_ == other.names_;
}

bool FieldTower::operator==(const FieldTower& other) const {
    return same_field(other) && ram_ == other.ram_;
}

FieldTower FieldTower::with_ramification(std::vector<long> ram) const {
    if (static_cast<int>(ram.size()) != height())
        throw std::invalid_argument("ramification vector has wrong length");
    for (long r : ram)
        if (r < 1)
            throw std::invalid_argument("ramification index must be positive");
    FieldTower t(*this);
    t.ram_ = std::move(ram);
    return t;
}

FieldTower FieldTower::residue(int stage) const {
    if (stage < 1 || stage > height())
        throw std::invalid_argument("residue stage out of range");
    FieldTower t(*this);
    t.names_.erase(t.names_.begin() + (stage - 1));
    t.ram_.erase(t.ram_.begin() + (stage - 1));
    return t;
}

std::string FieldTower::str() const {
    std::string s = base_.str();
    for (const auto& name : names_)
        s += "((" + name + "))";
    return s;
}

FieldElement::FieldElement(FieldTower tower) : tower_(std::move(tower)) {}

FieldElement FieldElement::constant(const FieldTower& tower, const Rational& c) {
    FieldElement f(tower);
    f.insert_term(std::vector<long>(static_cast<std::size_t>(tower.height()), 0), c);
    return f;
}

FieldElement FieldElement::monomial(const FieldTower& tower, const Rational& coeff,
                                    const std::vector<Rational>& exponents) {
    if (static_cast<int>(exponents.size()) != tower.height())
        throw std::invalid_argument("monomial exponent vector has wrong length");
    return constant(tower, coeff).uniformizer_shift(exponents);
}

void FieldElement::insert_term(std::vector<long> key, const Rational& coeff) {
    Rational c = tower_.base().normalize(coeff);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second = tower_.base().add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

FieldElement FieldElement::rescaled(const std::vector<long>& new_ram) const {
    const auto& ram = tower_.ramification();
    if (new_ram == ram)
        return *this;
    FieldElement out(tower_.with_ramification(new_ram));
    for (const auto& [key, coeff] : terms_) {
        std::vector<long> k(key);
        for (std::size_t i = 0; i < k.size(); ++i) {
            long factor = new_ram[i] / ram[i];
            if (factor * ram[i] != new_ram[i])
                throw std::invalid_argument("incompatible ramification rescale");
            k[i] *= factor;
        }
        out.terms_.emplace(std::move(k), coeff);
    }
    return out;
}

std::pair<FieldElement, FieldElement> align(const FieldElement& a, const FieldElement& b) {
    if (!a.tower_.same_field(b.tower_))
        throw std::invalid_argument("field tower mismatch: " + a.tower_.str() + " vs " +
                                    b.tower_.str());
    const auto& ra = a.tower_.ramification();
    const auto& rb = b.tower_.ramification();
    std::vector<long> common(ra.size());
    for (std::size_t i = 0; i < ra.size(); ++i)
        common[i] = std::lcm(ra[i], rb[i]);
    return {a.rescaled(common), b.rescaled(common)};
}

std::vector<std::pair<std::vector<Rational>, Rational>> FieldElement::terms() const {
    std::vector<std::pair<std::vector<Rational>, Rational>> out;
    const auto& ram = tower_.ramification();
    for (const auto& [key, coeff] : terms_) {
        std::vector<Rational> e(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) {
            e[i] = Rational(key[i], ram[i]);
            e[i].canonicalize();
        }
        out.emplace_back(std::move(e), coeff);
    }
    return out;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    auto [a, b] = align(*this, other);
    FieldElement out(a.tower_);
    out.terms_ = a.terms_;
    for (const auto& [key, coeff] : b.terms_)
        out.insert_term(key, coeff);
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement out(tower_);
    for (const auto& [key, coeff] : terms_)
        out.terms_.emplace(key, tower_.base().neg(coeff));
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    return *this + (-other);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    auto [a, b] = align(*this, other);
    FieldElement out(a.tower_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            std::vector<long> k(ka);
            for (std::size_t i = 0; i < k.size(); ++i)
                k[i] += kb[i];
            out.insert_term(std::move(k), a.tower_.base().mul(ca, cb));
        }
    }
    return out;
}

FieldElement FieldElement::pow(long k) const {
    if (k == 0)
        return one(tower_);
    if (k < 0) {
        if (terms_.size() != 1)
            throw std::invalid_argument("negative power of a non-monomial field element");
        const auto& [key, coeff] = *terms_.begin();
        FieldElement inv(tower_);
        std::vector<long> nk(key);
        for (auto& e : nk)
            e = -e;
        inv.insert_term(std::move(nk), tower_.base().div(1, coeff));
        return inv.pow(-k);
    }
    FieldElement acc = one(tower_);
    for (long i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

bool FieldElement::operator==(const FieldElement& other) const {
    if (!tower_.same_field(other.tower_))
        return false;
    auto [a, b] = align(*this, other);
    return a.terms_ == b.terms_;
}

LexValue FieldElement::valuation() const {
    int n = tower_.height();
    if (n == 0)
        throw std::invalid_argument("valuation over the base field is trivial");
    if (terms_.empty())
        return LexValue::infinity(n);
    const std::vector<long>* best = nullptr;
    for (const auto& [key, coeff] : terms_) {
        if (best == nullptr) {
            best = &key;
            continue;
        }
        // lex comparison with the last coordinate most significant
        for (int s = n - 1; s >= 0; --s) {
            if (key[static_cast<std::size_t>(s)] != (*best)[static_cast<std::size_t>(s)]) {
                if (key[static_cast<std::size_t>(s)] < (*best)[static_cast<std::size_t>(s)])
                    best = &key;
                break;
            }
        }
    }
    const auto& ram = tower_.ramification();
    std::vector<Rational> coords(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        coords[static_cast<std::size_t>(i)] =
            Rational((*best)[static_cast<std::size_t>(i)], ram[static_cast<std::size_t>(i)]);
        coords[static_cast<std::size_t>(i)].canonicalize();
    }
    return LexValue(std::move(coords));
}

Rational FieldElement::t_order(int stage) const {
    if (stage < 1 || stage > tower_.height())
        throw std::invalid_argument("t_order stage out of range");
    if (terms_.empty())
        throw std::invalid_argument("t_order of zero");
    std::size_t i = static_cast<std::size_t>(stage - 1);
    long best = terms_.begin()->first[i];
    for (const auto& [key, coeff] : terms_)
        best = std::min(best, key[i]);
    Rational q(best, tower_.ramification()[i]);
    q.canonicalize();
    return q;
}

FieldElement FieldElement::reduce_once(int stage) const {
    if (stage < 1 || stage > tower_.height())
        throw std::invalid_argument("reduce_once stage out of range");
    std::size_t i = static_cast<std::size_t>(stage - 1);
    FieldElement out(tower_.residue(stage));
    for (const auto& [key, coeff] : terms_) {
        if (key[i] < 0) {
            FieldElement offender(tower_);
            offender.terms_.emplace(key, coeff);
            throw std::invalid_argument("reduce_once: negative " +
                                        tower_.uniformizer_name(stage) +
                                        "-exponent in term " + offender.str());
        }
        if (key[i] != 0)
            continue;
        std::vector<long> k(key);
        k.erase(k.begin() + static_cast<std::ptrdiff_t>(i));
        out.terms_.emplace(std::move(k), coeff);
    }
    return out;
}

FieldElement FieldElement::uniformizer_shift(const std::vector<Rational>& e) const {
    int n = tower_.height();
    if (static_cast<int>(e.size()) != n)
        throw std::invalid_argument("uniformizer_shift vector has wrong length");
    const auto& ram = tower_.ramification();
    std::vector<long> new_ram(ram);
    for (int i = 0; i < n; ++i) {
        const auto& den = e[static_cast<std::size_t>(i)].get_den();
        if (!den.fits_slong_p())
            throw std::invalid_argument("uniformizer_shift: denominator too large");
        new_ram[static_cast<std::size_t>(i)] =
            std::lcm(ram[static_cast<std::size_t>(i)], den.get_si());
    }
    FieldElement base = rescaled(new_ram);
    FieldElement out(base.tower_);
    for (const auto& [key, coeff] : base.terms_) {
        std::vector<long> k(key);
        for (int i = 0; i < n; ++i) {
            Rational step = e[static_cast<std::size_t>(i)] * new_ram[static_cast<std::size_t>(i)];
            k[static_cast<std::size_t>(i)] += to_long(step);
        }
        out.terms_.emplace(std::move(k), coeff);
    }
    return out;
}

std::string FieldElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : terms()) {
        Rational c = coeff;
        bool negative = c < 0;
        if (negative)
            c = -c;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0)
                continue;
            std::string f = tower_.uniformizer_names()[i];
            if (exps[i] != 1) {
                if (is_integer(exps[i]))
                    f += "^" + rational_to_string(exps[i]);
                else
                    f += "^(" + rational_to_string(exps[i]) + ")";
            }
            factors.push_back(std::move(f));
        }
        if (factors.empty() || c != 1) {
            factors.insert(factors.begin(), rational_to_string(c));
        }
        std::string term = factors[0];
        for (std::size_t i = 1; i < factors.size(); ++i)
            term += "*" + factors[i];
        if (first) {
            out << (negative ? "-" : "") << term;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << term;
        }
    }
    return out.str();
}

ResidueData residue_data(const FieldElement& f) {
    if (f.is_zero())
        throw std::invalid_argument("residue_data of zero");
    int n = f.tower().height();
    if (n == 0)
        throw std::invalid_argument("residue_data over the base field");
    LexValue v = f.valuation();
    std::vector<Rational> shift(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s)
        shift[static_cast<std::size_t>(s - 1)] = -v.coord(s);
    return ResidueData{v, f.uniformizer_shift(shift).reduce_once(n)};
}

}  // namespace lextrop
