#include "lextrop/kpolynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lextrop {

WeightMatrix::WeightMatrix(std::vector<LexValue> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("weight matrix needs at least one variable");
    for (const auto& v : entries_) {
        if (v.is_infinity())
            throw std::invalid_argument("weight entries must be finite");
        if (v.dim() != entries_[0].dim())
            throw std::invalid_argument("weight entries must share dimension");
    }
}

WeightMatrix WeightMatrix::zero(int m, int n) {
    return WeightMatrix(std::vector<LexValue>(static_cast<std::size_t>(m), LexValue::zero(n)));
}

WeightMatrix WeightMatrix::negated() const {
    std::vector<LexValue> out;
    out.reserve(entries_.size());
    for (const auto& v : entries_)
        out.push_back(-v);
    return WeightMatrix(std::move(out));
}

std::string WeightMatrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0)
            out << ";";
        for (int s = 1; s <= entries_[i].dim(); ++s) {
            if (s > 1)
                out << ",";
            out << rational_to_string(entries_[i].coord(s));
        }
    }
    return out.str();
}

KPolynomial::KPolynomial(FieldTower tower, std::vector<std::string> vars)
    : tower_(std::move(tower)), vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty())
            throw std::invalid_argument("empty torus variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate torus variable: " + v);
        for (const auto& u : tower_.uniformizer_names())
            if (u == v)
                throw std::invalid_argument("torus variable collides with uniformizer: " + v);
    }
}

KPolynomial KPolynomial::constant(const FieldTower& tower, const std::vector<std::string>& vars,
                                  const FieldElement& c) {
    return monomial(tower, vars, c, std::vector<long>(vars.size(), 0));
}

KPolynomial KPolynomial::monomial(const FieldTower& tower, const std::vector<std::string>& vars,
                                  const FieldElement& coeff, const std::vector<long>& exps) {
    if (!tower.same_field(coeff.tower()))
        throw std::invalid_argument("coefficient tower mismatch");
    if (exps.size() != vars.size())
        throw std::invalid_argument("monomial exponent vector has wrong length");
    KPolynomial f(tower, vars);
    f.insert_term(exps, coeff);
    return f;
}

std::vector<std::vector<long>> KPolynomial::support() const {
    std::vector<std::vector<long>> out;
    out.reserve(terms_.size());
    for (const auto& [d, c] : terms_)
        out.push_back(d);
    return out;
}

const FieldElement& KPolynomial::coefficient(const std::vector<long>& d) const {
    auto it = terms_.find(d);
    if (it == terms_.end())
        throw std::invalid_argument("exponent not in support");
    return it->second;
}

void KPolynomial::insert_term(const std::vector<long>& d, const FieldElement& coeff) {
    if (d.size() != vars_.size())
        throw std::invalid_argument("term exponent vector has wrong length");
    if (coeff.is_zero())
        return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, coeff);
    } else {
        FieldElement sum = it->second + coeff;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    }
}

KPolynomial KPolynomial::operator+(const KPolynomial& other) const {
    if (!tower_.same_field(other.tower_) || vars_ != other.vars_)
        throw std::invalid_argument("polynomial ring mismatch");
    KPolynomial out(*this);
    for (const auto& [d, c] : other.terms_)
        out.insert_term(d, c);
    return out;
}

KPolynomial KPolynomial::operator-() const {
    KPolynomial out(tower_, vars_);
    for (const auto& [d, c] : terms_)
        out.terms_.emplace(d, -c);
    return out;
}

KPolynomial KPolynomial::operator-(const KPolynomial& other) const {
    return *this + (-other);
}

KPolynomial KPolynomial::operator*(const KPolynomial& other) const {
    if (!tower_.same_field(other.tower_) || vars_ != other.vars_)
        throw std::invalid_argument("polynomial ring mismatch");
    KPolynomial out(tower_, vars_);
    for (const auto& [da, ca] : terms_) {
        for (const auto& [db, cb] : other.terms_) {
            std::vector<long> d(da);
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] += db[i];
            out.insert_term(d, ca * cb);
        }
    }
    return out;
}

KPolynomial KPolynomial::pow(long k) const {
    if (k == 0)
        return constant(tower_, vars_, FieldElement::one(tower_));
    if (k < 0) {
        if (terms_.size() != 1)
            throw std::invalid_argument("negative power of a non-monomial polynomial");
        const auto& [d, c] = *terms_.begin();
        std::vector<long> nd(d);
        for (auto& e : nd)
            e = -e;
        return monomial(tower_, vars_, c.pow(-1), nd).pow(-k);
    }
    KPolynomial acc = constant(tower_, vars_, FieldElement::one(tower_));
    for (long i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

bool KPolynomial::operator==(const KPolynomial& other) const {
    if (!tower_.same_field(other.tower_) || vars_ != other.vars_)
        return false;
    if (terms_.size() != other.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second == jt->second))
            return false;
    }
    return true;
}

std::string KPolynomial::str() const {
    if (terms_.empty())
        return "0";
    // graded order, highest total degree first, lex tie-break
    std::vector<const std::pair<const std::vector<long>, FieldElement>*> ordered;
    for (const auto& term : terms_)
        ordered.push_back(&term);
    auto total = [](const std::vector<long>& d) {
        long t = 0;
        for (long e : d)
            t += e;
        return t;
    };
    std::sort(ordered.begin(), ordered.end(), [&](const auto* a, const auto* b) {
        long ta = total(a->first), tb = total(b->first);
        if (ta != tb)
            return ta > tb;
        return a->first > b->first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* term : ordered) {
        const auto& [d, coeff] = *term;
        std::string cs = coeff.str();
        bool negative = false;
        if (coeff.term_count() == 1 && cs.size() > 0 && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 0)
                continue;
            std::string f = vars_[i];
            if (d[i] != 1)
                f += "^" + std::to_string(d[i]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            factors.push_back(coeff.term_count() > 1 ? "(" + cs + ")" : cs);
        } else if (!(cs == "1" && coeff.term_count() == 1)) {
            factors.insert(factors.begin(),
                           coeff.term_count() > 1 ? "(" + cs + ")" : cs);
        }
        std::string body = factors[0];
        for (std::size_t i = 1; i < factors.size(); ++i)
            body += "*" + factors[i];
        if (first) {
            out << (negative ? "-" : "") << body;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
    }
    return out.str();
}

LexValue weight_of_term(const KPolynomial& f, const std::vector<long>& d, const WeightMatrix& w) {
    if (w.m() != f.var_count())
        throw std::invalid_argument("weight matrix has wrong number of variables");
    if (w.n() != f.tower().height())
        throw std::invalid_argument("weight matrix has wrong tower height");
    LexValue acc = f.coefficient(d).valuation();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != 0)
            acc = acc + scalar_mul(Rational(d[i]), w.entry(i));
    }
    return acc;
}

bool is_monomial(const KPolynomial& f) {
    return f.term_count() == 1;
}

KPolynomial stage_initial(const KPolynomial& f, int stage, const std::vector<Rational>& w) {
    if (f.is_zero())
        throw std::invalid_argument("stage_initial of zero polynomial");
    if (f.tower().height() != stage)
        throw std::invalid_argument("stage_initial: tower height " +
                                    std::to_string(f.tower().height()) + " does not match stage " +
                                    std::to_string(stage));
    if (static_cast<int>(w.size()) != f.var_count())
        throw std::invalid_argument("stage_initial: weight vector has wrong length");

    // x_i -> t_s^{w_i} x_i moves t_s^{<w,d>} into each coefficient
    std::vector<std::pair<std::vector<long>, FieldElement>> twisted;
    std::optional<Rational> min_order;
    for (const auto& [d, a] : f.terms()) {
        Rational shift(0);
        for (std::size_t i = 0; i < w.size(); ++i)
            shift += w[i] * d[i];
        std::vector<Rational> e(static_cast<std::size_t>(stage), Rational(0));
        e[static_cast<std::size_t>(stage - 1)] = shift;
        FieldElement a2 = a.uniformizer_shift(e);
        Rational ord = a2.t_order(stage);
        if (!min_order || ord < *min_order)
            min_order = ord;
        twisted.emplace_back(d, std::move(a2));
    }

    FieldTower down = f.tower().residue(stage);
    KPolynomial out(down, f.vars());
    for (auto& [d, a2] : twisted) {
        std::vector<Rational> e(static_cast<std::size_t>(stage), Rational(0));
        e[static_cast<std::size_t>(stage - 1)] = -*min_order;
        FieldElement reduced = a2.uniformizer_shift(e).reduce_once(stage);
        if (!reduced.is_zero())
            out = out + KPolynomial::monomial(down, f.vars(), reduced, d);
    }
    return out;
}

DegenerationChain initial_form_chain(const KPolynomial& f, const WeightMatrix& w) {
    if (f.is_zero())
        throw std::invalid_argument("initial form of zero polynomial");
    int n = f.tower().height();
    if (w.m() != f.var_count() || w.n() != n)
        throw std::invalid_argument("weight matrix shape mismatch");
    DegenerationChain chain;
    chain.stages.push_back(f);
    KPolynomial current = f;
    for (int s = n; s >= 1; --s) {
        std::vector<Rational> ws;
        ws.reserve(w.entries().size());
        for (const auto& entry : w.entries())
            ws.push_back(entry.coord(s));
        // record the t_s-power divided out at this stage
        std::optional<Rational> min_order;
        for (const auto& [d, a] : current.terms()) {
            Rational shift(0);
            for (std::size_t i = 0; i < ws.size(); ++i)
                shift += ws[i] * d[i];
            Rational ord = a.t_order(s) + shift;
            if (!min_order || ord < *min_order)
                min_order = ord;
        }
        chain.normalizations.push_back(*min_order);
        current = stage_initial(current, s, ws);
        chain.stages.push_back(current);
    }
    return chain;
}

KPolynomial initial_form(const KPolynomial& f, const WeightMatrix& w) {
    return initial_form_chain(f, w).final();
}

KPolynomial univariate_reduce(const KPolynomial& f, const std::vector<long>& b,
                              const std::string& var_name) {
    if (b.size() != static_cast<std::size_t>(f.var_count()))
        throw std::invalid_argument("univariate_reduce: direction has wrong length");
    std::map<long, std::vector<long>> images;
    for (const auto& d : f.support()) {
        long img = 0;
        for (std::size_t i = 0; i < b.size(); ++i)
            img += b[i] * d[i];
        auto [it, inserted] = images.emplace(img, d);
        if (!inserted) {
            std::ostringstream msg;
            msg << "univariate_reduce: direction not injective on support (exponents collide at "
                << img << ")";
            throw std::invalid_argument(msg.str());
        }
    }
    KPolynomial out(f.tower(), {var_name});
    for (const auto& [img, d] : images)
        out = out + KPolynomial::monomial(f.tower(), {var_name}, f.coefficient(d), {img});
    return out;
}

std::vector<long> generic_b(const KPolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("generic_b of zero polynomial");
    int m = f.var_count();
    auto injective = [&](const std::vector<long>& b) {
        std::set<long> seen;
        for (const auto& d : f.support()) {
            long img = 0;
            for (std::size_t i = 0; i < b.size(); ++i)
                img += b[i] * d[i];
            if (!seen.insert(img).second)
                return false;
        }
        return true;
    };
    for (long shell = 0; shell <= 1000; ++shell) {
        // lexicographic enumeration of [0, shell]^m restricted to max = shell
        std::vector<long> b(static_cast<std::size_t>(m), 0);
        while (true) {
            if (*std::max_element(b.begin(), b.end()) == shell && injective(b))
                return b;
            int i = m - 1;
            while (i >= 0 && b[static_cast<std::size_t>(i)] == shell) {
                b[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0)
                break;
            ++b[static_cast<std::size_t>(i)];
        }
    }
    throw std::runtime_error("generic_b: no injective direction found");
}

bool equal_up_to_monomial(const KPolynomial& f, const KPolynomial& g) {
    if (!f.tower().same_field(g.tower()) || f.vars() != g.vars())
        return false;
    if (f.is_zero() || g.is_zero())
        return f.is_zero() && g.is_zero();
    if (f.term_count() != g.term_count())
        return false;
    auto fs = f.support();
    auto gs = g.support();
    std::vector<long> shift(fs[0]);
    for (std::size_t i = 0; i < shift.size(); ++i)
        shift[i] -= gs[0][i];
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (std::size_t i = 0; i < shift.size(); ++i)
            if (fs[k][i] - gs[k][i] != shift[i])
                return false;
    }
    // candidate coefficient factor from the first pair of terms
    const FieldElement& af = f.coefficient(fs[0]);
    const FieldElement& ag = g.coefficient(gs[0]);
    int n = f.tower().height();
    FieldElement factor = FieldElement::one(af.tower());
    if (n > 0) {
        LexValue vf = af.valuation();
        LexValue vg = ag.valuation();
        std::vector<Rational> e(static_cast<std::size_t>(n));
        for (int s = 1; s <= n; ++s)
            e[static_cast<std::size_t>(s - 1)] = vf.coord(s) - vg.coord(s);
        factor = FieldElement::one(af.tower()).uniformizer_shift(e);
    }
    // scalar part: ratio of the coefficients at the lex-min exponent
    auto lead = [](const FieldElement& a) {
        auto ts = a.terms();
        std::size_t best = 0;
        for (std::size_t i = 1; i < ts.size(); ++i) {
            for (std::size_t s = ts[i].first.size(); s-- > 0;) {
                if (ts[i].first[s] != ts[best].first[s]) {
                    if (ts[i].first[s] < ts[best].first[s])
                        best = i;
                    break;
                }
            }
        }
        return ts[best].second;
    };
    Rational c = f.tower().base().div(lead(af), lead(ag));
    factor = factor * FieldElement::constant(factor.tower(), c);
    for (std::size_t k = 0; k < fs.size(); ++k) {
        if (!(f.coefficient(fs[k]) == factor * g.coefficient(gs[k])))
            return false;
    }
    return true;
}

}  // namespace lextrop
