#include "thomschur/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "thomschur/errors.hpp"

namespace thomschur {

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors)
    : factors_(std::move(factors))
{
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return var_precedes(a.first, b.first); });
    // merge duplicates, drop zero exponents
    std::vector<std::pair<VarId, int>> merged;
    for (const auto& [v, e] : factors_) {
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& f) { return f.second == 0; }),
                 merged.end());
    factors_ = std::move(merged);
}

Monomial Monomial::variable(VarId v, int exp)
{
    return Monomial({{v, exp}});
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto& [v, e] : factors_)
        d += e;
    return d;
}

int Monomial::exponent(VarId v) const
{
    for (const auto& [w, e] : factors_)
        if (w == v)
            return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    std::vector<std::pair<VarId, int>> out;
    out.reserve(factors_.size() + o.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        if (j == o.factors_.size()
            || (i < factors_.size() && var_precedes(factors_[i].first, o.factors_[j].first)))
            out.push_back(factors_[i++]);
        else if (i == factors_.size() || var_precedes(o.factors_[j].first, factors_[i].first))
            out.push_back(o.factors_[j++]);
        else {
            out.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
            ++i, ++j;
        }
    }
    Monomial m;
    m.factors_ = std::move(out);
    return m;
}

std::pair<Monomial, bool> Monomial::divide(const Monomial& o) const
{
    std::vector<std::pair<VarId, int>> out;
    std::size_t i = 0;
    for (const auto& [v, e] : o.factors_) {
        while (i < factors_.size() && var_precedes(factors_[i].first, v))
            out.push_back(factors_[i++]);
        if (i == factors_.size() || factors_[i].first != v || factors_[i].second < e)
            return {Monomial(), false};
        if (factors_[i].second > e)
            out.emplace_back(v, factors_[i].second - e);
        ++i;
    }
    while (i < factors_.size())
        out.push_back(factors_[i++]);
    Monomial m;
    m.factors_ = std::move(out);
    return {m, true};
}

std::string Monomial::str() const
{
    if (factors_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first)
            os << "*";
        first = false;
        os << var_name(v);
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first != fb[j].first) {
            // the monomial with a positive exponent on the earlier variable
            // is the larger one
            return var_precedes(fb[j].first, fa[i].first);
        }
        if (fa[i].second != fb[j].second)
            return fa[i].second < fb[j].second;
        ++i, ++j;
    }
    return false; // equal (degrees match, all factors match)
}

MPoly::MPoly(Int c)
{
    if (c != 0)
        terms_.emplace(Monomial::one(), std::move(c));
}

MPoly MPoly::variable(VarId v)
{
    MPoly p;
    p.terms_.emplace(Monomial::variable(v), Int(1));
    return p;
}

MPoly MPoly::term(Int coeff, Monomial m)
{
    MPoly p;
    if (coeff != 0)
        p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool MPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const Int& MPoly::constant_value() const
{
    static const Int zero(0);
    if (terms_.empty())
        return zero;
    return terms_.begin()->second;
}

int MPoly::total_degree() const
{
    if (terms_.empty())
        return 0;
    return terms_.rbegin()->first.degree();
}

void MPoly::insert(const Monomial& m, Int c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MPoly MPoly::operator-() const
{
    MPoly out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

MPoly MPoly::operator+(const MPoly& o) const
{
    MPoly out = *this;
    out += o;
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const
{
    MPoly out = *this;
    out -= o;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        insert(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        insert(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const
{
    MPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.insert(ma * mb, ca * cb);
    return out;
}

MPoly MPoly::operator*(const Int& c) const
{
    MPoly out;
    if (c == 0)
        return out;
    for (const auto& [m, k] : terms_)
        out.terms_.emplace(m, k * c);
    return out;
}

MPoly MPoly::pow(int n) const
{
    MPoly out(1);
    for (int i = 0; i < n; ++i)
        out = out * *this;
    return out;
}

Int MPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

MPoly MPoly::coeff_partial(const Monomial& m) const
{
    MPoly out;
    for (const auto& [t, c] : terms_) {
        bool match = true;
        for (const auto& [v, e] : m.factors())
            if (t.exponent(v) != e) {
                match = false;
                break;
            }
        if (!match)
            continue;
        auto [q, ok] = t.divide(m);
        if (ok)
            out.insert(q, c);
    }
    return out;
}

MPoly MPoly::divide_exact(const MPoly& d) const
{
    if (d.is_zero())
        throw DivisionFailed("division by zero polynomial");
    MPoly rem = *this;
    MPoly quot;
    const auto& lead = *d.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.rbegin();
        auto [qm, ok] = rl.first.divide(lead.first);
        if (!ok || rl.second % lead.second != 0)
            throw DivisionFailed("polynomial division left a remainder");
        MPoly t = MPoly::term(rl.second / lead.second, qm);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

Int MPoly::eval(const std::map<VarId, Int>& point) const
{
    Int out = 0;
    for (const auto& [m, c] : terms_) {
        Int v = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = point.find(var);
            if (it == point.end())
                throw Error("eval: no value for variable " + var_name(var));
            for (int i = 0; i < e; ++i)
                v *= it->second;
        }
        out += v;
    }
    return out;
}

std::string MPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Int& c = it->second;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Int a = abs(c);
        if (it->first.empty())
            os << a;
        else if (a == 1)
            os << it->first.str();
        else
            os << a << "*" << it->first.str();
    }
    return os.str();
}

} // namespace thomschur
