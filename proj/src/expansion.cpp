#include "thomschur/expansion.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "thomschur/errors.hpp"
#include "thomschur/matrix.hpp"

namespace thomschur {

Int SchurExpansion::coeff(const Partition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? Int(0) : it->second;
}

void SchurExpansion::add_term(const Partition& p, const Int& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SchurExpansion SchurExpansion::operator+(const SchurExpansion& o) const
{
    SchurExpansion out = *this;
    for (const auto& [p, c] : o.terms_)
        out.add_term(p, c);
    return out;
}

SchurExpansion SchurExpansion::operator-(const SchurExpansion& o) const
{
    SchurExpansion out = *this;
    for (const auto& [p, c] : o.terms_)
        out.add_term(p, -c);
    return out;
}

SchurExpansion SchurExpansion::operator*(const Int& c) const
{
    SchurExpansion out;
    if (c == 0)
        return out;
    for (const auto& [p, k] : terms_)
        out.terms_.emplace(p, k * c);
    return out;
}

std::optional<int> SchurExpansion::common_weight() const
{
    std::optional<int> w;
    for (const auto& [p, c] : terms_) {
        if (!w)
            w = p.weight();
        else if (*w != p.weight())
            return std::nullopt;
    }
    return w;
}

bool SchurExpansion::homogeneous() const
{
    return terms_.empty() || common_weight().has_value();
}

bool SchurExpansion::nonnegative() const
{
    for (const auto& [p, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

MPoly SchurExpansion::evaluate(const VirtualAlphabet& v) const
{
    SeriesContext ctx(v);
    MPoly out;
    for (const auto& [p, c] : terms_)
        out += schur(p, ctx) * c;
    return out;
}

SchurExpansion SchurExpansion::tau_shift() const
{
    SchurExpansion out;
    out.r = r;
    out.name = name;
    for (const auto& [p, c] : terms_) {
        if (p.length() > 3)
            throw LengthExceeded("raising operator needs partitions of length <= 3, got "
                                 + p.str());
        std::vector<int> parts = p.padded(3);
        for (int& x : parts)
            ++x;
        out.add_term(Partition(parts), c);
    }
    return out;
}

std::string SchurExpansion::to_json() const
{
    nlohmann::ordered_json j;
    if (r)
        j["r"] = *r;
    if (name)
        j["name"] = *name;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [p, c] : terms_) {
        nlohmann::ordered_json t;
        t["partition"] = p.parts();
        t["coeff"] = c.str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

SchurExpansion SchurExpansion::from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    SchurExpansion out;
    if (j.contains("r"))
        out.r = j["r"].get<int>();
    if (j.contains("name"))
        out.name = j["name"].get<std::string>();
    for (const auto& t : j.at("terms")) {
        std::vector<int> parts = t.at("partition").get<std::vector<int>>();
        Int c(t.at("coeff").get<std::string>());
        out.add_term(Partition(parts), c);
    }
    return out;
}

std::string SchurExpansion::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        Int a = abs(c);
        if (a != 1)
            os << a;
        os << "S_{" << p.str() << "}";
    }
    return os.str();
}

SchurExpansion expand_in_schur_basis(const MPoly& p, int m, int n, int weight)
{
    PartitionFilter hook;
    hook.in_hook = std::make_pair(m, n);
    std::vector<Partition> basis = enumerate_partitions(weight, hook);

    Alphabet A = standard_alphabet("A" + std::to_string(m));
    Alphabet B = standard_alphabet("B" + std::to_string(n));
    VirtualAlphabet v(A, B);
    SeriesContext ctx(v);

    std::vector<MPoly> evals;
    evals.reserve(basis.size());
    for (const auto& part : basis)
        evals.push_back(schur(part, ctx));

    // union of monomials across the basis evaluations and the target
    std::map<Monomial, int, MonoLess> mono_index;
    auto collect = [&](const MPoly& q) {
        for (const auto& [mono, c] : q.terms())
            mono_index.emplace(mono, 0);
    };
    for (const auto& e : evals)
        collect(e);
    collect(p);
    int idx = 0;
    for (auto& [mono, i] : mono_index)
        i = idx++;

    RatMatrix M(static_cast<int>(mono_index.size()), static_cast<int>(basis.size()));
    std::vector<Rat> rhs(mono_index.size(), Rat(0));
    for (std::size_t col = 0; col < evals.size(); ++col)
        for (const auto& [mono, c] : evals[col].terms())
            M.at(mono_index[mono], static_cast<int>(col)) = Rat(c);
    for (const auto& [mono, c] : p.terms())
        rhs[static_cast<std::size_t>(mono_index[mono])] = Rat(c);

    LinearSolution sol;
    try {
        sol = solve_rational_system(M, rhs);
    } catch (const InconsistentSystem&) {
        throw NotInSpan("polynomial is not in the span of the hook Schur basis");
    }
    // the basis is linearly independent, so the solve cannot be underdetermined
    if (sol.kernel_dim != 0)
        throw Error("hook Schur basis unexpectedly dependent");

    SchurExpansion out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Rat& c = sol.solution[i];
        if (c == 0)
            continue;
        if (denominator(c) != 1)
            throw NonIntegerCoefficients("expansion coefficient " + c.str()
                                         + " is not an integer");
        out.add_term(basis[i], numerator(c));
    }
    return out;
}

SchurExpansion expand_in_schur_basis(const MPoly& p, int weight)
{
    return expand_in_schur_basis(p, weight, weight, weight);
}

} // namespace thomschur
