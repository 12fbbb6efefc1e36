#include "thomschur/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "thomschur/errors.hpp"

namespace thomschur {

namespace {

// total order on polynomials, used only to keep letter multisets canonical
bool mpoly_less(const MPoly& a, const MPoly& b)
{
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    MonoLess less;
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (less(ia->first, ib->first))
            return true;
        if (less(ib->first, ia->first))
            return false;
        if (ia->second != ib->second)
            return ia->second < ib->second;
    }
    return ia == ea && ib != eb;
}

} // namespace

Letter::Letter(MPoly form) : form_(std::move(form))
{
    if (form_.total_degree() > 1)
        throw UnsupportedProduct("a letter must be linear in the variables: "
                                 + form_.str());
}

Letter Letter::variable(const std::string& name)
{
    return Letter(MPoly::variable(var(name)));
}

bool Letter::operator<(const Letter& o) const
{
    return mpoly_less(form_, o.form_);
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters))
{
    std::sort(letters_.begin(), letters_.end());
}

Alphabet Alphabet::operator+(const Alphabet& o) const
{
    std::vector<Letter> out = letters_;
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return Alphabet(std::move(out));
}

Alphabet Alphabet::negated() const
{
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_)
        out.push_back(l.negated());
    return Alphabet(std::move(out));
}

Alphabet Alphabet::scaled(const Letter& v) const
{
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_)
        out.emplace_back(l.form() * v.form()); // Letter ctor rejects nonlinear results
    return Alphabet(std::move(out));
}

void Alphabet::add(Letter l)
{
    letters_.push_back(std::move(l));
    std::sort(letters_.begin(), letters_.end());
}

std::string Alphabet::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i)
            os << ", ";
        os << letters_[i].form().str();
    }
    os << ")";
    return os.str();
}

std::string VirtualAlphabet::str() const
{
    return plus.str() + " - " + minus.str();
}

namespace {

bool all_digits(const std::string& s)
{
    return !s.empty()
           && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Letter parse_letter(const std::string& text)
{
    std::string s = text;
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
        s = s.substr(1, s.size() - 2);
    if (s.empty())
        throw ParseError("empty letter");
    MPoly form;
    std::size_t i = 0;
    while (i < s.size()) {
        Int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        if (i >= s.size())
            throw ParseError("dangling sign in letter: " + text);
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            digits += s[i++];
        std::string name;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            name += s[i++];
        if (digits.empty() && name.empty())
            throw ParseError("cannot parse letter: " + text);
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        coeff *= sign;
        if (name.empty())
            form += MPoly(coeff);
        else
            form += MPoly::variable(var(name)) * coeff;
    }
    return Letter(form);
}

Alphabet standard_alphabet(const std::string& spec)
{
    auto family = [&](char prefix, const char* base) -> Alphabet {
        std::string digits = spec.substr(1);
        if (spec[0] != prefix || !all_digits(digits))
            throw UnknownSpec("unknown alphabet: " + spec);
        int n = std::stoi(digits);
        std::vector<Letter> letters;
        for (int i = 1; i <= n; ++i)
            letters.push_back(Letter::variable(base + std::to_string(i)));
        return Alphabet(std::move(letters));
    };
    if (spec.empty())
        throw UnknownSpec("empty alphabet name");
    if (spec == "D")
        return Alphabet({parse_letter("2x1"), parse_letter("2x2"), parse_letter("x1+x2")});
    if (spec == "E")
        return Alphabet({parse_letter("2x1"), parse_letter("2x2")});
    if (spec.rfind("int:", 0) == 0) {
        std::string digits = spec.substr(4);
        if (!all_digits(digits))
            throw UnknownSpec("unknown alphabet: " + spec);
        int n = std::stoi(digits);
        std::vector<Letter> letters(static_cast<std::size_t>(n), Letter::constant(1));
        return Alphabet(std::move(letters));
    }
    switch (spec[0]) {
    case 'A':
        return family('A', "a");
    case 'B':
        return family('B', "b");
    case 'X':
        return family('X', "x");
    case 'Y':
        return family('Y', "y");
    default:
        throw UnknownSpec("unknown alphabet: " + spec);
    }
}

VirtualAlphabet parse_virtual_alphabet(const std::string& text)
{
    std::istringstream is(text);
    std::string tok;
    VirtualAlphabet out;
    int side = +1; // next token joins plus (+1) or minus (-1)
    bool expect_operand = true;
    while (is >> tok) {
        if (tok == "+" || tok == "-") {
            if (expect_operand)
                throw ParseError("misplaced separator in: " + text);
            side = tok == "+" ? +1 : -1;
            expect_operand = true;
            continue;
        }
        Alphabet a;
        if (tok == "0" || tok == "()") {
            // empty alphabet
        } else {
            bool named = false;
            if (tok.find('[') == std::string::npos && std::isupper(static_cast<unsigned char>(tok[0]))) {
                a = standard_alphabet(tok);
                named = true;
            } else if (tok.rfind("int:", 0) == 0) {
                a = standard_alphabet(tok);
                named = true;
            }
            if (!named)
                a = Alphabet({parse_letter(tok)});
        }
        if (side > 0)
            out.plus = out.plus + a;
        else
            out.minus = out.minus + a;
        expect_operand = false;
    }
    if (expect_operand && !(out.plus.empty() && out.minus.empty()))
        throw ParseError("dangling separator in: " + text);
    return out;
}

} // namespace thomschur
