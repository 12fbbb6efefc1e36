#pragma once

#include <string>
#include <vector>

#include "thomschur/mpoly.hpp"

namespace thomschur {

// A letter is a single atomic element of an alphabet: an integer linear form
// in variables plus an integer constant.  A letter like 2x or x1+x2 is one
// letter, never a multiset of variables.
class Letter {
public:
    Letter() : form_(0) {}
    explicit Letter(MPoly form); // throws UnsupportedProduct if not linear
    static Letter constant(Int c) { return Letter(MPoly(std::move(c))); }
    static Letter variable(const std::string& name);

    const MPoly& form() const { return form_; }
    Letter negated() const { return Letter(-form_); }

    bool operator==(const Letter& o) const { return form_ == o.form_; }
    bool operator<(const Letter& o) const;

private:
    MPoly form_;
};

// Finite multiset of letters.  Kept sorted for canonical iteration.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    Alphabet operator+(const Alphabet& o) const; // multiset union
    Alphabet negated() const;                    // letterwise negation (A*)
    // letterwise product with v; v must be a single variable or an integer
    Alphabet scaled(const Letter& v) const;

    void add(Letter l);
    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

// Formal difference plus - minus.  Deliberately not normalized: common
// letters are never cancelled at construction.
struct VirtualAlphabet {
    Alphabet plus;
    Alphabet minus;

    VirtualAlphabet() = default;
    VirtualAlphabet(Alphabet p, Alphabet m) : plus(std::move(p)), minus(std::move(m)) {}

    VirtualAlphabet negated() const { return {minus, plus}; }
    bool operator==(const VirtualAlphabet& o) const
    {
        return plus == o.plus && minus == o.minus;
    }
    std::string str() const;
};

// Named alphabets:
//   Bn -> (b1,...,bn)       Xn -> (x1,...,xn)      Yn -> (y1,...,yn)
//   An -> (a1,...,an)
//   D  -> ([2x1], [2x2], [x1+x2])
//   E  -> ([2x1], [2x2])
//   int:n -> n copies of the letter 1
Alphabet standard_alphabet(const std::string& spec);

// Whitespace-separated syntax for virtual alphabets, e.g.
//   "X2 - [2x1] - [2x2] - B1"   "x - [2x]"   "int:2 + [3]"
// Each non-separator token is a named alphabet or a single (bracketed or
// bare) letter given as an integer linear form such as 2x, x1+x2, 3.
VirtualAlphabet parse_virtual_alphabet(const std::string& text);

// single letter from text like "2x", "x1+x2", "-3", "[2x]"
Letter parse_letter(const std::string& text);

} // namespace thomschur
