#pragma once

#include <map>
#include <optional>
#include <string>

#include "thomschur/alphabet.hpp"
#include "thomschur/partition.hpp"
#include "thomschur/schur.hpp"

namespace thomschur {

// Finitely supported integer combination of abstract Schur functions,
// indexed by partitions.  This is the representation used for Thom
// polynomials and their building blocks.
class SchurExpansion {
public:
    using Terms = std::map<Partition, Int>;

    SchurExpansion() = default;

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }
    Int coeff(const Partition& p) const;

    void add_term(const Partition& p, const Int& c);
    SchurExpansion operator+(const SchurExpansion& o) const;
    SchurExpansion operator-(const SchurExpansion& o) const;
    SchurExpansion operator*(const Int& c) const;
    bool operator==(const SchurExpansion& o) const { return terms_ == o.terms_; }

    // true when every partition has the same weight (vacuously true if empty)
    bool homogeneous() const;
    std::optional<int> common_weight() const;
    bool nonnegative() const;

    MPoly evaluate(const VirtualAlphabet& v) const;

    // raising operator on supports of length <= 3: pads each partition to
    // three parts and increments every part.  Longer supports are an error.
    SchurExpansion tau_shift() const;

    // optional metadata carried into the JSON form
    std::optional<int> r;
    std::optional<std::string> name;

    // canonical JSON interchange form; coefficients as decimal strings,
    // terms sorted by the graded lexicographic partition order
    std::string to_json() const;
    static SchurExpansion from_json(const std::string& text);

    // compact display rendering, e.g. "S_{133}+3S_{34}"
    std::string str() const;

private:
    Terms terms_;
};

// The unique integer combination of the weight-w Schur basis over the
// (m,n)-hook equal to p, found by symbolic coefficient matching against the
// template evaluation at variable alphabets (a1..am) - (b1..bn).
// Throws NotInSpan / NonIntegerCoefficients.
SchurExpansion expand_in_schur_basis(const MPoly& p, int m, int n, int weight);

// convenience: template defaults to (weight, weight)
SchurExpansion expand_in_schur_basis(const MPoly& p, int weight);

} // namespace thomschur
