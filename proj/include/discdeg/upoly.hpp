#pragma once

#include <cstddef>
#include <vector>

#include "discdeg/rational.hpp"

namespace discdeg {

// Dense univariate polynomial over Rat, coefficients stored lowest degree
// first. The zero polynomial has an empty coefficient list.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rat& c) { return UPoly({c}); }
    // X^k
    static UPoly monomial(long k, const Rat& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rat& leading_coeff() const;
    // coefficient of X^k (0 beyond the stored range)
    Rat coeff(long k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rat& s) const;
    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

  private:
    void normalize();
    std::vector<Rat> coeffs_;
};

}  // namespace discdeg
