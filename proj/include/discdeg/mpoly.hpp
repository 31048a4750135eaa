#pragma once

#include <map>
#include <string>
#include <vector>

#include "discdeg/rational.hpp"

namespace discdeg {

// Sparse multivariate polynomial over Rat. The variable list is fixed at
// construction; mixing polynomials built over different variable lists is a
// domain error, never a silent reindexing.
class MPoly {
  public:
    using Exponents = std::vector<unsigned>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rat& c);
    static MPoly variable(std::vector<std::string> vars, size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    long total_degree() const;  // -1 for the zero polynomial
    // max, over monomials, of the exponent sum restricted to the given
    // variable indices
    long degree_in(const std::vector<size_t>& var_indices) const;

    Rat eval(const std::vector<Rat>& point) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& s) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    // Coefficients reduced into {0,1} modulo 2; requires integer coefficients.
    MPoly reduced_mod2() const;

    // Deterministic rendering: monomials by descending total degree, ties
    // broken by descending lexicographic exponents.
    std::string str() const;

    void add_term(const Exponents& exps, const Rat& c);

  private:
    void check_compatible(const MPoly& o) const;
    std::vector<std::string> vars_;
    std::map<Exponents, Rat> terms_;  // no zero coefficients stored
};

}  // namespace discdeg
