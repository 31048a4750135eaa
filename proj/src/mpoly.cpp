#include "discdeg/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace discdeg {

void MPoly::check_compatible(const MPoly& o) const {
    if (vars_ != o.vars_)
        throw std::domain_error("MPoly: mixing polynomials over different variable lists");
}

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, size_t index) {
    MPoly p(std::move(vars));
    if (index >= p.nvars()) throw std::domain_error("MPoly::variable: index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

void MPoly::add_term(const Exponents& exps, const Rat& c) {
    if (exps.size() != vars_.size())
        throw std::domain_error("MPoly: exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0u)));
    return d;
}

long MPoly::degree_in(const std::vector<size_t>& var_indices) const {
    if (is_zero()) throw std::domain_error("degree_in: zero polynomial");
    long d = 0;
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (size_t i : var_indices) s += e.at(i);
        d = std::max(d, s);
    }
    return d;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size())
        throw std::domain_error("MPoly::eval: wrong point dimension");
    Rat r = 0;
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) m *= pow(point[i], static_cast<long>(e[i]));
        r += m;
    }
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_compatible(o);
    MPoly r(vars_);
    Exponents sum(vars_.size());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (size_t i = 0; i < sum.size(); ++i) sum[i] = e1[i] + e2[i];
            r.add_term(sum, c1 * c2);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& s) const {
    MPoly r(vars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MPoly MPoly::reduced_mod2() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Int n = to_integer(c);
        if (mpz_odd_p(n.get_mpz_t())) r.terms_.emplace(e, 1);
    }
    return r;
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::vector<const std::pair<const Exponents, Rat>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto tdeg = [](const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0u);
    };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        unsigned da = tdeg(a->first), db = tdeg(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const auto& [e, c] = *t;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        bool has_vars = tdeg(e) > 0;
        bool coeff_printed = (a != 1 || !has_vars);
        if (coeff_printed) os << a.get_str();
        bool need_star = coeff_printed;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace discdeg
