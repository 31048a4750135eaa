#include "discdeg/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace discdeg {

void UPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::monomial(long k, const Rat& c) {
    if (k < 0) throw std::domain_error("UPoly::monomial: negative degree");
    std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
    v.back() = c;
    return UPoly(std::move(v));
}

const Rat& UPoly::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

Rat UPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

Rat UPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rat& s) const {
    std::vector<Rat> v = coeffs_;
    for (auto& c : v) c *= s;
    return UPoly(std::move(v));
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << "X";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace discdeg
