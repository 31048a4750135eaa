#include "discdeg/formulas.hpp"

#include <algorithm>

#include "discdeg/symmetric.hpp"

namespace discdeg {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::unit: return "unit";
        case Verdict::irreducible: return "irreducible";
        case Verdict::square_of_irreducible: return "square_of_irreducible";
    }
    return "?";
}

long mu(const Profile& pr) {
    return (pr.p() == 2 && pr.n() % 2 == 0) ? 2 : 1;
}

bool is_defective(const Profile& pr) {
    if (pr.c() == pr.N() + 1) return false;
    return std::all_of(pr.degrees().begin(), pr.degrees().end(),
                       [](long d) { return d == 1; });
}

namespace {

Int divide_by_mu_exact(const Rat& raw, long m, const char* what) {
    Int value = to_integer(raw);
    if (value % m != 0)
        throw invariant_violation(std::string(what) + ": value " + value.get_str() +
                                  " is not divisible by mu=" + std::to_string(m) +
                                  " (this would falsify the degree theorem)");
    return value / m;
}

}  // namespace

Int deg_i_closed(const Profile& pr, long i) {
    if (i < 1 || i > pr.c()) throw std::domain_error("deg_i_closed: index out of range");
    if (is_defective(pr)) return 0;
    const long c = pr.c(), N = pr.N();
    const std::vector<Rat> e = pr.shifted_degrees_rat();
    Rat inner = 0;
    for (long a = 0; a <= N; ++a)
        inner += pow(Rat(pr.e(i)), a) * hk(N - a - c + 1, e);
    Rat prod = 1;
    for (long j = 1; j <= c; ++j)
        if (j != i) prod *= pr.d(j);
    return divide_by_mu_exact(prod * inner, mu(pr), "deg_i_closed");
}

Int deg_var_closed(const Profile& pr) {
    if (is_defective(pr)) return 0;
    const long c = pr.c(), N = pr.N();
    Rat prod = 1;
    for (long j = 1; j <= c; ++j) prod *= pr.d(j);
    return divide_by_mu_exact(prod * hk(N - c + 1, pr.shifted_degrees_rat()), mu(pr),
                              "deg_var_closed");
}

DegreeReport closed_form_report(const Profile& pr) {
    DegreeReport r;
    r.mu = mu(pr);
    r.defective = is_defective(pr);
    r.deg_i.reserve(static_cast<size_t>(pr.c()));
    for (long i = 1; i <= pr.c(); ++i) {
        r.deg_i.push_back(deg_i_closed(pr, i));
        r.deg += r.deg_i.back();
    }
    r.deg_var = deg_var_closed(pr);
    if (r.defective) r.verdict = Verdict::unit;
    else if (pr.p() == 2 && pr.n() % 2 == 0) r.verdict = Verdict::square_of_irreducible;
    else r.verdict = Verdict::irreducible;
    return r;
}

Verdict mod_p_report(const Profile& pr, long p) {
    Profile at_p(pr.N(), pr.degrees(), p);  // validates primality
    if (is_defective(at_p)) return Verdict::unit;
    if (p == 2 && at_p.n() % 2 == 0) return Verdict::square_of_irreducible;
    return Verdict::irreducible;
}

std::pair<std::vector<MPoly>, MPoly> symbolic_degrees(long c, long N) {
    if (c < 1 || c > N + 1) throw std::domain_error("symbolic_degrees: need 1 <= c <= N+1");
    std::vector<std::string> vars;
    for (long i = 1; i <= c; ++i) vars.push_back("d" + std::to_string(i));
    const MPoly zero(vars);
    const MPoly one = MPoly::constant(vars, 1);

    std::vector<MPoly> d, e;
    for (long i = 0; i < c; ++i) {
        d.push_back(MPoly::variable(vars, static_cast<size_t>(i)));
        e.push_back(d.back() - one);
    }

    std::vector<MPoly> deg_i;
    for (long i = 0; i < c; ++i) {
        MPoly inner = zero;
        MPoly ei_pow = one;
        for (long a = 0; a <= N; ++a) {
            inner += ei_pow * complete_homogeneous<MPoly>(N - a - c + 1, e, zero, one);
            ei_pow = ei_pow * e[static_cast<size_t>(i)];
        }
        MPoly prod = one;
        for (long j = 0; j < c; ++j)
            if (j != i) prod = prod * d[static_cast<size_t>(j)];
        deg_i.push_back(prod * inner);
    }

    MPoly prod_all = one;
    for (long j = 0; j < c; ++j) prod_all = prod_all * d[static_cast<size_t>(j)];
    MPoly deg_var = prod_all * complete_homogeneous<MPoly>(N - c + 1, e, zero, one);

    return {std::move(deg_i), std::move(deg_var)};
}

Rat petitcalcul_identity(long c, long N, const std::vector<Rat>& sample) {
    if (static_cast<long>(sample.size()) != c)
        throw std::domain_error("petitcalcul_identity: sample length must equal c");
    for (size_t a = 0; a < sample.size(); ++a)
        for (size_t b = a + 1; b < sample.size(); ++b)
            if (sample[a] == sample[b])
                throw std::domain_error("petitcalcul_identity: sample values must be distinct");
    Rat total = 0;
    for (long l = 0; l < c; ++l) {
        Rat denom = 1;
        for (long lp = 0; lp < c; ++lp)
            if (lp != l) denom *= sample[static_cast<size_t>(l)] - sample[static_cast<size_t>(lp)];
        for (long i = 0; i < c; ++i) {
            if (i == l) continue;
            Rat ei = sample[static_cast<size_t>(i)] - 1;
            Rat el = sample[static_cast<size_t>(l)] - 1;
            total += (pow(ei, N + 1) - pow(el, N + 1)) / ((ei - el) * denom);
        }
    }
    return total;
}

}  // namespace discdeg
