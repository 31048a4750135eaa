#include "discdeg/verify.hpp"

#include <algorithm>
#include <sstream>

#include "discdeg/sylvester.hpp"

namespace discdeg {

std::vector<Profile> grid_profiles(long max_k, long max_degree, long p) {
    std::vector<Profile> out;
    for (long c = 1; c <= max_k + 1; ++c) {
        for (long N = c - 1; c + N - 1 <= max_k; ++N) {
            std::vector<long> tuple(static_cast<size_t>(c), 1);
            while (true) {
                out.emplace_back(N, tuple, p);
                long pos = c - 1;
                while (pos >= 0 && tuple[static_cast<size_t>(pos)] == max_degree) {
                    tuple[static_cast<size_t>(pos)] = 1;
                    --pos;
                }
                if (pos < 0) break;
                ++tuple[static_cast<size_t>(pos)];
            }
        }
    }
    return out;
}

std::string profile_label(const Profile& pr) {
    std::ostringstream os;
    os << "c=" << pr.c() << ",N=" << pr.N() << ",d=(";
    for (size_t i = 0; i < pr.degrees().size(); ++i)
        os << (i ? "," : "") << pr.degrees()[i];
    os << "),p=" << pr.p();
    return os.str();
}

std::string report_str(const DegreeReport& r) {
    std::ostringstream os;
    os << "deg=" << r.deg.get_str() << " deg_i=(";
    for (size_t i = 0; i < r.deg_i.size(); ++i) os << (i ? "," : "") << r.deg_i[i].get_str();
    os << ") deg_var=" << r.deg_var.get_str() << " mu=" << r.mu
       << " defective=" << (r.defective ? "yes" : "no") << " verdict=" << to_string(r.verdict);
    return os.str();
}

namespace {

std::string xi_str(const CharacterVector& xi) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < xi.alpha.size(); ++i) os << (i ? "," : "") << xi.alpha[i].get_str();
    os << ";";
    for (size_t j = 0; j < xi.beta.size(); ++j) os << (j ? "," : "") << xi.beta[j].get_str();
    os << ")";
    return os.str();
}

bool reports_equal(const DegreeReport& a, const DegreeReport& b) {
    return a.deg == b.deg && a.deg_i == b.deg_i && a.deg_var == b.deg_var && a.mu == b.mu &&
           a.defective == b.defective && a.verdict == b.verdict;
}

}  // namespace

bool run_verify(const VerifyOptions& opts, const std::function<void(const CheckResult&)>& emit) {
    bool all_pass = true;
    auto push = [&](const std::string& profile, const std::string& check, bool pass,
                    std::string expected, std::string actual) {
        all_pass &= pass;
        emit(CheckResult{profile, check, pass, std::move(expected), std::move(actual)});
    };

    for (const Profile& base : grid_profiles(opts.max_k, opts.max_degree)) {
        const std::string label = profile_label(base);
        const CharacterVector xi = xi_closed(base);
        const CharacterVector xi_oracle = xi_lattice_stabilized(base);
        push(label, "xi_closed_vs_lattice_oracle", xi == xi_oracle, xi_str(xi), xi_str(xi_oracle));

        // raw relations on the character itself
        Int raw_deg = 0, weighted = 0;
        for (size_t i = 0; i < xi.alpha.size(); ++i) {
            raw_deg += xi.alpha[i];
            weighted += base.degrees()[i] * xi.alpha[i];
        }
        push(label, "relation_degvar_raw", weighted == (base.N() + 1) * xi.beta.front(),
             weighted.get_str(), Int((base.N() + 1) * xi.beta.front()).get_str());

        for (long p : {0L, 2L, 3L}) {
            Profile pr(base.N(), base.degrees(), p);
            const std::string plabel = profile_label(pr);
            DegreeReport closed = closed_form_report(pr);
            DegreeReport from_xi = degrees_from_xi(xi, pr);
            push(plabel, "closed_vs_xi", reports_equal(closed, from_xi), report_str(closed),
                 report_str(from_xi));

            Int sum_i = 0, wsum = 0;
            for (size_t i = 0; i < closed.deg_i.size(); ++i) {
                sum_i += closed.deg_i[i];
                wsum += pr.degrees()[i] * closed.deg_i[i];
            }
            push(plabel, "relation_deg", sum_i == closed.deg, closed.deg.get_str(),
                 sum_i.get_str());
            push(plabel, "relation_degvar", wsum == (pr.N() + 1) * closed.deg_var,
                 Int((pr.N() + 1) * closed.deg_var).get_str(), wsum.get_str());
        }

        if (base.n() % 2 == 0) {
            bool all_even = true;
            for (const Int& a : xi.alpha) all_even &= (a % 2 == 0);
            for (const Int& b : xi.beta) all_even &= (b % 2 == 0);
            push(label, "mu_divisibility_p2", all_even, "all raw components even",
                 all_even ? "all even" : "odd component present");
        }
    }

    if (opts.with_algebraic_oracle) {
        const long cap = std::min(opts.max_degree, 4L);
        for (long d1 = 1; d1 <= cap; ++d1) {
            for (long d2 = 1; d2 <= cap; ++d2) {
                MPoly res = sylvester_resultant(d1, d2);
                std::vector<size_t> g1, g2;
                for (long i = 0; i <= d1; ++i) g1.push_back(static_cast<size_t>(i));
                for (long i = 0; i <= d2; ++i) g2.push_back(static_cast<size_t>(d1 + 1 + i));
                auto degs = partial_degrees(res, {g1, g2});
                Profile pr(1, {d1, d2}, 0);
                Int e1 = deg_i_closed(pr, 1), e2 = deg_i_closed(pr, 2);
                std::ostringstream exp, act;
                exp << "(" << e1.get_str() << "," << e2.get_str() << ")";
                act << "(" << degs[0] << "," << degs[1] << ")";
                push("resultant d=(" + std::to_string(d1) + "," + std::to_string(d2) + ")",
                     "sylvester_partial_degrees", Int(degs[0]) == e1 && Int(degs[1]) == e2,
                     exp.str(), act.str());
            }
        }
        for (long d = 2; d <= std::max(cap, 2L); ++d) {
            MPoly disc = binary_discriminant(d);
            Profile pr(1, {d}, 0);
            Int expected_deg = deg_i_closed(pr, 1);
            push("discriminant d=" + std::to_string(d), "binary_discriminant_degree",
                 Int(disc.total_degree()) == expected_deg, expected_deg.get_str(),
                 std::to_string(disc.total_degree()));
            push("discriminant d=" + std::to_string(d), "mod2_square",
                 is_perfect_square_mod2(disc), "perfect square mod 2",
                 is_perfect_square_mod2(disc) ? "square" : "not a square");
        }
    }

    return all_pass;
}

}  // namespace discdeg
