#pragma once

#include <functional>
#include <string>
#include <vector>

#include "discdeg/character.hpp"
#include "discdeg/formulas.hpp"

namespace discdeg {

// One line of the cross-verification battery.
struct CheckResult {
    std::string profile;
    std::string check;
    bool pass = false;
    std::string expected;
    std::string actual;
};

// All instances with 1 <= c <= N+1, c+N-1 <= max_k and 1 <= d_i <= max_degree,
// in deterministic order (c, then N, then degree tuple lexicographically).
std::vector<Profile> grid_profiles(long max_k, long max_degree, long p = 0);

std::string profile_label(const Profile& pr);
std::string report_str(const DegreeReport& r);

struct VerifyOptions {
    long max_k = 4;
    long max_degree = 3;
    bool with_algebraic_oracle = false;
};

// Runs the battery, emitting one result per profile per check; returns true
// iff everything passed.
bool run_verify(const VerifyOptions& opts, const std::function<void(const CheckResult&)>& emit);

}  // namespace discdeg
