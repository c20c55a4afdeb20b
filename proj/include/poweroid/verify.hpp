#pragma once

#include "poweroid/interp.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace poweroid::verify {

/// Seeded source of random exact values for property checks.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi);
    Rational rational(int max_num = 4, int max_den = 4);
    Rational nonzero_rational(int max_num = 4, int max_den = 4);
    PowerSeries series(int order, bool zero_constant = false);
    DeltaOperator delta(int order, bool normalize = false);
    Polynomial polynomial(int max_degree);

private:
    std::mt19937_64 gen_;
};

/// The standard operators exercised by every suite.
std::vector<DeltaOperator> catalog_roster(int order);

struct CheckResult {
    std::string name;
    bool passed = false;
    long cases = 0;
    std::string detail;
};

std::vector<std::string> suite_names();

/// Runs one module's invariant checks ("series", "operators",
/// "poweroids", "interp") or all of them.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace poweroid::verify
