#pragma once

#include <string>
#include <vector>

#include "qyang/element.hpp"
#include "qyang/report.hpp"

namespace qyang {

/// Named verification suite with its size parameters. Unset parameters keep
/// the documented defaults of the suite.
struct SuiteConfig {
    std::string suite;
    int K = 0, N = 0, M = 0;
    int nmax = 0, mmax = 0, degmax = 0, s = 0, n = 0;
    int samples = 25;
    uint64_t seed = 1;
    int jobs = 1;
    bool unsafe_large = false;

    static SuiteConfig from_json(const ojson& j);
    ojson to_json() const;

    /// Desk-scale bounds: K (and N+M) at most 4, nmax+mmax at most 8, degmax
    /// at most 8, s at most 4. Larger sizes need unsafe_large.
    void check_bounds() const;
};

/// Runs one suite by name. Names: bracket, fnr, prop31, defrel, central,
/// prop14, alphahom, omega, series, tau, coassoc, eh, vanish, independence.
Report run_suite(const SuiteConfig& cfg);

/// The desk profile: every verification suite once, at the documented
/// acceptance sizes.
std::vector<SuiteConfig> desk_profile(uint64_t seed, int jobs);

/// Exhaustive bracket-layer properties at size K: super-antisymmetry, the
/// super-Jacobi identity, and the degree bound of the bracket.
Report verify_bracket_layer(const AlgebraPtr& alg);

}  // namespace qyang
