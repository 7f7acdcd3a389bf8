#include "qyang/suites.hpp"

#include "qyang/centralizer.hpp"
#include "qyang/fgen.hpp"
#include "qyang/freeyang.hpp"
#include "qyang/grsym.hpp"
#include "qyang/json_io.hpp"

namespace qyang {

SuiteConfig SuiteConfig::from_json(const ojson& j) {
    SuiteConfig c;
    c.suite = j.value("suite", "");
    c.K = j.value("K", 0);
    c.N = j.value("N", 0);
    c.M = j.value("M", 0);
    c.nmax = j.value("nmax", 0);
    c.mmax = j.value("mmax", 0);
    c.degmax = j.value("degmax", 0);
    c.s = j.value("s", 0);
    c.n = j.value("n", 0);
    c.samples = j.value("samples", 25);
    c.seed = j.value("seed", 1ull);
    c.jobs = j.value("jobs", 1);
    c.unsafe_large = j.value("unsafe_large", false);
    return c;
}

ojson SuiteConfig::to_json() const {
    ojson j;
    j["suite"] = suite;
    if (K) j["K"] = K;
    if (N) j["N"] = N;
    if (M) j["M"] = M;
    if (nmax) j["nmax"] = nmax;
    if (mmax) j["mmax"] = mmax;
    if (degmax) j["degmax"] = degmax;
    if (s) j["s"] = s;
    if (n) j["n"] = n;
    j["samples"] = samples;
    j["seed"] = seed;
    j["jobs"] = jobs;
    if (unsafe_large) j["unsafe_large"] = true;
    return j;
}

void SuiteConfig::check_bounds() const {
    if (unsafe_large) return;
    const bool ok = K <= 4 && N + M <= 4 && nmax + mmax <= 8 && degmax <= 8 && s <= 4 && n <= 8;
    if (!ok)
        fail(errc::config_error,
             "size parameters beyond the desk-scale bounds; pass --unsafe-large to override");
}

Report verify_bracket_layer(const AlgebraPtr& alg) {
    Report r;
    r.suite = "bracket";
    r.params = ojson{{"K", alg->size()}};
    const int n = alg->generator_count();
    auto gen = [&](int rank) { return Element::generator(alg, alg->order().generator(rank)); };

    // super-antisymmetry and the degree bound
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Element ab = bracket_element(alg, alg->order().generator(a),
                                               alg->order().generator(b));
            const Element ba = bracket_element(alg, alg->order().generator(b),
                                               alg->order().generator(a));
            const int sign = alg->order().parity(a).bit() & alg->order().parity(b).bit();
            ++r.checked;
            if (!(ab + ba.scaled(Rational(sign ? 1 : -1))).is_zero() ||
                (!ab.is_zero() && filtration_degree(ab) > 1)) {
                r.failures.push_back(Failure{{a, b}, element_to_json(ab), "antisymmetry/degree"});
            }
            // the generator bracket must agree with the supercommutator of
            // the generator elements
            ++r.checked;
            if (!(ab == supercommutator(gen(a), gen(b))))
                r.failures.push_back(
                    Failure{{a, b}, element_to_json(ab - supercommutator(gen(a), gen(b))),
                            "bracket differs from supercommutator"});
        }

    // super-Jacobi over all triples:
    // (-1)^(pa pc) [a,[b,c]] + (-1)^(pb pa) [b,[c,a]] + (-1)^(pc pb) [c,[a,b]] = 0
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int pa = alg->order().parity(a).bit();
                const int pb = alg->order().parity(b).bit();
                const int pc = alg->order().parity(c).bit();
                Element sum =
                    supercommutator(gen(a), supercommutator(gen(b), gen(c)))
                        .scaled(Rational(sign_pow(pa & pc))) +
                    supercommutator(gen(b), supercommutator(gen(c), gen(a)))
                        .scaled(Rational(sign_pow(pb & pa))) +
                    supercommutator(gen(c), supercommutator(gen(a), gen(b)))
                        .scaled(Rational(sign_pow(pc & pb)));
                ++r.checked;
                if (!sum.is_zero())
                    r.failures.push_back(Failure{{a, b, c}, element_to_json(sum), "jacobi"});
            }
    return r;
}

Report run_suite(const SuiteConfig& cfg) {
    SuiteConfig c = cfg;
    c.check_bounds();
    const std::string& s = c.suite;
    if (s == "bracket") {
        if (!c.K) c.K = 2;
        return verify_bracket_layer(Algebra::get_lex(c.K));
    }
    if (s == "fnr") {
        if (!c.K) c.K = 2;
        if (!c.nmax) c.nmax = 4;
        return verify_fnr(Algebra::get_lex(c.K), c.nmax, {}, c.jobs);
    }
    if (s == "prop31") {
        if (!c.K) c.K = 2;
        if (!c.mmax) c.mmax = 3;
        if (!c.nmax) c.nmax = 3;
        return verify_prop31(Algebra::get_lex(c.K), c.mmax, c.nmax, c.jobs);
    }
    if (s == "defrel") {
        if (!c.K) c.K = 2;
        if (!c.mmax) c.mmax = 3;
        if (!c.nmax) c.nmax = 3;
        return verify_defrel(Algebra::get_lex(c.K), c.mmax, c.nmax, {}, c.jobs);
    }
    if (s == "central") {
        if (!c.K) c.K = 3;
        std::vector<int> degrees;
        if (c.n) {
            degrees = {c.n};
        } else {
            const int top = c.nmax ? c.nmax : 4;
            for (int d = 1; d <= top; ++d) degrees.push_back(d);
        }
        return verify_central_report(Algebra::get_lex(c.K), degrees);
    }
    if (s == "prop14") {
        if (!c.M) c.M = 1;
        if (!c.nmax) c.nmax = 3;
        return verify_prop14(c.N, c.M, c.nmax, c.jobs);
    }
    if (s == "alphahom") {
        if (!c.M) c.M = 1;
        return verify_alpha_homomorphism(c.N, c.M, c.samples, c.seed, c.jobs);
    }
    if (s == "omega") {
        if (!c.N) c.N = 2;
        if (!c.mmax) c.mmax = 2;
        if (!c.nmax) c.nmax = 2;
        return verify_omega_correspondence(c.N, c.mmax, c.nmax);
    }
    if (s == "series") {
        if (!c.N) c.N = 1;
        if (!c.degmax) c.degmax = 4;
        return verify_series_equivalence(c.N, c.degmax);
    }
    if (s == "tau") {
        if (!c.N) c.N = 1;
        if (!c.degmax) c.degmax = 4;
        return verify_tau_relations(c.N, c.M, c.degmax, {}, c.jobs);
    }
    if (s == "coassoc") {
        if (!c.N) c.N = 2;
        if (!c.nmax) c.nmax = 3;
        return verify_coassociativity(c.N, c.nmax);
    }
    if (s == "eh") {
        if (!c.K) c.K = 2;
        if (!c.n) c.n = 3;
        return verify_eh_report(c.n, c.K);
    }
    if (s == "vanish") {
        if (!c.K) c.K = 2;
        if (!c.n) c.n = 4;
        return verify_vanishing_sums(c.n, c.K);
    }
    if (s == "independence") {
        if (!c.s) c.s = 2;
        if (!c.N) c.N = 1;
        return xs_independence_check(XsSubstitution::make(c.s, c.N));
    }
    fail(errc::config_error, "unknown suite: " + s);
}

std::vector<SuiteConfig> desk_profile(uint64_t seed, int jobs) {
    std::vector<SuiteConfig> out;
    auto add = [&](SuiteConfig c) {
        c.seed = seed;
        c.jobs = jobs;
        out.push_back(std::move(c));
    };
    {
        SuiteConfig c;
        c.suite = "bracket";
        c.K = 2;
        add(c);
    }
    for (int K : {1, 2}) {
        SuiteConfig c;
        c.suite = "fnr";
        c.K = K;
        c.nmax = 4;
        add(c);
    }
    {
        SuiteConfig c;
        c.suite = "prop31";
        c.K = 1;
        c.mmax = 4;
        c.nmax = 4;
        add(c);
        c.K = 2;
        c.mmax = 3;
        c.nmax = 3;
        add(c);
    }
    {
        SuiteConfig c;
        c.suite = "defrel";
        c.K = 1;
        c.mmax = 4;
        c.nmax = 4;
        add(c);
        c.K = 2;
        c.mmax = 3;
        c.nmax = 3;
        add(c);
    }
    for (int K : {1, 2, 3}) {
        SuiteConfig c;
        c.suite = "central";
        c.K = K;
        c.nmax = 4;
        add(c);
    }
    for (auto [N, M] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}, {2, 1}}) {
        SuiteConfig c;
        c.suite = "prop14";
        c.N = N;
        c.M = M;
        c.nmax = 3;
        add(c);
        c.suite = "alphahom";
        c.samples = 25;
        add(c);
    }
    {
        SuiteConfig c;
        c.suite = "omega";
        c.N = 1;
        c.mmax = 2;
        c.nmax = 2;
        add(c);
        c.N = 2;
        add(c);
    }
    {
        SuiteConfig c;
        c.suite = "series";
        c.N = 1;
        c.degmax = 4;
        add(c);
    }
    for (int M : {0, 1, 2}) {
        SuiteConfig c;
        c.suite = "tau";
        c.N = 1;
        c.M = M;
        c.degmax = 4;
        add(c);
    }
    {
        SuiteConfig c;
        c.suite = "coassoc";
        c.N = 1;
        c.nmax = 3;
        add(c);
        c.N = 2;
        add(c);
    }
    for (int K : {1, 2})
        for (int n = 1; n <= 3; ++n) {
            SuiteConfig c;
            c.suite = "eh";
            c.K = K;
            c.n = n;
            add(c);
        }
    for (int K : {1, 2})
        for (int n = 1; n <= 4; ++n) {
            SuiteConfig c;
            c.suite = "vanish";
            c.K = K;
            c.n = n;
            add(c);
        }
    for (auto [s, N] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}}) {
        SuiteConfig c;
        c.suite = "independence";
        c.s = s;
        c.N = N;
        add(c);
    }
    return out;
}

}  // namespace qyang
