#include "qyang/centralizer.hpp"

#include <optional>
#include <random>

#include "qyang/fgen.hpp"
#include "qyang/json_io.hpp"
#include "qyang/parallel.hpp"

namespace qyang {

CentralizerContext CentralizerContext::make(int N, int M) {
    if (N < 0 || M < 1) fail(errc::config_error, "centralizer context needs N >= 0, M >= 1");
    CentralizerContext ctx;
    ctx.N = N;
    ctx.M = M;
    const int K = N + M;
    ctx.u_lex = Algebra::get_lex(K);
    ctx.u_hc = Algebra::get_hc(K);
    if (K >= 2) ctx.u_inner = Algebra::get_lex(K - 1);
    return ctx;
}

std::vector<GeneratorRef> CentralizerContext::outer_generators() const {
    std::vector<GeneratorRef> out;
    const int K = N + M;
    for (int i = N + 1; i <= K; ++i)
        for (int j = -K; j <= K; ++j) {
            if (j == 0 || (j > -(N + 1) && j < N + 1)) continue;
            out.push_back(GeneratorRef{K, i, j});
        }
    return out;
}

bool centralizer_check(const Element& a, const CentralizerContext& ctx) {
    if (!a.algebra() || a.algebra()->size() != ctx.algebra_size())
        fail(errc::size_mismatch, "element does not live in U(q_{N+M})");
    for (const GeneratorRef& g : ctx.outer_generators()) {
        const Element lhs = supercommutator(Element::generator(a.algebra(), g), a);
        if (!lhs.is_zero()) return false;
    }
    return true;
}

Element alpha_projection(const Element& a, const CentralizerContext& ctx) {
    if (!centralizer_check(a, ctx))
        fail(errc::not_in_centralizer,
             "projection is only a homomorphism on the centralizer of the outer block");
    const int K = ctx.algebra_size();
    if (K < 2) {
        // q_1 has no interior: the projection keeps only the constant term
        fail(errc::config_error, "projection needs N + M >= 2");
    }
    const Element b = reorder(a, ctx.u_hc);
    const AlgebraPtr& hc = ctx.u_hc;
    const AlgebraPtr& inner = ctx.u_inner;
    TermVec kept;
    for (const auto& [id, c] : b.terms()) {
        const Monomial m = hc->monomial(id);
        bool boundary = false;
        Monomial im;
        for (const Factor& f : m.factors) {
            const GeneratorRef& g = hc->order().generator(f.rank);
            if (generator_level(g) == K) {
                boundary = true;
                break;
            }
            GeneratorRef ig{K - 1, g.i, g.j};
            im.factors.push_back(
                Factor{static_cast<int16_t>(inner->order().rank(ig)), f.exp});
        }
        if (boundary) continue;
        // interior factors of the boundary-first order are already in the
        // lex arrangement of the smaller algebra
        kept.emplace_back(inner->intern(im), c);
    }
    return Element::from_terms(inner, std::move(kept));
}

Report verify_prop14(int N, int M, int nmax, int jobs) {
    Report r;
    r.suite = "prop14";
    r.params = ojson{{"N", N}, {"M", M}, {"nmax", nmax}};
    const CentralizerContext ctx = CentralizerContext::make(N, M);

    struct Inst {
        int i, j, n;  // i == 0 marks a trace instance of degree n
    };
    std::vector<Inst> insts;
    for (int n = 1; n <= nmax; ++n)
        for (int i = -N; i <= N; ++i) {
            if (i == 0) continue;
            for (int j = -N; j <= N; ++j) {
                if (j == 0) continue;
                insts.push_back(Inst{i, j, n});
            }
        }
    for (int n = 1; n <= nmax; n += 2) insts.push_back(Inst{0, 0, n});

    std::vector<std::optional<Failure>> slots(insts.size());
    parallel_instances(insts.size(), jobs, [&](size_t p) {
        const auto [i, j, n] = insts[p];
        Element big = (i == 0) ? c_element(ctx.u_lex, n) : f_element(ctx.u_lex, i, j, n);
        Element expect = (i == 0) ? c_element(ctx.u_inner, n) : f_element(ctx.u_inner, i, j, n);
        const Element got = alpha_projection(big, ctx);
        if (!(got == expect))
            slots[p] = Failure{{i, j, n}, element_to_json(got - expect), "projection mismatch"};
    });
    r.checked = static_cast<long long>(insts.size());
    for (auto& s : slots)
        if (s) r.failures.push_back(std::move(*s));
    return r;
}

namespace {

/// A sampled operand: a product of one or two factors drawn from the inner
/// family elements and the central traces, total family degree at most 3.
Element sample_operand(const CentralizerContext& ctx, std::mt19937_64& rng) {
    const AlgebraPtr& alg = ctx.u_lex;
    auto draw_factor = [&](int max_n) -> std::pair<Element, int> {
        const bool trace = ctx.N == 0 || (rng() % 4 == 0);
        if (trace) {
            const int n = (max_n >= 3 && rng() % 2) ? 3 : 1;
            return {c_element(alg, n), n};
        }
        auto draw_index = [&]() {
            int v = 1 + static_cast<int>(rng() % static_cast<unsigned long>(ctx.N));
            return (rng() % 2) ? v : -v;
        };
        const int n = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_n));
        return {f_element(alg, draw_index(), draw_index(), n), n};
    };
    auto [x, n1] = draw_factor(3);
    if (n1 < 3 && rng() % 2) {
        auto [y, n2] = draw_factor(3 - n1);
        return x * y;
    }
    return x;
}

}  // namespace

Report verify_alpha_homomorphism(int N, int M, int samples, uint64_t seed, int jobs) {
    Report r;
    r.suite = "alphahom";
    r.params = ojson{{"N", N}, {"M", M}, {"samples", samples}, {"seed", seed}};
    const CentralizerContext ctx = CentralizerContext::make(N, M);

    // fixed checks: unit preservation and interior elements staying fixed
    {
        const Element one = Element::unit(ctx.u_lex);
        ++r.checked;
        if (!(alpha_projection(one * one, ctx) == Element::unit(ctx.u_inner)))
            r.failures.push_back(Failure{{-1}, ojson(), "unit not preserved"});
        if (N >= 1) {
            Element x = Element::generator(ctx.u_lex, 1, -1) * Element::generator(ctx.u_lex, 1, 1);
            Element expect =
                Element::generator(ctx.u_inner, 1, -1) * Element::generator(ctx.u_inner, 1, 1);
            ++r.checked;
            if (!(alpha_projection(x, ctx) == expect))
                r.failures.push_back(Failure{{-2}, ojson(), "interior element moved"});
        }
    }

    // pre-draw the sample pairs so the instances are independent of the job
    // count
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Element, Element>> pairs;
    pairs.reserve(static_cast<size_t>(samples));
    for (int s = 0; s < samples; ++s) {
        Element x = sample_operand(ctx, rng);
        Element y = sample_operand(ctx, rng);
        pairs.emplace_back(std::move(x), std::move(y));
    }

    std::vector<std::optional<Failure>> slots(2 * pairs.size());
    parallel_instances(pairs.size(), jobs, [&](size_t p) {
        const auto& [x, y] = pairs[p];
        const Element ax = alpha_projection(x, ctx);
        const Element ay = alpha_projection(y, ctx);
        const Element prod = alpha_projection(x * y, ctx);
        if (!(prod == ax * ay))
            slots[2 * p] = Failure{{static_cast<long long>(p)},
                                   element_to_json(prod - ax * ay),
                                   "alpha(xy) != alpha(x)alpha(y)"};
        const Element sum = alpha_projection(x + y, ctx);
        if (!(sum == ax + ay))
            slots[2 * p + 1] = Failure{{static_cast<long long>(p)},
                                       element_to_json(sum - (ax + ay)),
                                       "alpha(x+y) != alpha(x)+alpha(y)"};
    });
    r.checked += 2 * static_cast<long long>(pairs.size());
    for (auto& s : slots)
        if (s) r.failures.push_back(std::move(*s));
    return r;
}

}  // namespace qyang
