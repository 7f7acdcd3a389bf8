#include "qyang/fgen.hpp"

#include <optional>

#include "qyang/freeyang.hpp"
#include "qyang/json_io.hpp"
#include "qyang/parallel.hpp"

namespace qyang {

namespace {

constexpr uint64_t kFTag = 0x02ull << 56;
constexpr uint64_t kCTag = 0x03ull << 56;

uint64_t f_key(int i, int j, int n) {
    return kFTag | (static_cast<uint64_t>(static_cast<uint16_t>(n)) << 32) |
           (static_cast<uint64_t>(static_cast<uint16_t>(i + 512)) << 16) |
           static_cast<uint64_t>(static_cast<uint16_t>(j + 512));
}

std::vector<int> signed_indices(int K) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(2 * K));
    for (int p = -K; p <= K; ++p)
        if (p != 0) v.push_back(p);
    return v;
}

/// Failure slots written per index, then compacted in index order so the
/// report does not depend on the job count.
struct SlotCollector {
    std::vector<std::optional<Failure>> slots;
    explicit SlotCollector(size_t n) : slots(n) {}
    void collect(Report& r) {
        for (auto& s : slots)
            if (s) r.failures.push_back(std::move(*s));
    }
};

}  // namespace

Element f_element(const AlgebraPtr& alg, int i, int j, int n) {
    const int K = alg->size();
    if (n < 1) fail(errc::invalid_argument, "family degree must be positive");
    canonicalize(K, i, j);  // range check
    const uint64_t key = f_key(i, j, n);
    if (const TermVec* hit = alg->cache_lookup(key)) return Element::from_terms(alg, *hit);

    Element result = Element::zero(alg);
    if (n == 1) {
        result = Element::generator(alg, i, j);
    } else {
        ElementBuilder b(alg);
        for (int k : signed_indices(K)) {
            const Element gen = Element::generator(alg, i, k);
            const Element rest = f_element(alg, k, j, n - 1);
            b.add_product(gen, rest, Rational(sign_pow(parity_of_index(k).bit())));
        }
        result = b.build();
    }
    alg->cache_store(key, result.terms());
    return result;
}

Element c_element(const AlgebraPtr& alg, int n) {
    if (n < 1) fail(errc::invalid_argument, "family degree must be positive");
    const uint64_t key = kCTag | static_cast<uint64_t>(static_cast<uint32_t>(n));
    if (const TermVec* hit = alg->cache_lookup(key)) return Element::from_terms(alg, *hit);
    ElementBuilder b(alg);
    for (int k : signed_indices(alg->size())) b.add(f_element(alg, k, k, n));
    Element result = b.build();
    alg->cache_store(key, result.terms());
    return result;
}

Report verify_fnr(const AlgebraPtr& alg, int nmax, const FnrSigns& signs, int jobs) {
    const int K = alg->size();
    Report r;
    r.suite = "fnr";
    r.params = ojson{{"K", K}, {"nmax", nmax}};
    const auto idx = signed_indices(K);
    const size_t ni = idx.size();

    struct Inst {
        int i, j, k, l, n;
    };
    std::vector<Inst> insts;
    insts.reserve(ni * ni * ni * ni * static_cast<size_t>(nmax));
    for (int n = 1; n <= nmax; ++n)
        for (int i : idx)
            for (int j : idx)
                for (int k : idx)
                    for (int l : idx) insts.push_back(Inst{i, j, k, l, n});

    SlotCollector slots(insts.size());
    parallel_instances(insts.size(), jobs, [&](size_t p) {
        const auto [i, j, k, l, n] = insts[p];
        const Element lhs =
            supercommutator(Element::generator(alg, i, j), f_element(alg, k, l, n));
        const int pp =
            (parity_of_index(i) + parity_of_index(j)).bit() &
            (parity_of_index(k) + parity_of_index(l)).bit();
        ElementBuilder rb(alg);
        if (k == j) rb.add(f_element(alg, i, l, n), Rational(signs.t1));
        if (i == l) rb.add(f_element(alg, k, j, n), Rational(-signs.t2 * sign_pow(pp)));
        if (-k == j) rb.add(f_element(alg, -i, l, n), Rational(signs.t3));
        if (i == -l) rb.add(f_element(alg, k, -j, n), Rational(-signs.t4 * sign_pow(pp)));
        const Element delta = lhs - rb.build();
        if (!delta.is_zero())
            slots.slots[p] = Failure{{i, j, k, l, n}, element_to_json(delta), ""};
    });
    r.checked = static_cast<long long>(insts.size());
    slots.collect(r);
    return r;
}

namespace {

/// Right side of the closed supercommutator formula, sums over r = 1..m-1.
Element prop31_rhs(const AlgebraPtr& alg, int m, int n, int i, int j, int k, int l) {
    const int pi = parity_of_index(i).bit(), pj = parity_of_index(j).bit();
    const int pk = parity_of_index(k).bit(), pl = parity_of_index(l).bit();
    const int pp = (pi ^ pj) & (pk ^ pl);
    const int q = (pj & pk) ^ (pj & pl) ^ (pk & pl);
    ElementBuilder b(alg);
    if (k == j) b.add(f_element(alg, i, l, m + n - 1), Rational(1));
    if (i == l) b.add(f_element(alg, k, j, m + n - 1), Rational(-sign_pow(pp)));
    const int pm = sign_pow(m - 1);
    if (-k == j) b.add(f_element(alg, -i, l, m + n - 1), Rational(pm));
    if (i == -l) b.add(f_element(alg, k, -j, m + n - 1), Rational(-pm * sign_pow(pp)));
    for (int r = 1; r <= m - 1; ++r) {
        const Rational s1(sign_pow(q));
        b.add_product(f_element(alg, i, l, n + r - 1), f_element(alg, k, j, m - r), s1);
        b.add_product(f_element(alg, i, l, m - r), f_element(alg, k, j, n + r - 1), -s1);
        const Rational s2(sign_pow(q + pk + pl + r));
        b.add_product(f_element(alg, -i, l, n + r - 1), f_element(alg, -k, j, m - r), s2);
        b.add_product(f_element(alg, i, -l, m - r), f_element(alg, k, -j, n + r - 1), -s2);
    }
    return b.build();
}

}  // namespace

Report verify_prop31(const AlgebraPtr& alg, int mmax, int nmax, int jobs) {
    const int K = alg->size();
    Report r;
    r.suite = "prop31";
    r.params = ojson{{"K", K}, {"mmax", mmax}, {"nmax", nmax}};
    const auto idx = signed_indices(K);

    struct Inst {
        int m, n, i, j, k, l;
    };
    std::vector<Inst> insts;
    for (int m = 1; m <= mmax; ++m)
        for (int n = 1; n <= nmax; ++n)
            for (int i : idx)
                for (int j : idx)
                    for (int k : idx)
                        for (int l : idx) insts.push_back(Inst{m, n, i, j, k, l});

    SlotCollector slots(insts.size());
    parallel_instances(insts.size(), jobs, [&](size_t p) {
        const auto [m, n, i, j, k, l] = insts[p];
        const Element lhs = supercommutator(f_element(alg, i, j, m), f_element(alg, k, l, n));
        const Element delta = lhs - prop31_rhs(alg, m, n, i, j, k, l);
        if (!delta.is_zero())
            slots.slots[p] = Failure{{m, n, i, j, k, l}, element_to_json(delta), ""};
    });
    r.checked = static_cast<long long>(insts.size());
    slots.collect(r);
    return r;
}

Report verify_defrel(const AlgebraPtr& alg, int mmax, int nmax, const DefrelSigns& signs,
                     int jobs) {
    const int K = alg->size();
    Report r;
    r.suite = "defrel";
    r.params = ojson{{"K", K}, {"mmax", mmax}, {"nmax", nmax}};
    const auto idx = signed_indices(K);

    struct Inst {
        int m, n, i, j, k, l;
    };
    std::vector<Inst> insts;
    for (int m = 1; m <= mmax; ++m)
        for (int n = 1; n <= nmax; ++n)
            for (int i : idx)
                for (int j : idx)
                    for (int k : idx)
                        for (int l : idx) insts.push_back(Inst{m, n, i, j, k, l});

    std::vector<std::optional<Failure>> concrete(insts.size()), freelevel(insts.size());
    parallel_instances(insts.size(), jobs, [&](size_t p) {
        const auto [m, n, i, j, k, l] = insts[p];
        const FreeElement rel = defrel_element(m, n, i, j, k, l, K, signs);
        const Element value = evaluate_f_element(rel, alg);
        if (!value.is_zero())
            concrete[p] = Failure{{m, n, i, j, k, l}, element_to_json(value), "nonzero in U"};
        // equivalence of the truncated and untruncated forms under the
        // first-index sign law
        const FreeElement lhs = normalize_sign_law(rel);
        const FreeElement rhs = normalize_sign_law(prop31_element(m, n, i, j, k, l, K));
        if (!(lhs == rhs)) {
            const FreeElement d = lhs - rhs;
            freelevel[p] =
                Failure{{m, n, i, j, k, l}, d.to_json(), "truncated form differs from full form"};
        }
    });
    r.checked = 2 * static_cast<long long>(insts.size());
    for (auto& s : concrete)
        if (s) r.failures.push_back(std::move(*s));
    for (auto& s : freelevel)
        if (s) r.failures.push_back(std::move(*s));
    return r;
}

bool verify_central(const AlgebraPtr& alg, int n) {
    const Element c = c_element(alg, n);
    for (int rank = 0; rank < alg->generator_count(); ++rank) {
        const Element g = Element::generator(alg, alg->order().generator(rank));
        if (!supercommutator(c, g).is_zero()) return false;
    }
    return true;
}

Report verify_central_report(const AlgebraPtr& alg, const std::vector<int>& degrees) {
    Report r;
    r.suite = "central";
    r.params = ojson{{"K", alg->size()}, {"degrees", degrees}};
    for (int n : degrees) {
        const Element c = c_element(alg, n);
        if (n % 2 == 0 && !c.is_zero()) {
            r.failures.push_back(Failure{{n}, element_to_json(c), "even-degree trace nonzero"});
        }
        for (int rank = 0; rank < alg->generator_count(); ++rank) {
            const GeneratorRef g = alg->order().generator(rank);
            const Element delta = supercommutator(c, Element::generator(alg, g));
            ++r.checked;
            if (!delta.is_zero())
                r.failures.push_back(Failure{{n, g.i, g.j}, element_to_json(delta), "not central"});
        }
    }
    return r;
}

}  // namespace qyang
