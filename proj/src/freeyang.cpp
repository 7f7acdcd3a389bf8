#include "qyang/freeyang.hpp"

#include <map>
#include <optional>

#include "qyang/fgen.hpp"
#include "qyang/json_io.hpp"
#include "qyang/parallel.hpp"

namespace qyang {

namespace {

std::vector<int> signed_indices(int N) {
    std::vector<int> v;
    for (int p = -N; p <= N; ++p)
        if (p != 0) v.push_back(p);
    return v;
}

int pbit(int idx) { return parity_of_index(idx).bit(); }

}  // namespace

uint32_t pack_ygen(const FreeGen& g) {
    if (g.n < 0 || g.n > 0x3fff) fail(errc::invalid_argument, "generator degree out of range");
    if (g.i == 0 || g.j == 0 || g.i > 120 || g.i < -120 || g.j > 120 || g.j < -120)
        fail(errc::invalid_index, "generator index out of range");
    return (static_cast<uint32_t>(g.alphabet) << 30) | (static_cast<uint32_t>(g.n) << 16) |
           (static_cast<uint32_t>(static_cast<uint8_t>(g.i + 128)) << 8) |
           static_cast<uint32_t>(static_cast<uint8_t>(g.j + 128));
}

FreeGen unpack_ygen(uint32_t code) {
    FreeGen g;
    g.alphabet = static_cast<YAlphabet>((code >> 30) & 1);
    g.n = static_cast<int>((code >> 16) & 0x3fff);
    g.i = static_cast<int>((code >> 8) & 0xff) - 128;
    g.j = static_cast<int>(code & 0xff) - 128;
    return g;
}

std::string FreeGen::to_text() const {
    const char* a = alphabet == YAlphabet::T ? "T" : "F";
    return std::string(a) + "^" + std::to_string(n) + "[" + std::to_string(i) + "," +
           std::to_string(j) + "]";
}

FreeElement FreeElement::unit(int N, Rational c) {
    FreeElement e(N);
    e.add_term(YWord{}, std::move(c));
    return e;
}

FreeElement FreeElement::gen(int N, YAlphabet a, int n, int i, int j) {
    if (i == 0 || j == 0 || i > N || i < -N || j > N || j < -N)
        fail(errc::invalid_index, "generator index out of bounds");
    if (a == YAlphabet::T) {
        if (n < 0) return zero(N);
        if (n == 0) return i == j ? unit(N) : zero(N);
    } else {
        if (n < 1) fail(errc::invalid_argument, "abstract family degree must be positive");
    }
    FreeElement e(N);
    e.add_term(YWord{pack_ygen(FreeGen{a, n, i, j})}, Rational(1));
    return e;
}

void FreeElement::add_term(YWord w, Rational c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    FreeElement out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    return *this + o.scaled(Rational(-1));
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
    FreeElement out(N_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            YWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(std::move(w), ca * cb);
        }
    return out;
}

FreeElement FreeElement::scaled(const Rational& c) const {
    FreeElement out(N_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
    return out;
}

Parity FreeElement::word_parity(const YWord& w) {
    int p = 0;
    for (uint32_t code : w) {
        const FreeGen g = unpack_ygen(code);
        p ^= g.parity().bit();
    }
    return Parity(p);
}

std::string FreeElement::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        std::string body;
        if (w.empty()) {
            body = mag.to_string();
        } else {
            if (!mag.is_one()) body = mag.to_string() + "*";
            for (size_t p = 0; p < w.size(); ++p) {
                if (p) body += "*";
                body += unpack_ygen(w[p]).to_text();
            }
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

namespace {

ojson ygen_json(uint32_t code) {
    const FreeGen g = unpack_ygen(code);
    return ojson{{"alphabet", g.alphabet == YAlphabet::T ? "T" : "F"},
                 {"n", g.n},
                 {"i", g.i},
                 {"j", g.j}};
}

}  // namespace

ojson FreeElement::to_json() const {
    ojson terms = ojson::array();
    for (const auto& [w, c] : terms_) {
        ojson word = ojson::array();
        for (uint32_t code : w) word.push_back(ygen_json(code));
        terms.push_back(ojson{{"coeff", c.to_string()}, {"word", std::move(word)}});
    }
    return ojson{{"N", N_}, {"terms", std::move(terms)}};
}

FreeElement free_supercommutator(const FreeElement& a, const FreeElement& b) {
    // split into homogeneous components and extend bilinearly
    FreeElement parts_a[2] = {FreeElement(a.bound()), FreeElement(a.bound())};
    FreeElement parts_b[2] = {FreeElement(b.bound()), FreeElement(b.bound())};
    for (const auto& [w, c] : a.terms()) parts_a[FreeElement::word_parity(w).bit()].add_term(w, c);
    for (const auto& [w, c] : b.terms()) parts_b[FreeElement::word_parity(w).bit()].add_term(w, c);
    FreeElement out(a.bound());
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            out = out + parts_a[p] * parts_b[q];
            out = out - (parts_b[q] * parts_a[p]).scaled(Rational((p & q) ? -1 : 1));
        }
    return out;
}

FreeElement omega_image(const FreeElement& a) {
    FreeElement out(a.bound());
    for (const auto& [w, c] : a.terms()) {
        int odd = 0;
        int isign = 0;
        YWord nw;
        nw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const FreeGen g = unpack_ygen(*it);
            if (g.alphabet != YAlphabet::F)
                fail(errc::invalid_argument, "omega expects an F-alphabet element");
            nw.push_back(pack_ygen(FreeGen{YAlphabet::T, g.n, g.j, g.i}));
        }
        for (uint32_t code : w) {
            const FreeGen g = unpack_ygen(code);
            if (g.parity().is_odd()) ++odd;
            isign ^= pbit(g.i);
        }
        const int sign = ((odd * (odd - 1) / 2) & 1) ^ isign;
        out.add_term(std::move(nw), sign ? -c : c);
    }
    return out;
}

FreeElement normalize_sign_law(const FreeElement& a) {
    FreeElement out(a.bound());
    for (const auto& [w, c] : a.terms()) {
        int sign = 0;
        YWord nw;
        nw.reserve(w.size());
        for (uint32_t code : w) {
            FreeGen g = unpack_ygen(code);
            if (g.i < 0) {
                sign ^= (g.alphabet == YAlphabet::F ? (g.n - 1) : g.n) & 1;
                g.i = -g.i;
                g.j = -g.j;
            }
            nw.push_back(pack_ygen(g));
        }
        out.add_term(std::move(nw), sign ? -c : c);
    }
    return out;
}

FreeElement defrel_element(int m, int n, int i, int j, int k, int l, int N,
                           const DefrelSigns& signs) {
    if (m < 1 || n < 1) fail(errc::invalid_argument, "relation degrees must be positive");
    auto Fg = [&](int p, int a, int b) { return FreeElement::gen(N, YAlphabet::F, p, a, b); };
    const int pi = pbit(i), pj = pbit(j), pk = pbit(k), pl = pbit(l);
    const int pp = (pi ^ pj) & (pk ^ pl);

    const FreeElement A = Fg(m, i, j), B = Fg(n, k, l);
    FreeElement lhs = A * B - (B * A).scaled(Rational(sign_pow(pp)));

    FreeElement rhs = FreeElement::zero(N);
    if (k == j) rhs = rhs + Fg(m + n - 1, i, l).scaled(Rational(signs.b1));
    if (i == l) rhs = rhs - Fg(m + n - 1, k, j).scaled(Rational(signs.b2 * sign_pow(pp)));
    const int pm = (signs.pm < 0 ? sign_pow(m) : sign_pow(m - 1));
    if (-k == j) rhs = rhs + Fg(m + n - 1, -i, l).scaled(Rational(signs.b3 * pm));
    if (i == -l) rhs = rhs - Fg(m + n - 1, k, -j).scaled(Rational(signs.b4 * pm * sign_pow(pp)));

    const int q = (pj & pk) ^ (pj & pl) ^ (pk & pl);
    const int rmax = std::min(m, n) - 1;
    for (int r = 1; r <= rmax; ++r) {
        const Rational s1(signs.g1 * sign_pow(q));
        rhs = rhs + (Fg(m + n - r - 1, i, l) * Fg(r, k, j)).scaled(s1);
        rhs = rhs - (Fg(r, i, l) * Fg(m + n - r - 1, k, j)).scaled(s1 * Rational(signs.w1));
        const int alt = (signs.pr < 0 ? sign_pow(m) : sign_pow(m + r));
        const Rational s2(signs.g2 * sign_pow(q + pk + pl) * alt);
        rhs = rhs + (Fg(m + n - r - 1, -i, l) * Fg(r, -k, j)).scaled(s2);
        rhs = rhs - (Fg(r, i, -l) * Fg(m + n - r - 1, k, -j)).scaled(s2 * Rational(signs.w2));
    }
    return lhs - rhs;
}

FreeElement prop31_element(int m, int n, int i, int j, int k, int l, int N) {
    if (m < 1 || n < 1) fail(errc::invalid_argument, "relation degrees must be positive");
    auto Fg = [&](int p, int a, int b) { return FreeElement::gen(N, YAlphabet::F, p, a, b); };
    const int pi = pbit(i), pj = pbit(j), pk = pbit(k), pl = pbit(l);
    const int pp = (pi ^ pj) & (pk ^ pl);

    const FreeElement A = Fg(m, i, j), B = Fg(n, k, l);
    FreeElement lhs = A * B - (B * A).scaled(Rational(sign_pow(pp)));

    FreeElement rhs = FreeElement::zero(N);
    if (k == j) rhs = rhs + Fg(m + n - 1, i, l);
    if (i == l) rhs = rhs - Fg(m + n - 1, k, j).scaled(Rational(sign_pow(pp)));
    const int pm = sign_pow(m - 1);
    if (-k == j) rhs = rhs + Fg(m + n - 1, -i, l).scaled(Rational(pm));
    if (i == -l) rhs = rhs - Fg(m + n - 1, k, -j).scaled(Rational(pm * sign_pow(pp)));

    const int q = (pj & pk) ^ (pj & pl) ^ (pk & pl);
    for (int r = 1; r <= m - 1; ++r) {
        const Rational s1(sign_pow(q));
        rhs = rhs + (Fg(n + r - 1, i, l) * Fg(m - r, k, j)).scaled(s1);
        rhs = rhs - (Fg(m - r, i, l) * Fg(n + r - 1, k, j)).scaled(s1);
        const Rational s2(sign_pow(q + pk + pl + r));
        rhs = rhs + (Fg(n + r - 1, -i, l) * Fg(m - r, -k, j)).scaled(s2);
        rhs = rhs - (Fg(m - r, i, -l) * Fg(n + r - 1, k, -j)).scaled(s2);
    }
    return lhs - rhs;
}

FreeElement yang_relation_coeff(int m, int n, int i, int j, int k, int l, int N,
                                const YangSigns& signs) {
    if (m < -1 || n < -1) fail(errc::invalid_argument, "relation degree below collapse range");
    auto Tg = [&](int p, int a, int b) { return FreeElement::gen(N, YAlphabet::T, p, a, b); };
    const int pi = pbit(i), pj = pbit(j), pk = pbit(k), pl = pbit(l);
    const int pp = (pi ^ pj) & (pk ^ pl);
    const int s = (pi & pj) ^ (pi & pk) ^ (pj & pk);

    const FreeElement A = Tg(m, j, i), B = Tg(n, l, k);
    FreeElement lhs =
        (A * B - (B * A).scaled(Rational(sign_pow(pp)))).scaled(Rational(signs.c * sign_pow(s)));

    FreeElement rhs = FreeElement::zero(N);
    for (int r = 0; r <= m - 1; ++r) {
        const Rational s1(signs.g1);
        rhs = rhs + (Tg(m + n - r - 1, j, k) * Tg(r, l, i)).scaled(s1);
        rhs = rhs - (Tg(r, j, k) * Tg(m + n - r - 1, l, i)).scaled(s1 * Rational(signs.w1));
        const int alt = (signs.pr < 0 ? sign_pow(m) : sign_pow(m + r));
        const Rational s2(signs.g2 * -sign_pow(pi + pj) * alt);
        rhs = rhs + (Tg(m + n - r - 1, -j, k) * Tg(r, -l, i)).scaled(s2);
        rhs = rhs - (Tg(r, j, -k) * Tg(m + n - r - 1, l, -i)).scaled(s2 * Rational(signs.w2));
    }
    return lhs - rhs;
}

FreeElement yang_relation_38(int m, int n, int i, int j, int k, int l, int N) {
    if (m < 0 || n < 0) fail(errc::invalid_argument, "relation degrees must be nonnegative");
    auto Tg = [&](int p, int a, int b) { return FreeElement::gen(N, YAlphabet::T, p, a, b); };
    const int pi = pbit(i), pj = pbit(j), pk = pbit(k), pl = pbit(l);
    const int pp = (pi ^ pj) & (pk ^ pl);
    const int s = (pi & pj) ^ (pi & pk) ^ (pj & pk);

    auto comm = [&](const FreeElement& a, const FreeElement& b) {
        return a * b - (b * a).scaled(Rational(sign_pow(pp)));
    };
    FreeElement lhs = (comm(Tg(m + 1, j, i), Tg(n - 1, l, k)) -
                       comm(Tg(m - 1, j, i), Tg(n + 1, l, k)))
                          .scaled(Rational(sign_pow(s)));

    FreeElement rhs = Tg(n - 1, j, k) * Tg(m, l, i) - Tg(m, j, k) * Tg(n - 1, l, i) +
                      Tg(n, j, k) * Tg(m - 1, l, i) - Tg(m - 1, j, k) * Tg(n, l, i);
    FreeElement twisted = Tg(n - 1, -j, k) * Tg(m, -l, i) - Tg(m, j, -k) * Tg(n - 1, l, -i) -
                          Tg(n, -j, k) * Tg(m - 1, -l, i) + Tg(m - 1, j, -k) * Tg(n, l, -i);
    rhs = rhs + twisted.scaled(Rational(sign_pow(pi + pj)));
    return lhs - rhs;
}

Element evaluate_f_element(const FreeElement& a, const AlgebraPtr& alg) {
    ElementBuilder out(alg);
    for (const auto& [w, c] : a.terms()) {
        Element prod = Element::unit(alg);
        for (uint32_t code : w) {
            const FreeGen g = unpack_ygen(code);
            if (g.alphabet != YAlphabet::F)
                fail(errc::invalid_argument, "evaluation expects an F-alphabet element");
            prod = prod * f_element(alg, g.i, g.j, g.n);
        }
        out.add(prod, c);
    }
    return out.build();
}

Element tau_image(int i, int j, int n, int N, int M) {
    if (M < 0) fail(errc::invalid_argument, "level must be nonnegative");
    if (i == 0 || j == 0 || i > N || i < -N || j > N || j < -N)
        fail(errc::invalid_index, "index out of bounds for the Yangian generators");
    const AlgebraPtr alg = Algebra::get_lex(N + M);
    Element w = principal_antiautomorphism(f_element(alg, j, i, n));
    return pbit(j) ? -w : w;
}

// ---------------------------------------------------------------------------
// series expansion of the defining relation

namespace {

using Series = std::map<std::pair<int, int>, FreeElement>;

void series_add(Series& s, std::pair<int, int> key, const FreeElement& v, int N) {
    if (v.is_zero()) return;
    auto it = s.find(key);
    if (it == s.end()) {
        s.emplace(key, v);
    } else {
        it->second = it->second + v;
        if (it->second.is_zero()) s.erase(it);
    }
    (void)N;
}

Series series_mul(const Series& a, const Series& b, int N) {
    Series out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b)
            series_add(out, {ka.first + kb.first, ka.second + kb.second}, va * vb, N);
    return out;
}

Series series_shift(const Series& a, int dx, int dy) {
    Series out;
    for (const auto& [k, v] : a) out.emplace(std::make_pair(k.first + dx, k.second + dy), v);
    return out;
}

Series series_sub(Series a, const Series& b, int N) {
    for (const auto& [k, v] : b) series_add(a, k, v.scaled(Rational(-1)), N);
    return a;
}

Series series_scaled(Series a, int sgn) {
    if (sgn >= 0) return a;
    for (auto& [k, v] : a) v = v.scaled(Rational(-1));
    return a;
}

/// T_{ab}(x) truncated at order P, laid out on the chosen axis (0 = x).
Series series_T(int a, int b, int N, int P, int axis) {
    Series out;
    for (int p = 0; p <= P; ++p) {
        FreeElement g = FreeElement::gen(N, YAlphabet::T, p, a, b);
        if (g.is_zero()) continue;
        out.emplace(axis == 0 ? std::make_pair(-p, 0) : std::make_pair(0, -p), std::move(g));
    }
    return out;
}

}  // namespace

Report verify_series_equivalence(int N, int degmax, const YangSigns& signs) {
    if (degmax < 2) fail(errc::invalid_argument, "degmax must be at least 2");
    Report r;
    r.suite = "series";
    r.params = ojson{{"N", N}, {"degmax", degmax}};
    const auto idx = signed_indices(N);
    const int P = degmax + 1;

    for (int i : idx)
        for (int j : idx)
            for (int k : idx)
                for (int l : idx) {
                    const int pi = pbit(i), pj = pbit(j), pk = pbit(k), pl = pbit(l);
                    const int pp = (pi ^ pj) & (pk ^ pl);

                    const Series Tij_x = series_T(i, j, N, P, 0);
                    const Series Tkl_y = series_T(k, l, N, P, 1);
                    Series comm = series_sub(
                        series_mul(Tij_x, Tkl_y, N),
                        series_scaled(series_mul(Tkl_y, Tij_x, N), sign_pow(pp)), N);
                    Series lhs = series_sub(series_shift(comm, 2, 0), series_shift(comm, 0, 2), N);
                    lhs = series_scaled(std::move(lhs),
                                        sign_pow((pi & pk) ^ (pi & pl) ^ (pk & pl)));

                    const Series ab = series_sub(
                        series_mul(series_T(k, j, N, P, 0), series_T(i, l, N, P, 1), N),
                        series_mul(series_T(k, j, N, P, 1), series_T(i, l, N, P, 0), N), N);
                    Series rhs1 =
                        series_shift(ab, 1, 0);
                    for (const auto& [key, v] : series_shift(ab, 0, 1)) series_add(rhs1, key, v, N);

                    const Series cd = series_sub(
                        series_mul(series_T(-k, j, N, P, 0), series_T(-i, l, N, P, 1), N),
                        series_mul(series_T(k, -j, N, P, 1), series_T(i, -l, N, P, 0), N), N);
                    Series rhs2 = series_sub(series_shift(cd, 1, 0), series_shift(cd, 0, 1), N);
                    rhs2 = series_scaled(std::move(rhs2), sign_pow(pk + pl));

                    // relation = lhs - (rhs1 - rhs2)
                    Series rel = series_sub(std::move(lhs), rhs1, N);
                    for (const auto& [key, v] : rhs2) series_add(rel, key, v, N);

                    for (int m = 0; m + 0 <= degmax; ++m)
                        for (int n = 0; m + n <= degmax; ++n) {
                            FreeElement got = FreeElement::zero(N);
                            auto it = rel.find({1 - m, 1 - n});
                            if (it != rel.end()) got = it->second;
                            const FreeElement want = yang_relation_38(n, m, l, k, j, i, N);
                            ++r.checked;
                            if (!(got == want))
                                r.failures.push_back(Failure{{i, j, k, l, m, n},
                                                             (got - want).to_json(),
                                                             "series coefficient mismatch"});
                        }

                    for (int m = 0; m + 0 <= degmax; ++m)
                        for (int n = 0; m + n <= degmax; ++n) {
                            const FreeElement a = yang_relation_38(m, n, i, j, k, l, N);
                            const FreeElement b =
                                yang_relation_coeff(m + 1, n - 1, i, j, k, l, N, signs) -
                                yang_relation_coeff(m - 1, n + 1, i, j, k, l, N, signs);
                            ++r.checked;
                            if (!(a == b))
                                r.failures.push_back(Failure{{i, j, k, l, m, n},
                                                             (a - b).to_json(),
                                                             "recombination mismatch"});
                        }
                }

    // coefficient form of the parameter-flip symmetry
    for (int n = 1; n <= degmax; ++n)
        for (int i : idx)
            for (int j : idx) {
                const FreeElement lhs = normalize_sign_law(FreeElement::gen(N, YAlphabet::T, n, -i, -j));
                const FreeElement rhs =
                    normalize_sign_law(FreeElement::gen(N, YAlphabet::T, n, i, j))
                        .scaled(Rational(sign_pow(n)));
                ++r.checked;
                if (!(lhs == rhs))
                    r.failures.push_back(
                        Failure{{n, i, j}, (lhs - rhs).to_json(), "sign-law coefficient mismatch"});
            }
    return r;
}

Report verify_omega_correspondence(int N, int mmax, int nmax, const DefrelSigns& dsigns,
                                   const YangSigns& ysigns) {
    Report r;
    r.suite = "omega";
    r.params = ojson{{"N", N}, {"mmax", mmax}, {"nmax", nmax}};
    const auto idx = signed_indices(N);
    for (int m = 1; m <= mmax; ++m)
        for (int n = 1; n <= nmax; ++n)
            for (int i : idx)
                for (int j : idx)
                    for (int k : idx)
                        for (int l : idx) {
                            const int pi = pbit(i), pj = pbit(j), pk = pbit(k), pl = pbit(l);
                            (void)pl;
                            // Both presentations carry the first-index sign
                            // law as a defining relation, and for m > n the
                            // truncated sums only match the r = 0..m-1 sums
                            // after rewriting with it, so both sides are
                            // compared in sign-law normal form.
                            const FreeElement lhs = normalize_sign_law(
                                omega_image(defrel_element(m, n, i, j, k, l, N, dsigns)));
                            // the anti-homomorphism contributes (-1)^(pi+pk+1)
                            // on top of the relation's own sign
                            const int sgn =
                                pi + pk + 1 + (pi & pj) + (pi & pk) + (pj & pk);
                            const FreeElement rhs = normalize_sign_law(
                                yang_relation_coeff(m, n, i, j, k, l, N, ysigns)
                                    .scaled(Rational(sign_pow(sgn))));
                            ++r.checked;
                            if (!(lhs == rhs))
                                r.failures.push_back(Failure{{m, n, i, j, k, l},
                                                             (lhs - rhs).to_json(),
                                                             "omega image mismatch"});
                        }
    return r;
}

Report verify_tau_relations(int N, int M, int degmax, const YangSigns& signs, int jobs) {
    Report r;
    r.suite = "tau";
    r.params = ojson{{"N", N}, {"M", M}, {"degmax", degmax}};
    const AlgebraPtr alg = Algebra::get_lex(N + M);
    const auto idx = signed_indices(N);

    std::map<std::tuple<int, int, int>, Element> tau;
    for (int n = 1; n <= degmax; ++n)
        for (int a : idx)
            for (int b : idx) tau.emplace(std::make_tuple(n, a, b), tau_image(a, b, n, N, M));

    auto eval = [&](const FreeElement& rel) {
        ElementBuilder out(alg);
        for (const auto& [w, c] : rel.terms()) {
            Element prod = Element::unit(alg);
            for (uint32_t code : w) {
                const FreeGen g = unpack_ygen(code);
                prod = prod * tau.at(std::make_tuple(g.n, g.i, g.j));
            }
            out.add(prod, c);
        }
        return out.build();
    };

    struct Inst {
        int m, n, i, j, k, l;
    };
    std::vector<Inst> insts;
    for (int m = 1; m <= degmax - 1; ++m)
        for (int n = 1; m + n <= degmax; ++n)
            for (int i : idx)
                for (int j : idx)
                    for (int k : idx)
                        for (int l : idx) insts.push_back(Inst{m, n, i, j, k, l});

    std::vector<std::optional<Failure>> slots(insts.size());
    parallel_instances(insts.size(), jobs, [&](size_t p) {
        const auto [m, n, i, j, k, l] = insts[p];
        const Element value = eval(yang_relation_coeff(m, n, i, j, k, l, N, signs));
        if (!value.is_zero())
            slots[p] = Failure{{m, n, i, j, k, l}, element_to_json(value),
                               "relation not satisfied by tau images"};
    });
    r.checked = static_cast<long long>(insts.size());
    for (auto& s : slots)
        if (s) r.failures.push_back(std::move(*s));

    for (int n = 1; n <= degmax; ++n)
        for (int i : idx)
            for (int j : idx) {
                const Element delta =
                    tau_image(-i, -j, n, N, M) - tau_image(i, j, n, N, M).scaled(
                                                     Rational(sign_pow(n)));
                ++r.checked;
                if (!delta.is_zero())
                    r.failures.push_back(
                        Failure{{n, i, j}, element_to_json(delta), "sign law violated"});
            }
    return r;
}

// ---------------------------------------------------------------------------

template <size_t L>
std::string FreeTensor<L>::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        std::string body;
        if (!mag.is_one()) body = mag.to_string() + "*";
        for (size_t p = 0; p < L; ++p) {
            if (p) body += " (x) ";
            if (k[p].empty()) {
                body += "1";
            } else {
                for (size_t q = 0; q < k[p].size(); ++q) {
                    if (q) body += "*";
                    body += unpack_ygen(k[p][q]).to_text();
                }
            }
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

template <size_t L>
ojson FreeTensor<L>::to_json() const {
    ojson terms = ojson::array();
    for (const auto& [k, c] : terms_) {
        ojson legs = ojson::array();
        for (size_t p = 0; p < L; ++p) {
            ojson word = ojson::array();
            for (uint32_t code : k[p]) word.push_back(ygen_json(code));
            legs.push_back(std::move(word));
        }
        terms.push_back(ojson{{"coeff", c.to_string()}, {"legs", std::move(legs)}});
    }
    return ojson{{"N", N_}, {"terms", std::move(terms)}};
}

template class FreeTensor<2>;
template class FreeTensor<3>;

Tensor2 comult_coeff(int i, int j, int n, int N) {
    if (n < 1) fail(errc::invalid_argument, "comultiplication degree must be positive");
    Tensor2 out(N);
    for (int k : signed_indices(N)) {
        const int sgn = (pbit(i) ^ pbit(k)) & (pbit(j) ^ pbit(k));
        for (int a = 0; a <= n; ++a) {
            const FreeElement left = FreeElement::gen(N, YAlphabet::T, a, i, k);
            const FreeElement right = FreeElement::gen(N, YAlphabet::T, n - a, k, j);
            if (left.is_zero() || right.is_zero()) continue;
            for (const auto& [wl, cl] : left.terms())
                for (const auto& [wr, cr] : right.terms()) {
                    Rational c = cl * cr;
                    if (sgn) c = -c;
                    out.add_term({wl, wr}, std::move(c));
                }
        }
    }
    return out;
}

Report verify_coassociativity(int N, int nmax) {
    Report r;
    r.suite = "coassoc";
    r.params = ojson{{"N", N}, {"nmax", nmax}};
    const auto idx = signed_indices(N);

    auto delta_of_leg = [&](const YWord& w) -> Tensor2 {
        if (w.empty()) return Tensor2::unit(N);
        const FreeGen g = unpack_ygen(w[0]);
        return comult_coeff(g.i, g.j, g.n, N);
    };

    for (int n = 1; n <= nmax; ++n)
        for (int i : idx)
            for (int j : idx) {
                const Tensor2 d = comult_coeff(i, j, n, N);
                Tensor3 lhs(N), rhs(N);
                for (const auto& [k, c] : d.terms()) {
                    for (const auto& [k2, c2] : delta_of_leg(k[0]).terms())
                        lhs.add_term({k2[0], k2[1], k[1]}, c * c2);
                    for (const auto& [k2, c2] : delta_of_leg(k[1]).terms())
                        rhs.add_term({k[0], k2[0], k2[1]}, c * c2);
                }
                ++r.checked;
                if (!(lhs == rhs))
                    r.failures.push_back(
                        Failure{{n, i, j}, (lhs - rhs).to_json(), "coassociativity violated"});
            }
    return r;
}

}  // namespace qyang
