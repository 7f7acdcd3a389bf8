#include "qyang/grsym.hpp"

#include <algorithm>
#include <functional>

namespace qyang {

namespace {

std::vector<int> signed_indices(int K) {
    std::vector<int> v;
    for (int p = -K; p <= K; ++p)
        if (p != 0) v.push_back(p);
    return v;
}

FVar fvar(int K, int i, int j) {
    GeneratorRef g = canonicalize(K, i, j);
    return FVar{static_cast<int16_t>(g.i), static_cast<int16_t>(g.j)};
}

Rational pow_rational(Rational base, int e) {
    Rational out(1);
    for (int p = 0; p < e; ++p) out *= base;
    return out;
}

}  // namespace

SuperPolynomial SuperPolynomial::unit(int K, Rational c) {
    SuperPolynomial p(K);
    p.p_ = SPoly<FVar>::unit(std::move(c));
    return p;
}

SuperPolynomial SuperPolynomial::variable(int K, int i, int j) {
    SuperPolynomial p(K);
    p.p_ = SPoly<FVar>::variable(fvar(K, i, j));
    return p;
}

std::string SuperPolynomial::to_text() const {
    if (p_.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p_.terms()) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        std::string body;
        bool first = true;
        for (const auto& [v, e] : m.even) {
            if (!first) body += "*";
            first = false;
            body += "F[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
            if (e > 1) body += "^" + std::to_string(e);
        }
        for (const FVar& v : m.odd) {
            if (!first) body += "*";
            first = false;
            body += "F[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
        }
        if (body.empty())
            body = mag.to_string();
        else if (!mag.is_one())
            body = mag.to_string() + "*" + body;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

ojson SuperPolynomial::to_json() const {
    ojson terms = ojson::array();
    for (const auto& [m, c] : p_.terms()) {
        ojson vars = ojson::array();
        for (const auto& [v, e] : m.even)
            vars.push_back(ojson{{"i", v.i}, {"j", v.j}, {"e", e}});
        for (const FVar& v : m.odd) vars.push_back(ojson{{"i", v.i}, {"j", v.j}, {"e", 1}});
        terms.push_back(ojson{{"coeff", c.to_string()}, {"variables", std::move(vars)}});
    }
    ojson j;
    j["algebra"] = ojson{{"family", "q"}, {"size", K_}};
    j["terms"] = std::move(terms);
    return j;
}

XPolynomial XPolynomial::unit(Rational c) {
    XPolynomial p;
    p.p_ = SPoly<XVar>::unit(std::move(c));
    return p;
}

XPolynomial XPolynomial::variable(XVar v) {
    XPolynomial p;
    p.p_ = SPoly<XVar>::variable(v);
    return p;
}

namespace {

std::string xvar_text(const XVar& v) {
    if (v.kind == 0) return "x_" + std::to_string(v.n);
    return "x^" + std::to_string(v.n) + "[" + std::to_string(v.i) + "," + std::to_string(v.j) +
           "]";
}

}  // namespace

std::string XPolynomial::to_text() const {
    if (p_.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p_.terms()) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        std::string body;
        bool first = true;
        for (const auto& [v, e] : m.even) {
            if (!first) body += "*";
            first = false;
            body += xvar_text(v);
            if (e > 1) body += "^" + std::to_string(e);
        }
        for (const XVar& v : m.odd) {
            if (!first) body += "*";
            first = false;
            body += xvar_text(v);
        }
        if (body.empty())
            body = mag.to_string();
        else if (!mag.is_one())
            body = mag.to_string() + "*" + body;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

ojson XPolynomial::to_json() const {
    ojson terms = ojson::array();
    for (const auto& [m, c] : p_.terms()) {
        ojson vars = ojson::array();
        auto var_json = [](const XVar& v, int e) {
            if (v.kind == 0) return ojson{{"r", v.n}, {"e", e}};
            return ojson{{"n", v.n}, {"i", v.i}, {"j", v.j}, {"e", e}};
        };
        for (const auto& [v, e] : m.even) vars.push_back(var_json(v, e));
        for (const XVar& v : m.odd) vars.push_back(var_json(v, 1));
        terms.push_back(ojson{{"coeff", c.to_string()}, {"variables", std::move(vars)}});
    }
    return ojson{{"terms", std::move(terms)}};
}

// ---------------------------------------------------------------------------

TensorElement TensorElement::word(int K, std::vector<MU> w, Rational c) {
    TensorElement t(K, static_cast<int>(w.size()));
    t.add_term(std::move(w), std::move(c));
    return t;
}

TensorElement TensorElement::identity(int K, int len) {
    TensorElement t(K, len);
    std::vector<MU> w(static_cast<size_t>(len));
    std::function<void(int)> rec = [&](int slot) {
        if (slot == len) {
            t.add_term(w, Rational(1));
            return;
        }
        for (int a : signed_indices(K)) {
            w[static_cast<size_t>(slot)] = MU{static_cast<int16_t>(a), static_cast<int16_t>(a)};
            rec(slot + 1);
        }
    };
    rec(0);
    return t;
}

void TensorElement::add_term(std::vector<MU> w, Rational c) {
    if (c.is_zero()) return;
    if (static_cast<int>(w.size()) != len_)
        fail(errc::size_mismatch, "tensor word of the wrong length");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    if (K_ != o.K_ || len_ != o.len_) fail(errc::size_mismatch, "tensor shapes differ");
    TensorElement out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    return *this + o.scaled(Rational(-1));
}

TensorElement TensorElement::scaled(const Rational& c) const {
    TensorElement out(K_, len_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    if (K_ != o.K_ || len_ != o.len_) fail(errc::size_mismatch, "tensor shapes differ");
    TensorElement out(K_, len_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            // cross sign: right-hand slots move past left-hand ones
            int sign = 0;
            for (int p = 0; p + 1 < len_; ++p)
                for (int q = p + 1; q < len_; ++q)
                    sign += wb[static_cast<size_t>(p)].parity().bit() &
                            wa[static_cast<size_t>(q)].parity().bit();
            std::vector<MU> w(static_cast<size_t>(len_));
            bool alive = true;
            for (int p = 0; p < len_ && alive; ++p) {
                const MU& x = wa[static_cast<size_t>(p)];
                const MU& y = wb[static_cast<size_t>(p)];
                if (x.j != y.i) alive = false;
                w[static_cast<size_t>(p)] = MU{x.i, y.j};
            }
            if (!alive) continue;
            Rational c = ca * cb;
            if (sign & 1) c = -c;
            out.add_term(std::move(w), std::move(c));
        }
    return out;
}

TensorElement TensorElement::permuted(std::span<const int> sigma) const {
    if (static_cast<int>(sigma.size()) != len_)
        fail(errc::invalid_argument, "permutation length mismatch");
    TensorElement out(K_, len_);
    for (const auto& [w, c] : terms_) {
        std::vector<MU> nw(static_cast<size_t>(len_));
        for (int p = 0; p < len_; ++p) nw[static_cast<size_t>(sigma[static_cast<size_t>(p)])] =
            w[static_cast<size_t>(p)];
        // odd-odd inversions of the slot permutation
        int sign = 0;
        for (int p = 0; p < len_; ++p)
            for (int q = p + 1; q < len_; ++q)
                if (sigma[static_cast<size_t>(p)] > sigma[static_cast<size_t>(q)])
                    sign += w[static_cast<size_t>(p)].parity().bit() &
                            w[static_cast<size_t>(q)].parity().bit();
        Rational nc = c;
        if (sign & 1) nc = -nc;
        out.add_term(std::move(nw), std::move(nc));
    }
    return out;
}

TensorElement TensorElement::slot1_left_mul(MU e) const {
    TensorElement out(K_, len_);
    for (const auto& [w, c] : terms_) {
        if (e.j != w[0].i) continue;
        std::vector<MU> nw = w;
        nw[0] = MU{e.i, w[0].j};
        out.add_term(std::move(nw), c);
    }
    return out;
}

std::string TensorElement::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        std::string body;
        if (!mag.is_one()) body = mag.to_string() + "*";
        for (size_t p = 0; p < w.size(); ++p) {
            if (p) body += " (x) ";
            body += "E[" + std::to_string(w[p].i) + "," + std::to_string(w[p].j) + "]";
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

ojson TensorElement::to_json() const {
    ojson terms = ojson::array();
    for (const auto& [w, c] : terms_) {
        ojson slots = ojson::array();
        for (const MU& e : w) slots.push_back(ojson{{"i", e.i}, {"j", e.j}});
        terms.push_back(ojson{{"coeff", c.to_string()}, {"slots", std::move(slots)}});
    }
    return ojson{{"K", K_}, {"n", len_}, {"terms", std::move(terms)}};
}

// ---------------------------------------------------------------------------

SuperPolynomial leading_symbol(const Element& a) {
    if (a.is_zero()) fail(errc::undefined_degree, "symbol of the zero element");
    const AlgebraPtr& alg = a.algebra();
    const int K = alg->size();
    const int top = filtration_degree(a);
    SuperPolynomial out = SuperPolynomial::zero(K);
    for (const auto& [id, c] : a.terms()) {
        if (alg->degree_of(id) != top) continue;
        SPoly<FVar> mono = SPoly<FVar>::unit(c);
        for (const Factor& f : alg->monomial(id).factors) {
            const GeneratorRef& g = alg->order().generator(f.rank);
            const SPoly<FVar> v =
                SPoly<FVar>::variable(FVar{static_cast<int16_t>(g.i), static_cast<int16_t>(g.j)});
            for (int e = 0; e < f.exp; ++e) mono = mono * v;
        }
        out.poly() = out.poly() + mono;
    }
    return out;
}

SuperPolynomial f_symbol(int i, int j, int n, int K) {
    if (n < 1) fail(errc::invalid_argument, "family degree must be positive");
    canonicalize(K, i, j);
    const auto idx = signed_indices(K);
    SuperPolynomial out = SuperPolynomial::zero(K);
    std::vector<int> chain(static_cast<size_t>(n + 1));
    chain.front() = i;
    chain.back() = j;
    std::function<void(int, int)> rec = [&](int pos, int sign) {
        if (pos == n) {
            SPoly<FVar> mono = SPoly<FVar>::unit(Rational(sign));
            for (int p = 0; p < n; ++p)
                mono = mono * SPoly<FVar>::variable(
                                  fvar(K, chain[static_cast<size_t>(p)],
                                       chain[static_cast<size_t>(p + 1)]));
            out.poly() = out.poly() + mono;
            return;
        }
        for (int k : idx) {
            chain[static_cast<size_t>(pos)] = k;
            rec(pos + 1, k < 0 ? -sign : sign);
        }
    };
    rec(1, 1);
    return out;
}

SuperPolynomial c_symbol(int n, int K) {
    SuperPolynomial out = SuperPolynomial::zero(K);
    for (int k : signed_indices(K)) out = out + f_symbol(k, k, n, K);
    return out;
}

SuperPolynomial phi_map(const TensorElement& t) {
    const int K = t.size();
    SuperPolynomial out = SuperPolynomial::zero(K);
    for (const auto& [w, c] : t.terms()) {
        SPoly<FVar> mono = SPoly<FVar>::unit(c);
        for (const MU& e : w) mono = mono * SPoly<FVar>::variable(fvar(K, e.i, e.j));
        out.poly() = out.poly() + mono;
    }
    return out;
}

TensorElement psi_map(int K, std::span<const GeneratorRef> gens) {
    if (gens.empty()) fail(errc::invalid_argument, "psi of an empty sequence");
    const int n = static_cast<int>(gens.size());
    // base tensor: each factor expanded as E[i,j] + E[-i,-j]
    TensorElement base(K, n);
    std::vector<MU> w(static_cast<size_t>(n));
    std::function<void(int)> expand = [&](int slot) {
        if (slot == n) {
            base.add_term(w, Rational(1));
            return;
        }
        const GeneratorRef& g = gens[static_cast<size_t>(slot)];
        if (g.algebra_size != K) fail(errc::size_mismatch, "generator from a different algebra");
        w[static_cast<size_t>(slot)] = MU{static_cast<int16_t>(g.i), static_cast<int16_t>(g.j)};
        expand(slot + 1);
        w[static_cast<size_t>(slot)] = MU{static_cast<int16_t>(-g.i), static_cast<int16_t>(-g.j)};
        expand(slot + 1);
    };
    expand(0);

    // average over the signed symmetric-group action
    std::vector<int> sigma(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) sigma[static_cast<size_t>(p)] = p;
    TensorElement sum = TensorElement::zero(K, n);
    long count = 0;
    do {
        sum = sum + base.permuted(sigma);
        ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    Rational scale = Rational(1, count) * pow_rational(Rational(1, 2), n);
    return sum.scaled(scale);
}

TensorElement cyclic_h(int n, int K) {
    if (n < 1) fail(errc::invalid_argument, "tensor length must be positive");
    if (n == 1) return TensorElement::identity(K, 1);
    TensorElement out(K, n);
    const auto idx = signed_indices(K);
    std::vector<int> ks(static_cast<size_t>(n));
    std::function<void(int, int)> rec = [&](int pos, int sign) {
        if (pos == n) {
            std::vector<MU> w(static_cast<size_t>(n));
            w[0] = MU{static_cast<int16_t>(ks[static_cast<size_t>(n - 1)]),
                      static_cast<int16_t>(ks[0])};
            for (int p = 1; p < n; ++p)
                w[static_cast<size_t>(p)] = MU{static_cast<int16_t>(ks[static_cast<size_t>(p - 1)]),
                                               static_cast<int16_t>(ks[static_cast<size_t>(p)])};
            out.add_term(std::move(w), Rational(sign));
            return;
        }
        for (int k : idx) {
            ks[static_cast<size_t>(pos)] = k;
            // the sign exponent runs over the first n-1 summation indices
            rec(pos + 1, (pos < n - 1 && k < 0) ? -sign : sign);
        }
    };
    rec(0, 1);
    return out;
}

bool verify_eh_identity(int n, int i, int j, int K) {
    canonicalize(K, i, j);
    const TensorElement h = cyclic_h(n, K);
    const TensorElement eh =
        h.slot1_left_mul(MU{static_cast<int16_t>(i), static_cast<int16_t>(j)});
    return phi_map(eh) == f_symbol(i, j, n, K);
}

Report verify_eh_report(int n, int K) {
    Report r;
    r.suite = "eh";
    r.params = ojson{{"K", K}, {"n", n}};
    for (int i : signed_indices(K))
        for (int j : signed_indices(K)) {
            ++r.checked;
            if (!verify_eh_identity(n, i, j, K)) {
                const TensorElement eh = cyclic_h(n, K).slot1_left_mul(
                    MU{static_cast<int16_t>(i), static_cast<int16_t>(j)});
                const SuperPolynomial d = phi_map(eh) - f_symbol(i, j, n, K);
                r.failures.push_back(Failure{{n, i, j}, d.to_json(), "phi image differs"});
            }
        }
    return r;
}

Report verify_vanishing_sums(int n, int K) {
    Report r;
    r.suite = "vanish";
    r.params = ojson{{"K", K}, {"n", n}};
    const auto idx = signed_indices(K);
    SuperPolynomial sum = SuperPolynomial::zero(K);
    std::vector<int> ks(static_cast<size_t>(n));
    std::function<void(int, int)> rec = [&](int pos, int sign) {
        if (pos == n) {
            SPoly<FVar> mono = SPoly<FVar>::unit(Rational(sign));
            mono = mono * SPoly<FVar>::variable(fvar(K, -ks[static_cast<size_t>(n - 1)], ks[0]));
            for (int p = 1; p < n; ++p)
                mono = mono * SPoly<FVar>::variable(fvar(K, ks[static_cast<size_t>(p - 1)],
                                                         ks[static_cast<size_t>(p)]));
            sum.poly() = sum.poly() + mono;
            return;
        }
        for (int k : idx) {
            ks[static_cast<size_t>(pos)] = k;
            rec(pos + 1, k < 0 ? -sign : sign);  // all n indices carry the sign here
        }
    };
    rec(0, 1);
    r.checked = 1;
    if (!sum.is_zero())
        r.failures.push_back(Failure{{n}, sum.to_json(), "closed-chain sum did not vanish"});
    return r;
}

// ---------------------------------------------------------------------------

XsSubstitution XsSubstitution::make(int s, int N) {
    if (s < 1 || N < 0) fail(errc::config_error, "substitution needs s >= 1 and N >= 0");
    XsSubstitution sub;
    sub.s = s;
    sub.N = N;
    // one disjoint block of n-1 fresh indices per triple, blocks consecutive
    // from N+1 in the order (n, i, j)
    int total = 0;
    for (int n = 2; n <= s; ++n) total += (n - 1) * N * 2 * N;
    sub.M = total + s;
    const int K = N + total + s;

    int next = N + 1;
    for (int n = 1; n <= s; ++n)
        for (int i = 1; i <= N; ++i)
            for (int j = -N; j <= N; ++j) {
                if (j == 0) continue;
                std::vector<int> chain;
                chain.push_back(i);
                for (int p = 0; p < n - 1; ++p) chain.push_back(next++);
                chain.push_back(j);
                // chain pairs map to 1, the tail to the marked variable
                for (size_t p = 0; p + 2 < chain.size(); ++p)
                    sub.images[{chain[p], chain[p + 1]}] = Image{ImageKind::one, XVar{}};
                const XVar tail{1, static_cast<int16_t>(n), static_cast<int16_t>(i),
                                static_cast<int16_t>(j)};
                sub.images[{chain[chain.size() - 2], chain.back()}] =
                    Image{ImageKind::xvar, tail};
            }
    for (int rr = 1; rr <= s; ++rr) {
        const int d = K - s + rr;
        sub.images[{d, d}] = Image{ImageKind::xr, XVar{0, static_cast<int16_t>(rr), 0, 0}};
    }
    return sub;
}

XPolynomial xs_image(const SuperPolynomial& p, const XsSubstitution& sub) {
    if (p.size() != sub.algebra_size())
        fail(errc::size_mismatch, "polynomial size differs from substitution size");
    XPolynomial out = XPolynomial::zero();
    for (const auto& [m, c] : p.poly().terms()) {
        SPoly<XVar> mono = SPoly<XVar>::unit(c);
        bool alive = true;
        auto apply = [&](const FVar& v, int e) {
            auto it = sub.images.find({v.i, v.j});
            if (it == sub.images.end()) {
                alive = false;
                return;
            }
            if (it->second.kind == XsSubstitution::ImageKind::one) return;
            const SPoly<XVar> x = SPoly<XVar>::variable(it->second.var);
            for (int q = 0; q < e && alive; ++q) {
                mono = mono * x;
                if (mono.is_zero()) alive = false;
            }
        };
        for (const auto& [v, e] : m.even) {
            if (!alive) break;
            apply(v, e);
        }
        for (const FVar& v : m.odd) {
            if (!alive) break;
            apply(v, 1);
        }
        if (alive) out.poly() = out.poly() + mono;
    }
    return out;
}

Report xs_independence_check(const XsSubstitution& sub) {
    Report r;
    r.suite = "independence";
    r.params = ojson{{"s", sub.s}, {"N", sub.N}, {"M", sub.M}};
    const int K = sub.algebra_size();

    auto max_bad_var = [](const XPolynomial& p, int bound) {
        // true iff some monomial contains an x_r or an x^(m) with m > bound
        for (const auto& [m, c] : p.poly().terms()) {
            for (const auto& [v, e] : m.even)
                if (v.kind == 0 || v.n > bound) return true;
            for (const XVar& v : m.odd)
                if (v.kind == 0 || v.n > bound) return true;
        }
        return false;
    };

    for (int n = 1; n <= sub.s; ++n)
        for (int i = 1; i <= sub.N; ++i)
            for (int j = -sub.N; j <= sub.N; ++j) {
                if (j == 0) continue;
                const XPolynomial img = xs_image(f_symbol(i, j, n, K), sub);
                const XVar tail{1, static_cast<int16_t>(n), static_cast<int16_t>(i),
                                static_cast<int16_t>(j)};
                const XPolynomial rem = img - XPolynomial::variable(tail);
                ++r.checked;
                if (max_bad_var(rem, n - 1))
                    r.failures.push_back(Failure{
                        {n, i, j}, rem.to_json(),
                        "family image is not x^" + std::to_string(n) + " plus lower terms"});
            }

    for (int n = 1; n <= sub.s; n += 2) {
        const XPolynomial img = xs_image(c_symbol(n, K), sub);
        XPolynomial lead = XPolynomial::zero();
        for (int rr = 1; rr <= sub.s; ++rr) {
            XPolynomial p = XPolynomial::unit();
            const XPolynomial x = XPolynomial::variable(XVar{0, static_cast<int16_t>(rr), 0, 0});
            for (int e = 0; e < n; ++e) p = p * x;
            lead = lead + p;
        }
        // witnessed diagonal coefficient, recorded for diagnosis
        {
            SPoly<XVar>::Mono probe;
            probe.even.push_back({XVar{0, 1, 0, 0}, n});
            Rational coeff(0);
            auto it = img.poly().terms().find(probe);
            if (it != img.poly().terms().end()) coeff = it->second;
            r.params["trace_leading_coeff_n" + std::to_string(n)] = coeff.to_string();
        }
        const XPolynomial rem = img - lead.scaled(pow_rational(Rational(2), n));
        ++r.checked;
        if (max_bad_var(rem, n))
            r.failures.push_back(
                Failure{{n}, rem.to_json(),
                        "trace image is not 2^n * power sum plus family terms"});
    }
    return r;
}

}  // namespace qyang
