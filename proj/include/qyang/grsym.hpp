#pragma once

#include <map>
#include <span>
#include <vector>

#include "qyang/element.hpp"
#include "qyang/report.hpp"

namespace qyang {

/// Generic supercommutative polynomial over a variable type V. V must be
/// ordered and expose a parity through parity_of(V). Odd variables appear at
/// most once per monomial and square to zero; swapping adjacent odd
/// variables negates the coefficient (monomials are normalized by sorting
/// with sign).
template <class V>
class SPoly {
public:
    struct Mono {
        std::vector<std::pair<V, int>> even;  // sorted by variable, exponents > 0
        std::vector<V> odd;                   // strictly increasing
        friend bool operator<(const Mono& a, const Mono& b) {
            if (a.even != b.even) return a.even < b.even;
            return a.odd < b.odd;
        }
        friend bool operator==(const Mono&, const Mono&) = default;
        int degree() const {
            int d = static_cast<int>(odd.size());
            for (const auto& [v, e] : even) d += e;
            return d;
        }
    };

    SPoly() = default;

    static SPoly zero() { return SPoly(); }
    static SPoly unit(Rational c = Rational(1)) {
        SPoly p;
        p.add_term(Mono{}, std::move(c));
        return p;
    }
    static SPoly variable(const V& v) {
        SPoly p;
        Mono m;
        if (parity_of(v).is_odd())
            m.odd.push_back(v);
        else
            m.even.push_back({v, 1});
        p.add_term(std::move(m), Rational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rational>& terms() const { return terms_; }

    void add_term(Mono m, Rational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SPoly operator+(const SPoly& o) const {
        SPoly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }
    SPoly operator-(const SPoly& o) const { return *this + o.scaled(Rational(-1)); }
    SPoly scaled(const Rational& c) const {
        SPoly out;
        if (c.is_zero()) return out;
        for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
        return out;
    }
    SPoly operator-() const { return scaled(Rational(-1)); }

    SPoly operator*(const SPoly& o) const {
        SPoly out;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                int sign = 0;
                Mono m;
                if (!merge_mono(ma, mb, m, sign)) continue;  // repeated odd variable
                Rational c = ca * cb;
                if (sign & 1) c = -c;
                out.add_term(std::move(m), std::move(c));
            }
        return out;
    }

    bool operator==(const SPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SPoly& o) const { return !(*this == o); }

private:
    static bool merge_mono(const Mono& a, const Mono& b, Mono& out, int& sign) {
        // even part: merge-add exponents
        out.even.clear();
        out.odd.clear();
        size_t p = 0, q = 0;
        while (p < a.even.size() || q < b.even.size()) {
            if (q >= b.even.size() || (p < a.even.size() && a.even[p].first < b.even[q].first)) {
                out.even.push_back(a.even[p++]);
            } else if (p >= a.even.size() || b.even[q].first < a.even[p].first) {
                out.even.push_back(b.even[q++]);
            } else {
                out.even.push_back({a.even[p].first, a.even[p].second + b.even[q].second});
                ++p;
                ++q;
            }
        }
        // odd part: signed sorted merge; moving b-element past remaining
        // a-elements counts one transposition each
        sign = 0;
        p = 0;
        q = 0;
        while (p < a.odd.size() || q < b.odd.size()) {
            if (q >= b.odd.size()) {
                out.odd.push_back(a.odd[p++]);
            } else if (p >= a.odd.size()) {
                out.odd.push_back(b.odd[q++]);
            } else if (a.odd[p] < b.odd[q]) {
                out.odd.push_back(a.odd[p++]);
            } else if (b.odd[q] < a.odd[p]) {
                sign += static_cast<int>(a.odd.size() - p);
                out.odd.push_back(b.odd[q++]);
            } else {
                return false;  // square of an odd variable
            }
        }
        return true;
    }

    std::map<Mono, Rational> terms_;
};

/// Variable F[i,j] of the symmetric superalgebra, canonical (i > 0).
struct FVar {
    int16_t i, j;
    friend bool operator<(const FVar& a, const FVar& b) {
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
    friend bool operator==(const FVar&, const FVar&) = default;
};
inline Parity parity_of(const FVar& v) { return parity_of_index(v.j); }

/// Variable of the substitution quotient: either a diagonal marker x_r or a
/// tail marker x^(n)[i,j] (parity that of j).
struct XVar {
    uint8_t kind;  // 0: x_r, 1: x^(n)[i,j]
    int16_t n;     // r for kind 0
    int16_t i, j;  // unused for kind 0
    friend bool operator<(const XVar& a, const XVar& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.n != b.n) return a.n < b.n;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
    friend bool operator==(const XVar&, const XVar&) = default;
};
inline Parity parity_of(const XVar& v) { return v.kind == 0 ? Parity(0) : parity_of_index(v.j); }

/// Supercommutative polynomial in the F-variables of q_K: an element of
/// S(q_K).
class SuperPolynomial {
public:
    explicit SuperPolynomial(int K) : K_(K) {}
    static SuperPolynomial zero(int K) { return SuperPolynomial(K); }
    static SuperPolynomial unit(int K, Rational c = Rational(1));
    static SuperPolynomial variable(int K, int i, int j);  // canonicalizes

    int size() const { return K_; }
    bool is_zero() const { return p_.is_zero(); }
    const SPoly<FVar>& poly() const { return p_; }
    SPoly<FVar>& poly() { return p_; }

    SuperPolynomial operator+(const SuperPolynomial& o) const { return wrap(p_ + o.check(*this)); }
    SuperPolynomial operator-(const SuperPolynomial& o) const { return wrap(p_ - o.check(*this)); }
    SuperPolynomial operator*(const SuperPolynomial& o) const { return wrap(p_ * o.check(*this)); }
    SuperPolynomial scaled(const Rational& c) const { return wrap(p_.scaled(c)); }
    bool operator==(const SuperPolynomial& o) const { return K_ == o.K_ && p_ == o.p_; }
    bool operator!=(const SuperPolynomial& o) const { return !(*this == o); }

    std::string to_text() const;
    ojson to_json() const;

private:
    SuperPolynomial wrap(SPoly<FVar> p) const {
        SuperPolynomial out(K_);
        out.p_ = std::move(p);
        return out;
    }
    const SPoly<FVar>& check(const SuperPolynomial& other) const {
        if (K_ != other.K_) fail(errc::size_mismatch, "polynomials over different sizes");
        return p_;
    }
    int K_;
    SPoly<FVar> p_;
};

/// Polynomial in the quotient variables of the substitution witness.
class XPolynomial {
public:
    XPolynomial() = default;
    static XPolynomial zero() { return XPolynomial(); }
    static XPolynomial unit(Rational c = Rational(1));
    static XPolynomial variable(XVar v);

    bool is_zero() const { return p_.is_zero(); }
    const SPoly<XVar>& poly() const { return p_; }
    SPoly<XVar>& poly() { return p_; }

    XPolynomial operator+(const XPolynomial& o) const { return wrap(p_ + o.p_); }
    XPolynomial operator-(const XPolynomial& o) const { return wrap(p_ - o.p_); }
    XPolynomial operator*(const XPolynomial& o) const { return wrap(p_ * o.p_); }
    XPolynomial scaled(const Rational& c) const { return wrap(p_.scaled(c)); }
    bool operator==(const XPolynomial& o) const { return p_ == o.p_; }
    bool operator!=(const XPolynomial& o) const { return !(*this == o); }

    std::string to_text() const;
    ojson to_json() const;

private:
    XPolynomial wrap(SPoly<XVar> p) const {
        XPolynomial out;
        out.p_ = std::move(p);
        return out;
    }
    SPoly<XVar> p_;
};

/// A matrix-unit slot E[i,j] of a tensor word (signed indices).
struct MU {
    int16_t i, j;
    friend bool operator<(const MU& a, const MU& b) {
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
    friend bool operator==(const MU&, const MU&) = default;
    Parity parity() const { return parity_of_index(i) + parity_of_index(j); }
};

/// Element of the n-fold graded tensor power of End(C^{K|K}), stored as
/// linear combinations of matrix-unit words. Slotwise products carry the
/// graded cross signs; the symmetric group acts with signed slot
/// permutations.
class TensorElement {
public:
    TensorElement(int K, int len) : K_(K), len_(len) {}
    static TensorElement zero(int K, int len) { return TensorElement(K, len); }
    static TensorElement word(int K, std::vector<MU> w, Rational c = Rational(1));
    static TensorElement identity(int K, int len);

    int size() const { return K_; }
    int length() const { return len_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<MU>, Rational>& terms() const { return terms_; }

    void add_term(std::vector<MU> w, Rational c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;
    TensorElement scaled(const Rational& c) const;
    bool operator==(const TensorElement& o) const {
        return K_ == o.K_ && len_ == o.len_ && terms_ == o.terms_;
    }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    /// Signed action of a permutation on the slots; sigma[p] is the slot the
    /// p-th factor moves to.
    TensorElement permuted(std::span<const int> sigma) const;

    /// Left multiplication by the matrix unit placed in the first slot.
    TensorElement slot1_left_mul(MU e) const;

    std::string to_text() const;
    ojson to_json() const;

private:
    int K_, len_;
    std::map<std::vector<MU>, Rational> terms_;
};

/// Image in S^n(q_K) of the top filtration-degree part of a.
SuperPolynomial leading_symbol(const Element& a);

/// Symbols of the family elements, computed directly in S(q_K).
SuperPolynomial f_symbol(int i, int j, int n, int K);
SuperPolynomial c_symbol(int n, int K);

/// E[i1,j1] x ... x E[in,jn] -> F[i1,j1]...F[in,jn] in S(q_K).
SuperPolynomial phi_map(const TensorElement& t);

/// 2^-n times the symmetrized tensor product of the generators, each factor
/// expanded as E[i,j] + E[-i,-j].
TensorElement psi_map(int K, std::span<const GeneratorRef> gens);

/// Image of the cycle (1 2 ... n); n = 1 gives the identity tensor.
TensorElement cyclic_h(int n, int K);

/// phi_n(E^(1)_{ij} H) equals the degree-n family symbol.
bool verify_eh_identity(int n, int i, int j, int K);
Report verify_eh_report(int n, int K);

/// The alternating closed-chain sum in S(q_K) vanishes for every n.
Report verify_vanishing_sums(int n, int K);

/// Substitution quotient: chain variables to 1, designated tails to
/// x^(n)[i,j], trailing diagonals to x_r, all other variables to 0.
struct XsSubstitution {
    int s = 0, N = 0, M = 0;  // K = N + M
    enum class ImageKind { one, xvar, xr };
    struct Image {
        ImageKind kind;
        XVar var;
    };
    std::map<std::pair<int, int>, Image> images;  // canonical (i, j) -> image; absent means 0

    static XsSubstitution make(int s, int N);
    int algebra_size() const { return N + M; }
};

XPolynomial xs_image(const SuperPolynomial& p, const XsSubstitution& sub);

/// Triangularity of the family symbols in the substitution quotient,
/// including the stated power-sum leading term of the trace symbols.
Report xs_independence_check(const XsSubstitution& sub);

}  // namespace qyang
