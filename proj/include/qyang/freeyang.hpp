#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "qyang/element.hpp"
#include "qyang/report.hpp"

namespace qyang {

enum class YAlphabet : uint8_t { F = 0, T = 1 };

/// Generator of a free associative superalgebra: T^(n)[i,j] or an abstract
/// F^(n)[i,j]. T with n = 0 collapses to delta_ij, T with n = -1 to zero;
/// both collapses happen at element construction, so no stored word ever
/// contains them.
struct FreeGen {
    YAlphabet alphabet;
    int n;
    int i, j;

    Parity parity() const { return parity_of_index(i) + parity_of_index(j); }
    std::string to_text() const;
};

using YWord = std::vector<uint32_t>;

uint32_t pack_ygen(const FreeGen& g);
FreeGen unpack_ygen(uint32_t code);

/// Finite linear combination of words over the abstract alphabet: an element
/// of a free associative superalgebra with index bound N.
class FreeElement {
public:
    explicit FreeElement(int N) : N_(N) {}

    static FreeElement zero(int N) { return FreeElement(N); }
    static FreeElement unit(int N, Rational c = Rational(1));
    static FreeElement gen(int N, YAlphabet a, int n, int i, int j);

    int bound() const { return N_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<YWord, Rational>& terms() const { return terms_; }

    void add_term(YWord w, Rational c);

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator*(const FreeElement& o) const;  // word concatenation
    FreeElement scaled(const Rational& c) const;
    FreeElement operator-() const { return scaled(Rational(-1)); }
    bool operator==(const FreeElement& o) const { return N_ == o.N_ && terms_ == o.terms_; }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    static Parity word_parity(const YWord& w);

    std::string to_text() const;
    ojson to_json() const;

private:
    int N_;
    std::map<YWord, Rational> terms_;
};

FreeElement free_supercommutator(const FreeElement& a, const FreeElement& b);

/// The anti-isomorphism on words: F^(n)[i,j] -> (-1)^par(i) T^(n)[j,i],
/// words reversed with the graded sign.
FreeElement omega_image(const FreeElement& a);

/// Rewrites every generator to its positive-first-index representative:
/// F^(n)[-i,-j] = (-1)^(n-1) F^(n)[i,j] and T^(n)[-i,-j] = (-1)^n T^(n)[i,j].
FreeElement normalize_sign_law(const FreeElement& a);

/// LHS - RHS of the truncated defining relation over the F alphabet
/// (sums over r = 1..min(m,n)-1).
FreeElement defrel_element(int m, int n, int i, int j, int k, int l, int N,
                           const DefrelSigns& signs = {});

/// LHS - RHS of the untruncated supercommutator formula over the F alphabet
/// (sums over r = 1..m-1).
FreeElement prop31_element(int m, int n, int i, int j, int k, int l, int N);

/// LHS - RHS of the T-alphabet relation corresponding to the defining
/// relation under the anti-isomorphism. Accepts m, n >= -1; instances with
/// m <= 0 collapse to zero via the degree conventions.
FreeElement yang_relation_coeff(int m, int n, int i, int j, int k, int l, int N,
                                const YangSigns& signs = {});

/// LHS - RHS of the equivalent two-parameter relation family (m, n >= 0)
/// whose generating function is the series relation.
FreeElement yang_relation_38(int m, int n, int i, int j, int k, int l, int N);

/// Substitutes concrete family elements for the F alphabet.
Element evaluate_f_element(const FreeElement& a, const AlgebraPtr& alg);

/// Image of T^(n)[i,j] under the evaluation homomorphism at level M:
/// (-1)^par(j) times the principal anti-automorphism of the family element
/// with transposed indices in U(q_{N+M}).
Element tau_image(int i, int j, int n, int N, int M);

/// Expands the series relation in 1/x, 1/y, extracts every coefficient with
/// m + n <= degmax, compares against the two-parameter relation family, and
/// checks the recombination of that family from the T-alphabet relation.
Report verify_series_equivalence(int N, int degmax, const YangSigns& signs = {});

/// Word-by-word identity between the image of the defining relation under
/// omega and the signed T-alphabet relation.
Report verify_omega_correspondence(int N, int mmax, int nmax, const DefrelSigns& dsigns = {},
                                   const YangSigns& ysigns = {});

/// Substitutes tau images into every T-relation instance with m + n <=
/// degmax and into the first-index sign-law coefficients; all results must
/// vanish in U(q_{N+M}).
Report verify_tau_relations(int N, int M, int degmax, const YangSigns& signs = {}, int jobs = 1);

/// Element of the L-fold graded tensor power of the free superalgebra.
template <size_t L>
class FreeTensor {
public:
    using Key = std::array<YWord, L>;

    explicit FreeTensor(int N) : N_(N) {}
    static FreeTensor zero(int N) { return FreeTensor(N); }
    static FreeTensor unit(int N, Rational c = Rational(1)) {
        FreeTensor t(N);
        t.add_term(Key{}, std::move(c));
        return t;
    }

    int bound() const { return N_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(Key k, Rational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FreeTensor operator+(const FreeTensor& o) const {
        FreeTensor out = *this;
        for (const auto& [k, c] : o.terms_) out.add_term(k, c);
        return out;
    }
    FreeTensor operator-(const FreeTensor& o) const { return *this + o.scaled(Rational(-1)); }
    FreeTensor scaled(const Rational& c) const {
        FreeTensor out(N_);
        if (c.is_zero()) return out;
        for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
        return out;
    }

    /// Graded tensor-product multiplication: legs multiply slotwise with the
    /// sign rule for moving right-hand legs past left-hand ones.
    FreeTensor operator*(const FreeTensor& o) const {
        FreeTensor out(N_);
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_) {
                int sign = 0;
                for (size_t p = 0; p + 1 < L; ++p)
                    for (size_t q = p + 1; q < L; ++q)
                        sign += FreeElement::word_parity(kb[p]).bit() &
                                FreeElement::word_parity(ka[q]).bit();
                Key k;
                for (size_t p = 0; p < L; ++p) {
                    k[p] = ka[p];
                    k[p].insert(k[p].end(), kb[p].begin(), kb[p].end());
                }
                Rational c = ca * cb;
                if (sign & 1) c = -c;
                out.add_term(std::move(k), std::move(c));
            }
        return out;
    }

    bool operator==(const FreeTensor& o) const { return N_ == o.N_ && terms_ == o.terms_; }
    bool operator!=(const FreeTensor& o) const { return !(*this == o); }

    std::string to_text() const;
    ojson to_json() const;

private:
    int N_;
    std::map<Key, Rational> terms_;
};

using Tensor2 = FreeTensor<2>;
using Tensor3 = FreeTensor<3>;

/// Coefficient form of the comultiplication on T^(n)[i,j]: the sum over the
/// middle index and all degree splittings, with collapse rules applied.
Tensor2 comult_coeff(int i, int j, int n, int N);

/// (Delta x id) Delta = (id x Delta) Delta on T^(n)[i,j] for n <= nmax.
Report verify_coassociativity(int N, int nmax);

}  // namespace qyang
