#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "qyang/order.hpp"

namespace qyang {

/// One factor of a PBW monomial: a generator (by rank in the active order)
/// raised to a positive exponent. Odd generators carry exponent one.
struct Factor {
    int16_t rank;
    int16_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// PBW-ordered monomial: factors strictly increasing in the active order.
/// The empty factor list is the unit.
struct Monomial {
    std::vector<Factor> factors;

    int degree() const {
        int d = 0;
        for (const Factor& f : factors) d += f.exp;
        return d;
    }
    bool is_unit() const { return factors.empty(); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        uint64_t h = 1469598103934665603ull;
        for (const Factor& f : m.factors) {
            h ^= (static_cast<uint64_t>(static_cast<uint16_t>(f.rank)) << 16) |
                 static_cast<uint16_t>(f.exp);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

using MonoId = uint32_t;
using TermVec = std::vector<std::pair<MonoId, Rational>>;  // sorted by MonoId

class Element;
class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Immutable algebra context: size, generator order, bracket table, and the
/// memoization pools behind straightening. Instances obtained through get()
/// are shared process-wide per (K, order); all caches are thread-safe, so
/// elements of one context may be used from concurrent workers.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static AlgebraPtr get(int K, const GeneratorOrder& order);
    static AlgebraPtr get_lex(int K);
    static AlgebraPtr get_hc(int K);
    /// Private instance, never shared through get(); used for custom orders
    /// and for sign-mutation tests.
    static AlgebraPtr make(int K, GeneratorOrder order, BracketSigns signs = {});

    int size() const { return K_; }
    const GeneratorOrder& order() const { return order_; }
    const BracketSigns& bracket_signs() const { return signs_; }
    int generator_count() const { return order_.count(); }

    MonoId intern(const Monomial& m) const;
    const Monomial& monomial(MonoId id) const;
    int degree_of(MonoId id) const;
    Parity parity_of(MonoId id) const;

    /// Straightened product of two PBW monomials (memoized).
    const TermVec& monomial_product(MonoId a, MonoId b) const;

    /// PBW normal form of a word of generator ranks.
    TermVec straighten_word(std::span<const int16_t> word) const;

    /// Bracket of two generators by rank, as (rank, coeff) pairs.
    const std::vector<std::pair<int16_t, Rational>>& bracket(int16_t a, int16_t b) const {
        return brackets_[static_cast<size_t>(a) * static_cast<size_t>(order_.count()) +
                         static_cast<size_t>(b)];
    }

    /// Generic memo slot for derived families (keyed by caller-packed ids).
    const TermVec* cache_lookup(uint64_t key) const;
    const TermVec& cache_store(uint64_t key, TermVec value) const;

private:
    Algebra(int K, GeneratorOrder order, BracketSigns signs);

    int K_;
    GeneratorOrder order_;
    BracketSigns signs_;
    std::vector<std::vector<std::pair<int16_t, Rational>>> brackets_;

    mutable std::shared_mutex pool_mu_;
    mutable std::vector<std::unique_ptr<Monomial>> pool_;
    mutable std::vector<int> pool_degree_;
    mutable std::vector<unsigned char> pool_parity_;
    mutable std::unordered_map<Monomial, MonoId, MonomialHash> pool_index_;

    mutable std::shared_mutex prod_mu_;
    mutable std::unordered_map<uint64_t, TermVec> prod_cache_;

    mutable std::shared_mutex misc_mu_;
    mutable std::unordered_map<uint64_t, TermVec> misc_cache_;
};

/// Finite linear combination of PBW monomials: an element of U(q_K) relative
/// to the context's generator order. Immutable value type; no stored
/// coefficient is zero.
class Element {
public:
    Element() = default;

    static Element zero(AlgebraPtr alg);
    static Element unit(AlgebraPtr alg);
    static Element generator(AlgebraPtr alg, const GeneratorRef& g);
    static Element generator(AlgebraPtr alg, int i, int j);
    static Element from_terms(AlgebraPtr alg, TermVec terms);  // terms must be merged

    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermVec& terms() const { return terms_; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element scaled(const Rational& c) const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Terms in the deterministic rendering order (monomial factor sequences
    /// compared by rank ascending, exponent descending; unit last).
    std::vector<std::pair<MonoId, Rational>> render_terms() const;

    std::string to_text() const;

    /// Re-expresses the element in a context with the same size.
    Element migrate(const AlgebraPtr& target) const;

private:
    AlgebraPtr alg_;
    TermVec terms_;
};

/// Accumulator for building elements term by term.
class ElementBuilder {
public:
    explicit ElementBuilder(AlgebraPtr alg) : alg_(std::move(alg)) {}

    void add(MonoId id, const Rational& c);
    void add(const TermVec& terms, const Rational& scale);
    void add(const Element& e, const Rational& scale) { add(e.terms(), scale); }
    void add(const Element& e) { add(e.terms(), Rational(1)); }
    /// scale * a * b, routed through the monomial-product memo.
    void add_product(const Element& a, const Element& b, const Rational& scale);

    Element build();

private:
    AlgebraPtr alg_;
    std::unordered_map<MonoId, Rational> acc_;
};

Element multiply(const Element& a, const Element& b);
Element supercommutator(const Element& a, const Element& b);
int filtration_degree(const Element& a);                // throws undefined_degree on zero
std::optional<Parity> z2_degree(const Element& a);      // nullopt marks inhomogeneous
Element principal_antiautomorphism(const Element& a);
Element reorder(const Element& a, const AlgebraPtr& target);
Element bracket_element(const AlgebraPtr& alg, const GeneratorRef& a, const GeneratorRef& b);

/// The two homogeneous components (even, odd) of an element.
std::pair<Element, Element> homogeneous_parts(const Element& a);

}  // namespace qyang
