#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qyang/errors.hpp"
#include "qyang/rational.hpp"
#include "qyang/signs.hpp"

namespace qyang {

/// Z2-degree of an index, a generator, or an element.
class Parity {
public:
    constexpr Parity() : v_(0) {}
    constexpr explicit Parity(int v) : v_(static_cast<unsigned char>(v & 1)) {}
    constexpr int bit() const { return v_; }
    constexpr bool is_odd() const { return v_ != 0; }
    friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.v_ ^ b.v_); }
    friend constexpr bool operator==(Parity a, Parity b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Parity a, Parity b) { return a.v_ != b.v_; }

private:
    unsigned char v_;
};

/// 0 for positive indices, 1 for negative ones.
inline Parity parity_of_index(int i) {
    if (i == 0) fail(errc::invalid_index, "index 0 is not a valid basis index");
    return Parity(i > 0 ? 0 : 1);
}

/// Canonical basis generator F[i,j] of q_K: first index positive.
/// F[-i,-j] and F[i,j] denote the same element; the canonical
/// representative keeps i > 0.
struct GeneratorRef {
    int algebra_size = 0;  // K
    int i = 0;
    int j = 0;

    Parity parity() const { return parity_of_index(i) + parity_of_index(j); }
    friend bool operator==(const GeneratorRef&, const GeneratorRef&) = default;

    std::string to_text() const;  // "F[i,j]"
};

/// Canonical representative of F_{ij} in q_K.
GeneratorRef canonicalize(int K, int i, int j);

/// Parses the "F[i,j]" form produced by GeneratorRef::to_text.
GeneratorRef parse_generator(std::string_view text, int K);

/// max(|i|, |j|): the smallest L with F[i,j] in q_L.
inline int generator_level(const GeneratorRef& g) {
    int aj = g.j < 0 ? -g.j : g.j;
    return g.i > aj ? g.i : aj;
}

/// Dense code of a canonical generator, 0 .. 2K^2-1, ascending in (i, j).
inline int generator_code(int K, const GeneratorRef& g) {
    int jslot = g.j < 0 ? g.j + K : K + g.j - 1;
    return (g.i - 1) * 2 * K + jslot;
}

/// Structure constants of the superbracket of two canonical generators.
/// The result is canonicalized with like terms merged; it is linear in the
/// generators (filtration degree at most one).
std::vector<std::pair<GeneratorRef, Rational>> bracket_generators(const GeneratorRef& a,
                                                                  const GeneratorRef& b,
                                                                  const BracketSigns& signs = {});

}  // namespace qyang
