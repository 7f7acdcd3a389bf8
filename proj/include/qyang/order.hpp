#pragma once

#include <string>
#include <vector>

#include "qyang/generators.hpp"

namespace qyang {

/// A total order on the canonical generators of q_K. Orders are data: the
/// PBW basis, straightening, and the boundary decomposition all consult the
/// active order through rank().
class GeneratorOrder {
public:
    enum class Kind { lex, hc, custom };

    /// Ascending in the pair (i, j).
    static GeneratorOrder lex(int K);

    /// Boundary-first arrangement at level K, four blocks:
    ///   1. (K, j) with |j| < K
    ///   2. (K, -K), (K, K)
    ///   3. interior generators (i, j) with i < K, |j| < K
    ///   4. (i, -K), (i, K) with 0 < i < K
    /// ascending lex within each block.
    static GeneratorOrder hc(int K);

    /// Arbitrary arrangement; every canonical generator exactly once.
    static GeneratorOrder custom(int K, std::vector<GeneratorRef> gens, std::string tag);

    /// Parses "lex" or "hc:K" (the K must match).
    static GeneratorOrder from_tag(int K, std::string_view tag);

    int algebra_size() const { return K_; }
    Kind kind() const { return kind_; }
    const std::string& tag() const { return tag_; }

    int count() const { return static_cast<int>(gens_.size()); }
    int rank(const GeneratorRef& g) const { return rank_[generator_code(K_, g)]; }
    const GeneratorRef& generator(int rank) const { return gens_[static_cast<size_t>(rank)]; }
    Parity parity(int rank) const { return Parity(parity_[static_cast<size_t>(rank)]); }

    friend bool operator==(const GeneratorOrder& a, const GeneratorOrder& b) {
        return a.K_ == b.K_ && a.tag_ == b.tag_;
    }

private:
    GeneratorOrder(Kind kind, int K, std::string tag, std::vector<GeneratorRef> gens);

    Kind kind_;
    int K_;
    std::string tag_;
    std::vector<GeneratorRef> gens_;
    std::vector<int> rank_;
    std::vector<unsigned char> parity_;
};

}  // namespace qyang
