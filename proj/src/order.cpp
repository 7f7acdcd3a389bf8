#include "qyang/order.hpp"

#include <algorithm>

namespace qyang {

namespace {

bool lex_less(const GeneratorRef& a, const GeneratorRef& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

std::vector<GeneratorRef> all_generators(int K) {
    std::vector<GeneratorRef> gens;
    gens.reserve(static_cast<size_t>(2 * K * K));
    for (int i = 1; i <= K; ++i)
        for (int j = -K; j <= K; ++j) {
            if (j == 0) continue;
            gens.push_back(GeneratorRef{K, i, j});
        }
    return gens;
}

}  // namespace

GeneratorOrder::GeneratorOrder(Kind kind, int K, std::string tag, std::vector<GeneratorRef> gens)
    : kind_(kind), K_(K), tag_(std::move(tag)), gens_(std::move(gens)) {
    if (K_ < 1) fail(errc::invalid_index, "algebra size must be positive");
    const size_t n = static_cast<size_t>(2 * K_ * K_);
    if (gens_.size() != n)
        fail(errc::config_error, "generator order must list every canonical generator once");
    rank_.assign(n, -1);
    parity_.resize(n);
    for (size_t r = 0; r < n; ++r) {
        const GeneratorRef& g = gens_[r];
        if (g.algebra_size != K_ || g.i < 1 || g.i > K_ || g.j == 0 || g.j > K_ || g.j < -K_)
            fail(errc::config_error, "non-canonical generator in order");
        int code = generator_code(K_, g);
        if (rank_[static_cast<size_t>(code)] != -1)
            fail(errc::config_error, "duplicate generator in order");
        rank_[static_cast<size_t>(code)] = static_cast<int>(r);
        parity_[r] = static_cast<unsigned char>(g.parity().bit());
    }
}

GeneratorOrder GeneratorOrder::lex(int K) {
    auto gens = all_generators(K);
    std::sort(gens.begin(), gens.end(), lex_less);
    return GeneratorOrder(Kind::lex, K, "lex", std::move(gens));
}

GeneratorOrder GeneratorOrder::hc(int K) {
    auto block_of = [K](const GeneratorRef& g) {
        int aj = g.j < 0 ? -g.j : g.j;
        if (g.i == K) return aj == K ? 1 : 0;
        return aj == K ? 3 : 2;
    };
    auto gens = all_generators(K);
    std::sort(gens.begin(), gens.end(), [&](const GeneratorRef& a, const GeneratorRef& b) {
        int ba = block_of(a), bb = block_of(b);
        if (ba != bb) return ba < bb;
        return lex_less(a, b);
    });
    return GeneratorOrder(Kind::hc, K, "hc:" + std::to_string(K), std::move(gens));
}

GeneratorOrder GeneratorOrder::custom(int K, std::vector<GeneratorRef> gens, std::string tag) {
    return GeneratorOrder(Kind::custom, K, std::move(tag), std::move(gens));
}

GeneratorOrder GeneratorOrder::from_tag(int K, std::string_view tag) {
    if (tag == "lex") return lex(K);
    std::string hc_tag = "hc:" + std::to_string(K);
    if (tag == hc_tag) return hc(K);
    fail(errc::parse_error, "unknown order tag: " + std::string(tag));
}

}  // namespace qyang
