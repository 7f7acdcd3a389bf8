#include "qyang/generators.hpp"

#include <cctype>
#include <charconv>

namespace qyang {

namespace {

void check_index(int K, int v, const char* which) {
    if (v == 0 || v > K || v < -K)
        fail(errc::invalid_index,
             std::string("generator index ") + which + "=" + std::to_string(v) +
                 " out of range for q_" + std::to_string(K));
}

}  // namespace

std::string GeneratorRef::to_text() const {
    return "F[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

GeneratorRef canonicalize(int K, int i, int j) {
    if (K < 1) fail(errc::invalid_index, "algebra size must be positive");
    check_index(K, i, "i");
    check_index(K, j, "j");
    if (i < 0) return GeneratorRef{K, -i, -j};
    return GeneratorRef{K, i, j};
}

GeneratorRef parse_generator(std::string_view text, int K) {
    auto bad = [&]() -> GeneratorRef {
        fail(errc::parse_error, "expected F[i,j], got: " + std::string(text));
    };
    size_t p = 0;
    auto skip_ws = [&]() {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    };
    skip_ws();
    if (p >= text.size() || text[p] != 'F') return bad();
    ++p;
    skip_ws();
    if (p >= text.size() || text[p] != '[') return bad();
    ++p;
    auto read_int = [&](int& out) -> bool {
        skip_ws();
        size_t start = p;
        if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        auto res = std::from_chars(text.data() + start, text.data() + p, out);
        return res.ec == std::errc() && res.ptr == text.data() + p;
    };
    int i = 0, j = 0;
    if (!read_int(i)) return bad();
    skip_ws();
    if (p >= text.size() || text[p] != ',') return bad();
    ++p;
    if (!read_int(j)) return bad();
    skip_ws();
    if (p >= text.size() || text[p] != ']') return bad();
    ++p;
    skip_ws();
    if (p != text.size()) return bad();
    return canonicalize(K, i, j);
}

std::vector<std::pair<GeneratorRef, Rational>> bracket_generators(const GeneratorRef& a,
                                                                  const GeneratorRef& b,
                                                                  const BracketSigns& signs) {
    if (a.algebra_size != b.algebra_size)
        fail(errc::size_mismatch, "bracket of generators from different algebras");
    const int K = a.algebra_size;
    const int i = a.i, j = a.j, k = b.i, l = b.j;
    const int pp = (a.parity().bit() & b.parity().bit());  // deg a * deg b mod 2

    std::vector<std::pair<GeneratorRef, Rational>> out;
    auto add = [&](int gi, int gj, int sgn) {
        GeneratorRef g = canonicalize(K, gi, gj);
        for (auto& [h, c] : out) {
            if (h == g) {
                c += Rational(sgn);
                return;
            }
        }
        out.emplace_back(g, Rational(sgn));
    };

    if (k == j) add(i, l, signs.t1);
    if (i == l) add(k, j, -signs.t2 * sign_pow(pp));
    if (-k == j) add(-i, l, signs.t3);
    if (i == -l) add(k, -j, -signs.t4 * sign_pow(pp));

    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    return out;
}

}  // namespace qyang
