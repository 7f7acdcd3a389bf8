#include "qyang/json_io.hpp"

namespace qyang {

ojson element_to_json(const Element& e) {
    const AlgebraPtr& alg = e.algebra();
    if (!alg) fail(errc::invalid_argument, "uninitialized element");
    if (alg->order().kind() == GeneratorOrder::Kind::custom)
        fail(errc::config_error, "custom generator orders have no serialized form");
    ojson j;
    j["algebra"] = ojson{{"family", "q"}, {"size", alg->size()}};
    j["order"] = alg->order().tag();
    ojson terms = ojson::array();
    for (const auto& [id, c] : e.render_terms()) {
        ojson t;
        t["coeff"] = c.to_string();
        ojson mono = ojson::array();
        for (const Factor& f : alg->monomial(id).factors) {
            const GeneratorRef& g = alg->order().generator(f.rank);
            mono.push_back(ojson{{"i", g.i}, {"j", g.j}, {"e", f.exp}});
        }
        t["monomial"] = std::move(mono);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Element element_from_json(const ojson& j) {
    if (!j.is_object()) fail(errc::parse_error, "element JSON must be an object");
    if (!j.contains("algebra") || !j["algebra"].is_object())
        fail(errc::parse_error, "missing algebra descriptor");
    const ojson& a = j["algebra"];
    if (a.value("family", "") != std::string("q"))
        fail(errc::parse_error, "unsupported algebra family");
    if (!a.contains("size") || !a["size"].is_number_integer())
        fail(errc::parse_error, "missing algebra size");
    const int K = a["size"].get<int>();
    if (K < 1) fail(errc::parse_error, "algebra size must be positive");
    const std::string order_tag = j.value("order", "lex");
    AlgebraPtr alg = Algebra::get(K, GeneratorOrder::from_tag(K, order_tag));

    ElementBuilder out(alg);
    if (j.contains("terms")) {
        if (!j["terms"].is_array()) fail(errc::parse_error, "terms must be an array");
        for (const auto& t : j["terms"]) {
            if (!t.is_object() || !t.contains("coeff"))
                fail(errc::parse_error, "term must carry a coeff");
            Rational c = t["coeff"].is_string()
                             ? Rational::from_string(t["coeff"].get<std::string>())
                             : Rational(t["coeff"].get<long>());
            std::vector<int16_t> word;
            if (t.contains("monomial")) {
                for (const auto& f : t["monomial"]) {
                    const int i = f.at("i").get<int>();
                    const int jj = f.at("j").get<int>();
                    const int e = f.value("e", 1);
                    if (e < 1) fail(errc::parse_error, "exponent must be positive");
                    GeneratorRef g = canonicalize(K, i, jj);
                    const int16_t rank = static_cast<int16_t>(alg->order().rank(g));
                    for (int q = 0; q < e; ++q) word.push_back(rank);
                }
            }
            // words are straightened on input, so unsorted monomials are
            // accepted and normalized
            out.add(alg->straighten_word(word), c);
        }
    }
    return out.build();
}

Element element_from_json_text(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
    return element_from_json(j);
}

}  // namespace qyang
