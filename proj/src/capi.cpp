#include "qyang.h"

#include <cstring>
#include <string>

#include "qyang/centralizer.hpp"
#include "qyang/fgen.hpp"
#include "qyang/freeyang.hpp"
#include "qyang/grsym.hpp"
#include "qyang/json_io.hpp"
#include "qyang/suites.hpp"

using namespace qyang;

struct qy_element {
    Element value;
};

namespace {

thread_local std::string g_last_error;

qy_status status_of(errc c) {
    switch (c) {
        case errc::invalid_index: return QY_ERR_INVALID_INDEX;
        case errc::size_mismatch: return QY_ERR_SIZE_MISMATCH;
        case errc::not_in_centralizer: return QY_ERR_NOT_IN_CENTRALIZER;
        case errc::undefined_degree: return QY_ERR_UNDEFINED_DEGREE;
        case errc::parse_error: return QY_ERR_PARSE;
        case errc::config_error: return QY_ERR_CONFIG;
        case errc::invalid_argument: return QY_ERR_INVALID_ARGUMENT;
    }
    return QY_ERR_INTERNAL;
}

template <class Fn>
qy_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QY_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QY_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QY_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qy_status out_element(Element e, qy_element** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return QY_ERR_INVALID_ARGUMENT;
    }
    *out = new qy_element{std::move(e)};
    return QY_OK;
}

const Element& ref(const qy_element* e) {
    if (!e) fail(errc::invalid_argument, "null element handle");
    return e->value;
}

}  // namespace

extern "C" {

const char* qy_version(void) { return "1.0.0"; }

const char* qy_status_name(qy_status status) {
    switch (status) {
        case QY_OK: return "ok";
        case QY_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case QY_ERR_INVALID_INDEX: return "invalid-index";
        case QY_ERR_SIZE_MISMATCH: return "size-mismatch";
        case QY_ERR_NOT_IN_CENTRALIZER: return "not-in-centralizer";
        case QY_ERR_UNDEFINED_DEGREE: return "undefined-degree";
        case QY_ERR_PARSE: return "parse-error";
        case QY_ERR_CONFIG: return "config-error";
        case QY_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* qy_last_error(void) { return g_last_error.c_str(); }

void qy_string_free(char* s) { std::free(s); }

void qy_element_free(qy_element* e) { delete e; }

qy_status qy_element_unit(int k, qy_element** out) {
    return guarded([&] { out_element(Element::unit(Algebra::get_lex(k)), out); });
}

qy_status qy_element_generator(int k, int i, int j, qy_element** out) {
    return guarded([&] { out_element(Element::generator(Algebra::get_lex(k), i, j), out); });
}

qy_status qy_element_f(int k, int i, int j, int n, qy_element** out) {
    return guarded([&] { out_element(f_element(Algebra::get_lex(k), i, j, n), out); });
}

qy_status qy_element_c(int k, int n, qy_element** out) {
    return guarded([&] { out_element(c_element(Algebra::get_lex(k), n), out); });
}

qy_status qy_element_from_json(const char* json, qy_element** out) {
    return guarded([&] {
        if (!json) fail(errc::invalid_argument, "null JSON string");
        out_element(element_from_json_text(json), out);
    });
}

qy_status qy_element_clone(const qy_element* e, qy_element** out) {
    return guarded([&] { out_element(ref(e), out); });
}

qy_status qy_element_add(const qy_element* a, const qy_element* b, qy_element** out) {
    return guarded([&] { out_element(ref(a) + ref(b), out); });
}

qy_status qy_element_sub(const qy_element* a, const qy_element* b, qy_element** out) {
    return guarded([&] { out_element(ref(a) - ref(b), out); });
}

qy_status qy_element_mul(const qy_element* a, const qy_element* b, qy_element** out) {
    return guarded([&] { out_element(ref(a) * ref(b), out); });
}

qy_status qy_element_supercommutator(const qy_element* a, const qy_element* b, qy_element** out) {
    return guarded([&] { out_element(supercommutator(ref(a), ref(b)), out); });
}

qy_status qy_element_scale(const qy_element* a, const char* rational, qy_element** out) {
    return guarded([&] {
        if (!rational) fail(errc::invalid_argument, "null scalar");
        out_element(ref(a).scaled(Rational::from_string(rational)), out);
    });
}

qy_status qy_element_antiautomorphism(const qy_element* a, qy_element** out) {
    return guarded([&] { out_element(principal_antiautomorphism(ref(a)), out); });
}

qy_status qy_element_reorder(const qy_element* a, const char* order_tag, qy_element** out) {
    return guarded([&] {
        if (!order_tag) fail(errc::invalid_argument, "null order tag");
        const Element& e = ref(a);
        const int K = e.algebra()->size();
        out_element(reorder(e, Algebra::get(K, GeneratorOrder::from_tag(K, order_tag))), out);
    });
}

qy_status qy_element_alpha(const qy_element* a, int n, int m, qy_element** out) {
    return guarded([&] {
        const CentralizerContext ctx = CentralizerContext::make(n, m);
        out_element(alpha_projection(ref(a), ctx), out);
    });
}

qy_status qy_tau(int n, int m, int i, int j, int deg, qy_element** out) {
    return guarded([&] { out_element(tau_image(i, j, deg, n, m), out); });
}

int qy_element_is_zero(const qy_element* e) { return e && e->value.is_zero() ? 1 : 0; }

int qy_element_equal(const qy_element* a, const qy_element* b) {
    if (!a || !b) return 0;
    try {
        return a->value == b->value ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

qy_status qy_element_filtration_degree(const qy_element* e, int* out) {
    return guarded([&] {
        if (!out) fail(errc::invalid_argument, "null output pointer");
        *out = filtration_degree(ref(e));
    });
}

qy_status qy_element_z2_degree(const qy_element* e, int* out) {
    return guarded([&] {
        if (!out) fail(errc::invalid_argument, "null output pointer");
        auto p = z2_degree(ref(e));
        *out = p ? p->bit() : -1;
    });
}

qy_status qy_element_algebra_size(const qy_element* e, int* out) {
    return guarded([&] {
        if (!out) fail(errc::invalid_argument, "null output pointer");
        *out = ref(e).algebra()->size();
    });
}

qy_status qy_element_centralizer_check(const qy_element* e, int n, int m, int* out) {
    return guarded([&] {
        if (!out) fail(errc::invalid_argument, "null output pointer");
        const CentralizerContext ctx = CentralizerContext::make(n, m);
        *out = centralizer_check(ref(e), ctx) ? 1 : 0;
    });
}

qy_status qy_element_to_json(const qy_element* e, char** out) {
    return guarded([&] {
        if (!out) fail(errc::invalid_argument, "null output pointer");
        *out = dup_string(element_to_json(ref(e)).dump());
    });
}

qy_status qy_element_to_text(const qy_element* e, char** out) {
    return guarded([&] {
        if (!out) fail(errc::invalid_argument, "null output pointer");
        *out = dup_string(ref(e).to_text());
    });
}

qy_status qy_sym_symbol(const qy_element* e, char** superpoly_json) {
    return guarded([&] {
        if (!superpoly_json) fail(errc::invalid_argument, "null output pointer");
        *superpoly_json = dup_string(leading_symbol(ref(e)).to_json().dump());
    });
}

qy_status qy_sym_f_symbol(int k, int i, int j, int n, char** superpoly_json) {
    return guarded([&] {
        if (!superpoly_json) fail(errc::invalid_argument, "null output pointer");
        *superpoly_json = dup_string(f_symbol(i, j, n, k).to_json().dump());
    });
}

qy_status qy_sym_c_symbol(int k, int n, char** superpoly_json) {
    return guarded([&] {
        if (!superpoly_json) fail(errc::invalid_argument, "null output pointer");
        *superpoly_json = dup_string(c_symbol(n, k).to_json().dump());
    });
}

qy_status qy_sym_phi(const char* tensor_json, char** superpoly_json) {
    return guarded([&] {
        if (!tensor_json || !superpoly_json) fail(errc::invalid_argument, "null pointer");
        ojson j = ojson::parse(std::string(tensor_json), nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "malformed tensor JSON");
        const int K = j.value("K", 0);
        const int n = j.value("n", 0);
        if (K < 1 || n < 1) fail(errc::parse_error, "tensor JSON needs positive K and n");
        TensorElement t(K, n);
        for (const auto& term : j.value("terms", ojson::array())) {
            Rational c = term.at("coeff").is_string()
                             ? Rational::from_string(term.at("coeff").get<std::string>())
                             : Rational(term.at("coeff").get<long>());
            std::vector<MU> w;
            for (const auto& slot : term.at("slots"))
                w.push_back(MU{static_cast<int16_t>(slot.at("i").get<int>()),
                               static_cast<int16_t>(slot.at("j").get<int>())});
            t.add_term(std::move(w), std::move(c));
        }
        *superpoly_json = dup_string(phi_map(t).to_json().dump());
    });
}

qy_status qy_sym_psi(int k, const char* gens_json, char** tensor_json) {
    return guarded([&] {
        if (!gens_json || !tensor_json) fail(errc::invalid_argument, "null pointer");
        ojson j = ojson::parse(std::string(gens_json), nullptr, false);
        if (j.is_discarded() || !j.is_array()) fail(errc::parse_error, "expected a JSON array");
        std::vector<GeneratorRef> gens;
        for (const auto& g : j)
            gens.push_back(canonicalize(k, g.at("i").get<int>(), g.at("j").get<int>()));
        *tensor_json = dup_string(psi_map(k, gens).to_json().dump());
    });
}

qy_status qy_yang_expand(const char* config_json, char** result_json) {
    return guarded([&] {
        if (!config_json || !result_json) fail(errc::invalid_argument, "null pointer");
        ojson j = ojson::parse(std::string(config_json), nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "malformed config JSON");
        const std::string kind = j.value("kind", "");
        const int N = j.value("N", 1);
        const int m = j.value("m", 1), n = j.value("n", 1);
        const int i = j.value("i", 1), jj = j.value("j", 1);
        const int k = j.value("k", 1), l = j.value("l", 1);
        if (kind == "defrel") {
            *result_json = dup_string(defrel_element(m, n, i, jj, k, l, N).to_json().dump());
        } else if (kind == "rel37") {
            *result_json =
                dup_string(yang_relation_coeff(m, n, i, jj, k, l, N).to_json().dump());
        } else if (kind == "rel38") {
            *result_json = dup_string(yang_relation_38(m, n, i, jj, k, l, N).to_json().dump());
        } else if (kind == "comult") {
            *result_json = dup_string(comult_coeff(i, jj, n, N).to_json().dump());
        } else {
            fail(errc::config_error, "unknown expansion kind: " + kind);
        }
    });
}

qy_status qy_verify(const char* config_json, char** report_json) {
    return guarded([&] {
        if (!config_json || !report_json) fail(errc::invalid_argument, "null pointer");
        ojson j = ojson::parse(std::string(config_json), nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "malformed config JSON");
        const Report r = run_suite(SuiteConfig::from_json(j));
        *report_json = dup_string(r.to_json().dump());
    });
}

qy_status qy_verify_all(const char* profile, uint64_t seed, int jobs, char** summary_json) {
    return guarded([&] {
        if (!profile || !summary_json) fail(errc::invalid_argument, "null pointer");
        if (std::string(profile) != "desk")
            fail(errc::config_error, "unknown profile: " + std::string(profile));
        ojson reports = ojson::array();
        long long failures = 0;
        for (const SuiteConfig& cfg : desk_profile(seed, jobs)) {
            const Report r = run_suite(cfg);
            failures += static_cast<long long>(r.failures.size());
            reports.push_back(r.to_json());
        }
        ojson summary;
        summary["profile"] = profile;
        summary["seed"] = seed;
        summary["suites"] = std::move(reports);
        summary["failures_total"] = failures;
        *summary_json = dup_string(summary.dump());
    });
}

}  // extern "C"
