// Command-line front end. Talks to the shared library exclusively through
// the C API in qyang.h; elements cross the boundary as JSON.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qyang.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct ElementDeleter {
    void operator()(qy_element* e) const { qy_element_free(e); }
};
using ElementPtr = std::unique_ptr<qy_element, ElementDeleter>;

struct StringDeleter {
    void operator()(char* s) const { qy_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(qy_status st) {
    std::cerr << "error (" << qy_status_name(st) << "): " << qy_last_error() << "\n";
    std::exit(kExitUsage);
}

void check(qy_status st) {
    if (st != QY_OK) die(st);
}

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

std::vector<ElementPtr> elements_from_stdin(size_t expect_at_least) {
    json j = json::parse(read_stdin(), nullptr, false);
    if (j.is_discarded()) {
        std::cerr << "error: standard input is not valid JSON\n";
        std::exit(kExitUsage);
    }
    std::vector<json> items;
    if (j.is_array())
        items.assign(j.begin(), j.end());
    else
        items.push_back(j);
    if (items.size() < expect_at_least) {
        std::cerr << "error: expected at least " << expect_at_least
                  << " element(s) on standard input\n";
        std::exit(kExitUsage);
    }
    std::vector<ElementPtr> out;
    for (const json& item : items) {
        qy_element* e = nullptr;
        check(qy_element_from_json(item.dump().c_str(), &e));
        out.emplace_back(e);
    }
    return out;
}

void print_element(const qy_element* e, const std::string& format) {
    CString s;
    char* raw = nullptr;
    if (format == "text")
        check(qy_element_to_text(e, &raw));
    else
        check(qy_element_to_json(e, &raw));
    s.reset(raw);
    std::cout << s.get() << "\n";
}

long long report_failures(const json& report) {
    return static_cast<long long>(report.value("failures", json::array()).size());
}

void print_report_text(const json& report) {
    std::cout << "suite " << report.value("suite", "?") << ": checked "
              << report.value("checked", 0) << ", failures " << report_failures(report) << "\n";
    int shown = 0;
    for (const json& f : report.value("failures", json::array())) {
        if (++shown > 10) {
            std::cout << "  ...\n";
            break;
        }
        std::cout << "  tuple " << f.value("tuple", json::array()).dump();
        if (f.contains("note")) std::cout << " " << f["note"].get<std::string>();
        std::cout << "\n";
    }
}

int run_verify(const json& config, const std::string& format) {
    char* raw = nullptr;
    check(qy_verify(config.dump().c_str(), &raw));
    CString s(raw);
    json report = json::parse(s.get());
    if (format == "text")
        print_report_text(report);
    else
        std::cout << report.dump() << "\n";
    return report_failures(report) ? kExitFailures : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation in U(q_K) and its Yangian-side verification suites"};
    app.require_subcommand(1);

    int K = 1, N = 0, M = 0, i = 1, j = 1, n = 1, m = 1, k = 1, l = 1;
    int nmax = 0, mmax = 0, degmax = 0, s = 0, jobs = 1, samples = 25;
    uint64_t seed = 1;
    std::string format = "text";
    std::string profile = "desk";
    bool unsafe_large = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed);
        cmd->add_flag("--unsafe-large", unsafe_large);
    };
    auto verify_config = [&](const std::string& suite) {
        json cfg;
        cfg["suite"] = suite;
        if (K) cfg["K"] = K;
        cfg["N"] = N;
        cfg["M"] = M;
        if (nmax) cfg["nmax"] = nmax;
        if (mmax) cfg["mmax"] = mmax;
        if (degmax) cfg["degmax"] = degmax;
        if (s) cfg["s"] = s;
        if (n) cfg["n"] = n;
        cfg["samples"] = samples;
        cfg["seed"] = seed;
        cfg["jobs"] = jobs;
        cfg["unsafe_large"] = unsafe_large;
        return cfg;
    };

    // --- f ---
    auto* cmd_f = app.add_subcommand("f", "compute the family element F^(n)[i,j] of U(q_K)");
    cmd_f->add_option("--K", K)->required();
    cmd_f->add_option("--i", i)->required();
    cmd_f->add_option("--j", j)->required();
    cmd_f->add_option("--n", n)->required();
    add_common(cmd_f);
    cmd_f->callback([&] {
        qy_element* e = nullptr;
        check(qy_element_f(K, i, j, n, &e));
        ElementPtr p(e);
        print_element(p.get(), format);
    });

    // --- c ---
    auto* cmd_c = app.add_subcommand("c", "compute the central trace C^(n) of U(q_K)");
    cmd_c->add_option("--K", K)->required();
    cmd_c->add_option("--n", n)->required();
    add_common(cmd_c);
    cmd_c->callback([&] {
        qy_element* e = nullptr;
        check(qy_element_c(K, n, &e));
        ElementPtr p(e);
        print_element(p.get(), format);
    });

    // --- bracket ---
    auto* cmd_bracket = app.add_subcommand(
        "bracket", "supercommutator of two elements read from standard input (JSON array)");
    add_common(cmd_bracket);
    cmd_bracket->callback([&] {
        auto elems = elements_from_stdin(2);
        qy_element* out = nullptr;
        check(qy_element_supercommutator(elems[0].get(), elems[1].get(), &out));
        ElementPtr p(out);
        print_element(p.get(), format);
    });

    // --- mul ---
    auto* cmd_mul = app.add_subcommand(
        "mul", "product of the elements read from standard input (JSON array, left to right)");
    add_common(cmd_mul);
    cmd_mul->callback([&] {
        auto elems = elements_from_stdin(1);
        ElementPtr acc = std::move(elems[0]);
        for (size_t p = 1; p < elems.size(); ++p) {
            qy_element* out = nullptr;
            check(qy_element_mul(acc.get(), elems[p].get(), &out));
            acc.reset(out);
        }
        print_element(acc.get(), format);
    });

    // --- alpha ---
    auto* cmd_alpha = app.add_subcommand(
        "alpha", "centralizer projection of an element of U(q_{N+M}) read from standard input");
    cmd_alpha->add_option("--N", N)->required();
    cmd_alpha->add_option("--M", M)->required();
    add_common(cmd_alpha);
    cmd_alpha->callback([&] {
        auto elems = elements_from_stdin(1);
        qy_element* out = nullptr;
        check(qy_element_alpha(elems[0].get(), N, M, &out));
        ElementPtr p(out);
        print_element(p.get(), format);
    });

    // --- yang ---
    auto* cmd_yang = app.add_subcommand("yang", "free-algebra relation layer");
    cmd_yang->require_subcommand(1);
    std::string expand_kind = "defrel";
    auto* yang_expand = cmd_yang->add_subcommand("expand", "expand a relation or comultiplication");
    yang_expand->add_option("--kind", expand_kind)
        ->check(CLI::IsMember({"defrel", "rel37", "rel38", "comult"}));
    yang_expand->add_option("--N", N);
    yang_expand->add_option("--m", m);
    yang_expand->add_option("--n", n);
    yang_expand->add_option("--i", i);
    yang_expand->add_option("--j", j);
    yang_expand->add_option("--k", k);
    yang_expand->add_option("--l", l);
    add_common(yang_expand);
    yang_expand->callback([&] {
        json cfg{{"kind", expand_kind}, {"N", N ? N : 1}, {"m", m}, {"n", n},
                 {"i", i},              {"j", j},         {"k", k}, {"l", l}};
        char* raw = nullptr;
        check(qy_yang_expand(cfg.dump().c_str(), &raw));
        CString out(raw);
        std::cout << out.get() << "\n";
    });
    auto* yang_verify = cmd_yang->add_subcommand("verify", "run a Yangian-side suite");
    yang_verify->require_subcommand(1);
    int yang_exit = kExitOk;
    for (const char* suite : {"omega", "tau", "series", "coassoc"}) {
        auto* sc = yang_verify->add_subcommand(suite);
        sc->add_option("--N", N);
        sc->add_option("--M", M);
        sc->add_option("--nmax", nmax);
        sc->add_option("--mmax", mmax);
        sc->add_option("--degmax", degmax);
        add_common(sc);
        sc->callback([&, suite] {
            json cfg = verify_config(suite);
            cfg.erase("n");
            yang_exit = run_verify(cfg, format);
        });
    }

    // --- sym ---
    auto* cmd_sym = app.add_subcommand("sym", "symmetric-superalgebra layer");
    cmd_sym->require_subcommand(1);
    auto* sym_symbol = cmd_sym->add_subcommand(
        "symbol", "leading symbol of an element read from standard input");
    add_common(sym_symbol);
    sym_symbol->callback([&] {
        auto elems = elements_from_stdin(1);
        char* raw = nullptr;
        check(qy_sym_symbol(elems[0].get(), &raw));
        CString out(raw);
        std::cout << out.get() << "\n";
    });
    auto* sym_phi = cmd_sym->add_subcommand(
        "phi", "multiplication map on a tensor element read from standard input");
    add_common(sym_phi);
    sym_phi->callback([&] {
        char* raw = nullptr;
        check(qy_sym_phi(read_stdin().c_str(), &raw));
        CString out(raw);
        std::cout << out.get() << "\n";
    });
    auto* sym_psi = cmd_sym->add_subcommand(
        "psi", "symmetrized tensor lift of a generator list read from standard input");
    sym_psi->add_option("--K", K)->required();
    add_common(sym_psi);
    sym_psi->callback([&] {
        char* raw = nullptr;
        check(qy_sym_psi(K, read_stdin().c_str(), &raw));
        CString out(raw);
        std::cout << out.get() << "\n";
    });
    auto* sym_verify = cmd_sym->add_subcommand("verify", "run a symmetric-layer suite");
    sym_verify->require_subcommand(1);
    int sym_exit = kExitOk;
    for (const char* suite : {"eh", "vanish", "independence"}) {
        auto* sc = sym_verify->add_subcommand(suite);
        sc->add_option("--K", K);
        sc->add_option("--N", N);
        sc->add_option("--n", n);
        sc->add_option("--s", s);
        add_common(sc);
        sc->callback([&, suite] { sym_exit = run_verify(verify_config(suite), format); });
    }

    // --- verify (single suite) ---
    auto* cmd_verify = app.add_subcommand("verify", "run one verification suite by name");
    std::string suite_name;
    cmd_verify->add_option("suite", suite_name, "bracket|fnr|prop31|defrel|central|prop14|alphahom")
        ->required();
    cmd_verify->add_option("--K", K);
    cmd_verify->add_option("--N", N);
    cmd_verify->add_option("--M", M);
    cmd_verify->add_option("--n", n);
    cmd_verify->add_option("--nmax", nmax);
    cmd_verify->add_option("--mmax", mmax);
    cmd_verify->add_option("--degmax", degmax);
    cmd_verify->add_option("--s", s);
    cmd_verify->add_option("--samples", samples);
    add_common(cmd_verify);
    int verify_exit = kExitOk;
    cmd_verify->callback([&] { verify_exit = run_verify(verify_config(suite_name), format); });

    // --- verify-all ---
    auto* cmd_all = app.add_subcommand("verify-all", "run every suite of a profile");
    cmd_all->add_option("--profile", profile);
    add_common(cmd_all);
    int all_exit = kExitOk;
    cmd_all->callback([&] {
        char* raw = nullptr;
        check(qy_verify_all(profile.c_str(), seed, jobs, &raw));
        CString out(raw);
        json summary = json::parse(out.get());
        if (format == "text") {
            for (const json& r : summary.value("suites", json::array())) print_report_text(r);
            std::cout << "total failures: " << summary.value("failures_total", 0) << "\n";
        } else {
            std::cout << summary.dump() << "\n";
        }
        all_exit = summary.value("failures_total", 0) ? kExitFailures : kExitOk;
    });

    // element commands must clear n default when unused
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_all->parsed()) return all_exit;
    if (cmd_verify->parsed()) return verify_exit;
    if (cmd_yang->parsed() && yang_verify->parsed()) return yang_exit;
    if (cmd_sym->parsed() && sym_verify->parsed()) return sym_exit;
    return kExitOk;
}
