#include "qyang/element.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qyang {

namespace {

constexpr uint64_t kOmegaTag = 0x01ull << 56;

Rational half() { return Rational(1, 2); }

void sort_merge(TermVec& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t out = 0;
    for (size_t p = 0; p < terms.size();) {
        size_t q = p + 1;
        Rational c = terms[p].second;
        while (q < terms.size() && terms[q].first == terms[p].first) {
            c += terms[q].second;
            ++q;
        }
        if (!c.is_zero()) terms[out++] = {terms[p].first, std::move(c)};
        p = q;
    }
    terms.resize(out);
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<int, std::string>, AlgebraPtr> instances;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Algebra::Algebra(int K, GeneratorOrder order, BracketSigns signs)
    : K_(K), order_(std::move(order)), signs_(signs) {
    if (order_.algebra_size() != K_) fail(errc::size_mismatch, "order size differs from K");
    const int n = order_.count();
    brackets_.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto terms = bracket_generators(order_.generator(a), order_.generator(b), signs_);
            auto& slot = brackets_[static_cast<size_t>(a) * static_cast<size_t>(n) +
                                   static_cast<size_t>(b)];
            slot.reserve(terms.size());
            for (auto& [g, c] : terms)
                slot.emplace_back(static_cast<int16_t>(order_.rank(g)), std::move(c));
        }
}

AlgebraPtr Algebra::make(int K, GeneratorOrder order, BracketSigns signs) {
    return AlgebraPtr(new Algebra(K, std::move(order), signs));
}

AlgebraPtr Algebra::get(int K, const GeneratorOrder& order) {
    if (order.algebra_size() != K) fail(errc::size_mismatch, "order size differs from K");
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(K, order.tag());
    auto it = reg.instances.find(key);
    if (it != reg.instances.end()) return it->second;
    auto ptr = make(K, order);
    reg.instances.emplace(std::move(key), ptr);
    return ptr;
}

AlgebraPtr Algebra::get_lex(int K) { return get(K, GeneratorOrder::lex(K)); }
AlgebraPtr Algebra::get_hc(int K) { return get(K, GeneratorOrder::hc(K)); }

MonoId Algebra::intern(const Monomial& m) const {
    {
        std::shared_lock lock(pool_mu_);
        auto it = pool_index_.find(m);
        if (it != pool_index_.end()) return it->second;
    }
    std::unique_lock lock(pool_mu_);
    auto it = pool_index_.find(m);
    if (it != pool_index_.end()) return it->second;
    MonoId id = static_cast<MonoId>(pool_.size());
    pool_.push_back(std::make_unique<Monomial>(m));
    pool_degree_.push_back(m.degree());
    int par = 0;
    for (const Factor& f : m.factors)
        if (order_.parity(f.rank).is_odd()) par ^= (f.exp & 1);
    pool_parity_.push_back(static_cast<unsigned char>(par));
    pool_index_.emplace(m, id);
    return id;
}

const Monomial& Algebra::monomial(MonoId id) const {
    std::shared_lock lock(pool_mu_);
    return *pool_[id];
}

int Algebra::degree_of(MonoId id) const {
    std::shared_lock lock(pool_mu_);
    return pool_degree_[id];
}

Parity Algebra::parity_of(MonoId id) const {
    std::shared_lock lock(pool_mu_);
    return Parity(pool_parity_[id]);
}

TermVec Algebra::straighten_word(std::span<const int16_t> word) const {
    std::unordered_map<MonoId, Rational> acc;
    std::vector<std::pair<std::vector<int16_t>, Rational>> work;
    work.emplace_back(std::vector<int16_t>(word.begin(), word.end()), Rational(1));

    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();

        size_t p = 0;
        int kind = 0;  // 0 sorted, 1 swap needed, 2 odd square
        for (; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1]) {
                kind = 1;
                break;
            }
            if (w[p] == w[p + 1] && order_.parity(w[p]).is_odd()) {
                kind = 2;
                break;
            }
        }

        if (kind == 0) {
            Monomial m;
            for (size_t q = 0; q < w.size();) {
                size_t r = q + 1;
                while (r < w.size() && w[r] == w[q]) ++r;
                m.factors.push_back(Factor{w[q], static_cast<int16_t>(r - q)});
                q = r;
            }
            Rational& slot = acc[intern(m)];
            slot += c;
            continue;
        }

        if (kind == 2) {
            // x*x = (1/2)[x,x] for odd x
            const auto& br = bracket(w[p], w[p]);
            for (const auto& [g, cb] : br) {
                std::vector<int16_t> nw;
                nw.reserve(w.size() - 1);
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(p));
                nw.push_back(g);
                nw.insert(nw.end(), w.begin() + static_cast<long>(p) + 2, w.end());
                work.emplace_back(std::move(nw), c * cb * half());
            }
            continue;
        }

        // x*y = (-1)^(deg x deg y) y*x + [x,y]
        int sgn = order_.parity(w[p]).bit() & order_.parity(w[p + 1]).bit();
        {
            std::vector<int16_t> sw = w;
            std::swap(sw[p], sw[p + 1]);
            work.emplace_back(std::move(sw), sgn ? -c : c);
        }
        const auto& br = bracket(w[p], w[p + 1]);
        for (const auto& [g, cb] : br) {
            std::vector<int16_t> nw;
            nw.reserve(w.size() - 1);
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(p));
            nw.push_back(g);
            nw.insert(nw.end(), w.begin() + static_cast<long>(p) + 2, w.end());
            work.emplace_back(std::move(nw), c * cb);
        }
    }

    TermVec out;
    out.reserve(acc.size());
    for (auto& [id, c] : acc)
        if (!c.is_zero()) out.emplace_back(id, std::move(c));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

const TermVec& Algebra::monomial_product(MonoId a, MonoId b) const {
    const uint64_t key = (static_cast<uint64_t>(a) << 32) | b;
    {
        std::shared_lock lock(prod_mu_);
        auto it = prod_cache_.find(key);
        if (it != prod_cache_.end()) return it->second;
    }
    std::vector<int16_t> word;
    {
        const Monomial ma = monomial(a);
        const Monomial mb = monomial(b);
        word.reserve(static_cast<size_t>(ma.degree() + mb.degree()));
        for (const Factor& f : ma.factors)
            for (int e = 0; e < f.exp; ++e) word.push_back(f.rank);
        for (const Factor& f : mb.factors)
            for (int e = 0; e < f.exp; ++e) word.push_back(f.rank);
    }
    TermVec result = straighten_word(word);
    std::unique_lock lock(prod_mu_);
    auto [it, inserted] = prod_cache_.emplace(key, std::move(result));
    return it->second;
}

const TermVec* Algebra::cache_lookup(uint64_t key) const {
    std::shared_lock lock(misc_mu_);
    auto it = misc_cache_.find(key);
    return it == misc_cache_.end() ? nullptr : &it->second;
}

const TermVec& Algebra::cache_store(uint64_t key, TermVec value) const {
    std::unique_lock lock(misc_mu_);
    auto [it, inserted] = misc_cache_.emplace(key, std::move(value));
    return it->second;
}

// ---------------------------------------------------------------------------

Element Element::zero(AlgebraPtr alg) {
    Element e;
    e.alg_ = std::move(alg);
    return e;
}

Element Element::unit(AlgebraPtr alg) {
    Element e;
    e.alg_ = std::move(alg);
    e.terms_.emplace_back(e.alg_->intern(Monomial{}), Rational(1));
    return e;
}

Element Element::generator(AlgebraPtr alg, const GeneratorRef& g) {
    if (g.algebra_size != alg->size())
        fail(errc::size_mismatch, "generator belongs to a different algebra");
    Element e;
    e.alg_ = std::move(alg);
    Monomial m;
    m.factors.push_back(Factor{static_cast<int16_t>(e.alg_->order().rank(g)), 1});
    e.terms_.emplace_back(e.alg_->intern(m), Rational(1));
    return e;
}

Element Element::generator(AlgebraPtr alg, int i, int j) {
    GeneratorRef g = canonicalize(alg->size(), i, j);
    return generator(std::move(alg), g);
}

Element Element::from_terms(AlgebraPtr alg, TermVec terms) {
    sort_merge(terms);
    Element e;
    e.alg_ = std::move(alg);
    e.terms_ = std::move(terms);
    return e;
}

namespace {

const Element& check_same_context(const Element& a, const Element& b) {
    if (!a.algebra() || !b.algebra()) fail(errc::invalid_argument, "uninitialized element");
    if (a.algebra()->size() != b.algebra()->size())
        fail(errc::size_mismatch, "elements of different algebra sizes");
    if (!(a.algebra()->order() == b.algebra()->order()))
        fail(errc::size_mismatch, "elements relative to different generator orders");
    return b;
}

}  // namespace

Element Element::operator+(const Element& o) const {
    check_same_context(*this, o);
    const Element rhs = alg_ == o.alg_ ? o : o.migrate(alg_);
    TermVec out;
    out.reserve(terms_.size() + rhs.terms_.size());
    out = terms_;
    out.insert(out.end(), rhs.terms_.begin(), rhs.terms_.end());
    sort_merge(out);
    return from_terms(alg_, std::move(out));
}

Element Element::operator-(const Element& o) const { return *this + o.scaled(Rational(-1)); }

Element Element::operator-() const { return scaled(Rational(-1)); }

Element Element::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(alg_);
    Element e;
    e.alg_ = alg_;
    e.terms_.reserve(terms_.size());
    for (const auto& [id, v] : terms_) e.terms_.emplace_back(id, v * c);
    return e;
}

Element Element::operator*(const Element& o) const { return multiply(*this, o); }

bool Element::operator==(const Element& o) const {
    if (!alg_ && !o.alg_) return true;
    check_same_context(*this, o);
    const Element rhs = alg_ == o.alg_ ? o : o.migrate(alg_);
    return terms_ == rhs.terms_;
}

Element Element::migrate(const AlgebraPtr& target) const {
    if (alg_ == target) return *this;
    if (!alg_) fail(errc::invalid_argument, "uninitialized element");
    if (!(alg_->order() == target->order()))
        fail(errc::size_mismatch, "migrate requires an identical order");
    TermVec out;
    out.reserve(terms_.size());
    for (const auto& [id, c] : terms_) out.emplace_back(target->intern(alg_->monomial(id)), c);
    return from_terms(target, std::move(out));
}

namespace {

bool render_less(const Monomial& a, const Monomial& b) {
    const size_t n = std::min(a.factors.size(), b.factors.size());
    for (size_t p = 0; p < n; ++p) {
        if (a.factors[p].rank != b.factors[p].rank) return a.factors[p].rank < b.factors[p].rank;
        if (a.factors[p].exp != b.factors[p].exp) return a.factors[p].exp > b.factors[p].exp;
    }
    return a.factors.size() > b.factors.size();
}

}  // namespace

std::vector<std::pair<MonoId, Rational>> Element::render_terms() const {
    auto out = terms_;
    const Algebra& alg = *alg_;
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return render_less(alg.monomial(a.first), alg.monomial(b.first));
    });
    return out;
}

std::string Element::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [id, c] : render_terms()) {
        const Monomial& m = alg_->monomial(id);
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        std::string body;
        if (m.is_unit()) {
            body = mag.to_string();
        } else {
            if (!mag.is_one()) body = mag.to_string() + "*";
            bool first = true;
            for (const Factor& f : m.factors) {
                if (!first) body += "*";
                first = false;
                body += alg_->order().generator(f.rank).to_text();
                if (f.exp > 1) body += "^" + std::to_string(f.exp);
            }
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

// ---------------------------------------------------------------------------

void ElementBuilder::add(MonoId id, const Rational& c) {
    if (c.is_zero()) return;
    acc_[id] += c;
}

void ElementBuilder::add(const TermVec& terms, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [id, c] : terms) acc_[id] += c * scale;
}

void ElementBuilder::add_product(const Element& a, const Element& b, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [ia, ca] : a.terms()) {
        const Rational f = ca * scale;
        for (const auto& [ib, cb] : b.terms()) {
            const TermVec& prod = alg_->monomial_product(ia, ib);
            const Rational g = f * cb;
            for (const auto& [id, c] : prod) acc_[id] += c * g;
        }
    }
}

Element ElementBuilder::build() {
    TermVec out;
    out.reserve(acc_.size());
    for (auto& [id, c] : acc_)
        if (!c.is_zero()) out.emplace_back(id, std::move(c));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    acc_.clear();
    return Element::from_terms(alg_, std::move(out));
}

// ---------------------------------------------------------------------------

Element multiply(const Element& a, const Element& b) {
    check_same_context(a, b);
    const Element rhs = a.algebra() == b.algebra() ? b : b.migrate(a.algebra());
    ElementBuilder out(a.algebra());
    out.add_product(a, rhs, Rational(1));
    return out.build();
}

std::pair<Element, Element> homogeneous_parts(const Element& a) {
    TermVec even, odd;
    for (const auto& [id, c] : a.terms())
        (a.algebra()->parity_of(id).is_odd() ? odd : even).emplace_back(id, c);
    return {Element::from_terms(a.algebra(), std::move(even)),
            Element::from_terms(a.algebra(), std::move(odd))};
}

Element supercommutator(const Element& a, const Element& b) {
    check_same_context(a, b);
    const Element rhs = a.algebra() == b.algebra() ? b : b.migrate(a.algebra());
    auto [a0, a1] = homogeneous_parts(a);
    auto [b0, b1] = homogeneous_parts(rhs);
    const Element* as[2] = {&a0, &a1};
    const Element* bs[2] = {&b0, &b1};
    ElementBuilder out(a.algebra());
    for (int p = 0; p < 2; ++p) {
        if (as[p]->is_zero()) continue;
        for (int q = 0; q < 2; ++q) {
            if (bs[q]->is_zero()) continue;
            out.add_product(*as[p], *bs[q], Rational(1));
            out.add_product(*bs[q], *as[p], Rational((p & q) ? 1 : -1));
        }
    }
    return out.build();
}

int filtration_degree(const Element& a) {
    if (a.is_zero()) fail(errc::undefined_degree, "filtration degree of the zero element");
    int d = 0;
    for (const auto& [id, c] : a.terms()) d = std::max(d, a.algebra()->degree_of(id));
    return d;
}

std::optional<Parity> z2_degree(const Element& a) {
    if (a.is_zero()) return Parity(0);
    Parity p = a.algebra()->parity_of(a.terms().front().first);
    for (const auto& [id, c] : a.terms())
        if (a.algebra()->parity_of(id) != p) return std::nullopt;
    return p;
}

Element principal_antiautomorphism(const Element& a) {
    const AlgebraPtr& alg = a.algebra();
    ElementBuilder out(alg);
    for (const auto& [id, c] : a.terms()) {
        const uint64_t key = kOmegaTag | id;
        const TermVec* cached = alg->cache_lookup(key);
        if (!cached) {
            const Monomial m = alg->monomial(id);
            std::vector<int16_t> word;
            int odd = 0;
            for (const Factor& f : m.factors) {
                for (int e = 0; e < f.exp; ++e) word.push_back(f.rank);
                if (alg->order().parity(f.rank).is_odd()) odd += f.exp;
            }
            std::reverse(word.begin(), word.end());
            TermVec tv = alg->straighten_word(word);
            const long d = static_cast<long>(word.size());
            if (sign_pow(d + (odd * (odd - 1)) / 2) < 0)
                for (auto& [tid, tc] : tv) tc = -tc;
            cached = &alg->cache_store(key, std::move(tv));
        }
        out.add(*cached, c);
    }
    return out.build();
}

Element reorder(const Element& a, const AlgebraPtr& target) {
    const AlgebraPtr& src = a.algebra();
    if (!src) fail(errc::invalid_argument, "uninitialized element");
    if (src->size() != target->size()) fail(errc::size_mismatch, "reorder must preserve the size");
    if (src == target) return a;
    if (src->order() == target->order()) return a.migrate(target);

    const MonoId unit = target->intern(Monomial{});
    ElementBuilder out(target);
    for (const auto& [id, c] : a.terms()) {
        const Monomial m = src->monomial(id);
        TermVec cur;
        cur.emplace_back(unit, Rational(1));
        for (const Factor& f : m.factors) {
            const GeneratorRef& g = src->order().generator(f.rank);
            Monomial fm;
            fm.factors.push_back(Factor{static_cast<int16_t>(target->order().rank(g)), f.exp});
            const MonoId fid = target->intern(fm);
            std::unordered_map<MonoId, Rational> acc;
            for (const auto& [tid, tc] : cur)
                for (const auto& [pid, pc] : target->monomial_product(tid, fid)) acc[pid] += tc * pc;
            cur.clear();
            for (auto& [pid, pc] : acc)
                if (!pc.is_zero()) cur.emplace_back(pid, std::move(pc));
        }
        for (const auto& [tid, tc] : cur) out.add(tid, tc * c);
    }
    return out.build();
}

Element bracket_element(const AlgebraPtr& alg, const GeneratorRef& a, const GeneratorRef& b) {
    ElementBuilder out(alg);
    for (const auto& [g, c] : bracket_generators(a, b, alg->bracket_signs())) {
        Monomial m;
        m.factors.push_back(Factor{static_cast<int16_t>(alg->order().rank(g)), 1});
        out.add(alg->intern(m), c);
    }
    return out.build();
}

}  // namespace qyang
