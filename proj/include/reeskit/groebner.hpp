#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "poly.hpp"

namespace reeskit {

// ---------------------------------------------------------------------------
// division / normal form
// ---------------------------------------------------------------------------

namespace detail {

struct OrdGreater {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
};

struct Reducer {
    const Polynomial* f;
    Monomial lm;
    int64_t lc;
};

inline std::vector<Reducer> make_reducers(const std::vector<Polynomial>& G,
                                          const MonomialOrder& ord) {
    std::vector<Reducer> R;
    R.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        int li = g.lead_index(ord);
        R.push_back({&g, g.terms()[li].mono, g.terms()[li].coeff});
    }
    return R;
}

} // namespace detail

// Full normal form of f against G: no term of the result is divisible by any
// leading monomial of G. Reducers are tried in list order, so the result is
// deterministic; for a Groebner basis it is the unique normal form.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const MonomialOrder& ord) {
    if (f.is_zero() || G.empty()) return f;
    auto R = detail::make_reducers(G, ord);
    if (R.empty()) return f;
    const int64_t p = f.modulus();

    std::map<Monomial, int64_t, detail::OrdGreater> work{detail::OrdGreater{&ord}};
    for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);

    std::unordered_map<Monomial, int64_t, MonomialHash> remainder;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        int64_t c = it->second;
        work.erase(it);
        if (c == 0) continue;
        const detail::Reducer* red = nullptr;
        for (const auto& r : R)
            if (r.lm.divides(m)) { red = &r; break; }
        if (!red) {
            remainder[m] = fp_add(remainder[m], c, p);
            continue;
        }
        Monomial q = red->lm.divide_into(m);
        int64_t scale = fp_mul(c, fp_inv(red->lc, p), p);
        // work -= scale * q * red->f
        for (const auto& t : red->f->terms()) {
            Monomial mm = t.mono * q;
            int64_t sub = fp_mul(scale, t.coeff, p);
            auto slot = work.find(mm);
            if (slot == work.end()) {
                if (mm == m) continue; // the cancelled head
                work.emplace(mm, fp_neg(sub, p));
            } else {
                slot->second = fp_sub(slot->second, sub, p);
                if (slot->second == 0) work.erase(slot);
            }
        }
    }
    return Polynomial::from_map(f.registry(), p, remainder);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& ord) {
    const int64_t p = f.modulus();
    int fi = f.lead_index(ord), gi = g.lead_index(ord);
    const Monomial &lf = f.terms()[fi].mono, &lg = g.terms()[gi].mono;
    Monomial L = lf.lcm(lg);
    Polynomial a = f.times_term(lf.divide_into(L), fp_inv(f.terms()[fi].coeff, p));
    Polynomial b = g.times_term(lg.divide_into(L), fp_inv(g.terms()[gi].coeff, p));
    return a - b;
}

// ---------------------------------------------------------------------------
// optional self-check instrumentation (S-polynomial reduction, NF idempotence)
// ---------------------------------------------------------------------------

struct GbCheckStats {
    bool enabled = false;
    long bases_checked = 0;
    long spoly_reductions = 0;
    long nf_idempotence_samples = 0;
    long failures = 0;
};

inline GbCheckStats& gb_check_stats() {
    static GbCheckStats s;
    return s;
}

namespace detail {

inline uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline void self_check_basis(const std::vector<Polynomial>& gb, const MonomialOrder& ord) {
    auto& st = gb_check_stats();
    ++st.bases_checked;
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            ++st.spoly_reductions;
            if (!normal_form(s_polynomial(gb[i], gb[j], ord), gb, ord).is_zero())
                ++st.failures;
        }
    if (gb.empty()) return;
    const auto reg = gb[0].registry();
    const int64_t p = gb[0].modulus();
    uint64_t seed = 0x2545f4914f6cdd1dull ^ (gb.size() * 1000003ull);
    for (const auto& g : gb) seed ^= MonomialHash{}(g.terms()[0].mono);
    for (int s = 0; s < 10; ++s) {
        // pseudo-random combination of basis elements plus a random tail
        Polynomial f = Polynomial::zero(reg, p);
        for (const auto& g : gb) {
            Monomial m(reg->size());
            for (int v = 0; v < reg->size(); ++v)
                m.set_exp(v, static_cast<int32_t>(splitmix64(seed) % 3));
            f = f + g.times_term(m, 1 + static_cast<int64_t>(splitmix64(seed) % (p - 1)));
        }
        Monomial m(reg->size());
        for (int v = 0; v < reg->size(); ++v)
            m.set_exp(v, static_cast<int32_t>(splitmix64(seed) % 4));
        f = f + Polynomial::term(reg, p, m, 1 + static_cast<int64_t>(splitmix64(seed) % (p - 1)));
        Polynomial n1 = normal_form(f, gb, ord);
        Polynomial n2 = normal_form(n1, gb, ord);
        ++st.nf_idempotence_samples;
        if (n1 != n2) ++st.failures;
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

// Reduced Groebner basis: Buchberger with normal pair selection (smallest
// lcm, ties by insertion index), the product criterion and the chain
// criterion, followed by minimalisation and inter-reduction. Output is the
// unique reduced basis, sorted by leading monomial ascending.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                          const MonomialOrder& ord) {
    std::vector<Polynomial> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic(ord));
    if (G.empty()) return G;

    struct Pair {
        int i, j;
        Monomial lcm;
    };
    auto pair_before = [&ord](const Pair& a, const Pair& b) {
        Cmp c = ord.compare(a.lcm, b.lcm);
        if (c != Cmp::EQ) return c == Cmp::LT;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Monomial> lms;
    lms.reserve(G.size());
    for (const auto& g : G) lms.push_back(g.lead_monomial(ord));

    std::vector<Pair> pending;
    std::set<std::pair<int, int>> done; // treated or discarded pairs
    auto push_pairs_for = [&](int t) {
        for (int i = 0; i < t; ++i) pending.push_back({i, t, lms[i].lcm(lms[t])});
    };
    for (int t = 1; t < static_cast<int>(G.size()); ++t) push_pairs_for(t);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_before);
        Pair pr = *it;
        pending.erase(it);
        done.insert({pr.i, pr.j});

        // product criterion
        if (lms[pr.i].coprime_with(lms[pr.j])) continue;
        // chain criterion: some k with lm_k | lcm(i,j) and both (i,k), (j,k)
        // already treated
        bool chained = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lms[k].divides(pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        Polynomial r = normal_form(s_polynomial(G[pr.i], G[pr.j], ord), G, ord);
        if (r.is_zero()) continue;
        G.push_back(r.monic(ord));
        lms.push_back(G.back().lead_monomial(ord));
        push_pairs_for(static_cast<int>(G.size()) - 1);
    }

    // minimalise: drop elements whose lead monomial is divisible by another's
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(G.size()); ++i) {
        bool redundant = false;
        for (int j = 0; j < static_cast<int>(G.size()) && !redundant; ++j) {
            if (i == j) continue;
            if (lms[j].divides(lms[i])) {
                if (lms[j] == lms[i])
                    redundant = j < i; // equal lead monomials: keep the first
                else
                    redundant = true;
            }
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> minimal;
    minimal.reserve(keep.size());
    for (int i : keep) minimal.push_back(G[i]);

    // inter-reduce to the reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others, ord);
            if (r.is_zero()) {
                minimal.erase(minimal.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            r = r.monic(ord);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&ord](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.lead_monomial(ord), b.lead_monomial(ord));
    });
    if (gb_check_stats().enabled) detail::self_check_basis(minimal, ord);
    return minimal;
}

// ---------------------------------------------------------------------------
// IdealHandle and the ideal toolbox
// ---------------------------------------------------------------------------

class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RegistryPtr reg, int64_t p, std::vector<Polynomial> gens, MonomialOrder ord)
        : reg_(std::move(reg)), p_(p), ord_(std::move(ord)), gens_(std::move(gens)),
          cache_(std::make_shared<Cache>()) {
        for (const auto& g : gens_)
            if (g.registry() != reg_ || g.modulus() != p_)
                throw std::invalid_argument("IdealHandle: generator ring mismatch");
    }

    const RegistryPtr& registry() const { return reg_; }
    int64_t modulus() const { return p_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const std::vector<Polynomial>& groebner() const {
        if (!cache_) throw std::logic_error("IdealHandle: empty handle");
        std::call_once(cache_->flag, [this] { cache_->basis = buchberger(gens_, ord_); });
        return cache_->basis;
    }

    bool is_zero_ideal() const { return groebner().empty(); }

    bool is_unit_ideal() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
    }

private:
    struct Cache {
        std::once_flag flag;
        std::vector<Polynomial> basis;
    };

    RegistryPtr reg_;
    int64_t p_ = 0;
    MonomialOrder ord_ = MonomialOrder::degrevlex();
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline bool member(const Polynomial& f, const IdealHandle& I) {
    return normal_form(f, I.groebner(), I.order()).is_zero();
}

inline bool ideal_contains(const IdealHandle& big, const IdealHandle& small) {
    for (const auto& g : small.generators())
        if (!member(g, big)) return false;
    return true;
}

// mutual reduction of generators; robust to generator ordering
inline bool ideal_equal(const IdealHandle& A, const IdealHandle& B) {
    return ideal_contains(A, B) && ideal_contains(B, A);
}

namespace detail {

inline bool poly_canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.nterms() != b.nterms()) return a.nterms() < b.nterms();
    for (int i = 0; i < a.nterms(); ++i) {
        const Term &ta = a.terms()[i], &tb = b.terms()[i];
        if (ta.mono != tb.mono) return ta.mono.canonical_less(tb.mono);
        if (ta.coeff != tb.coeff) return ta.coeff < tb.coeff;
    }
    return false;
}

// drop duplicates; for all-monomial sets also drop generators divisible by
// another (the ideal is unchanged)
inline std::vector<Polynomial> tidy_generators(std::vector<Polynomial> gens) {
    std::sort(gens.begin(), gens.end(), poly_canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    bool all_mono = std::all_of(gens.begin(), gens.end(),
                                [](const Polynomial& g) { return g.is_monomial(); });
    if (!all_mono || gens.empty()) return gens;
    std::vector<Polynomial> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial &mi = gens[i].terms()[0].mono, &mj = gens[j].terms()[0].mono;
            if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(gens[i]);
    }
    return keep;
}

} // namespace detail

inline IdealHandle ideal_sum(const IdealHandle& A, const IdealHandle& B) {
    std::vector<Polynomial> gens = A.generators();
    gens.insert(gens.end(), B.generators().begin(), B.generators().end());
    return IdealHandle(A.registry(), A.modulus(), detail::tidy_generators(std::move(gens)),
                       A.order());
}

inline IdealHandle ideal_product(const IdealHandle& A, const IdealHandle& B) {
    std::vector<Polynomial> gens;
    for (const auto& a : A.generators())
        for (const auto& b : B.generators()) {
            Polynomial ab = a * b;
            if (!ab.is_zero()) gens.push_back(std::move(ab));
        }
    return IdealHandle(A.registry(), A.modulus(), detail::tidy_generators(std::move(gens)),
                       A.order());
}

inline IdealHandle ideal_power(const IdealHandle& A, int64_t n) {
    if (n < 0) throw std::invalid_argument("ideal_power: negative exponent");
    IdealHandle acc(A.registry(), A.modulus(),
                    {Polynomial::constant(A.registry(), A.modulus(), 1)}, A.order());
    for (int64_t k = 0; k < n; ++k) acc = ideal_product(acc, A);
    return acc;
}

// generators of I that do not involve the dropped variables; requires the
// handle's order to be an elimination order for them
inline IdealHandle elimination_ideal(const IdealHandle& I, const std::vector<int>& drop) {
    if (!I.order().eliminates(drop, I.registry()->size()))
        throw std::invalid_argument("elimination_ideal: order does not eliminate the dropped variables");
    std::vector<Polynomial> out;
    for (const auto& g : I.groebner())
        if (!g.uses_any(drop)) out.push_back(g);
    return IdealHandle(I.registry(), I.modulus(), std::move(out), I.order());
}

namespace detail {

// I and J lifted into reg + fresh aux variable (appended), with a block
// order eliminating it; used by intersect and saturate
struct AuxRing {
    RegistryPtr reg;
    int aux;
    MonomialOrder ord;
};

inline AuxRing make_aux_ring(const RegistryPtr& base, const MonomialOrder& inner) {
    std::string nm = "#w";
    while (base->find(nm)) nm += "'";
    RegistryPtr ext = base->extend({nm}, {VarBlock::aux});
    int aux = ext->size() - 1;
    std::vector<int> rest;
    for (int i = 0; i < ext->size() - 1; ++i) rest.push_back(i);
    MonomialOrder ord = MonomialOrder::block({MonomialOrder::lex(), inner}, {{aux}, rest});
    return {ext, aux, ord};
}

// restrict generators free of the aux variable back to the base registry
inline IdealHandle drop_aux(const IdealHandle& big, const RegistryPtr& base,
                            const MonomialOrder& ord, int aux) {
    IdealHandle elim = elimination_ideal(big, {aux});
    std::vector<Polynomial> out;
    for (const auto& g : elim.generators()) out.push_back(g.lift_to(base));
    return IdealHandle(base, big.modulus(), std::move(out), ord);
}

} // namespace detail

// I ∩ J via the auxiliary-variable trick: eliminate w from w·I + (1-w)·J.
inline IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
    if (I.registry() != J.registry()) throw std::invalid_argument("intersect: ring mismatch");
    auto aux = detail::make_aux_ring(I.registry(), I.order());
    const int64_t p = I.modulus();
    Polynomial w = Polynomial::variable(aux.reg, p, aux.aux);
    Polynomial one_minus_w = Polynomial::constant(aux.reg, p, 1) - w;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(w * f.lift_to(aux.reg));
    for (const auto& g : J.generators()) gens.push_back(one_minus_w * g.lift_to(aux.reg));
    IdealHandle big(aux.reg, p, std::move(gens), aux.ord);
    return detail::drop_aux(big, I.registry(), I.order(), aux.aux);
}

// exact division of every generator of I ∩ (g) by g
inline IdealHandle colon_single(const IdealHandle& I, const Polynomial& g) {
    const int64_t p = I.modulus();
    if (g.is_zero())
        return IdealHandle(I.registry(), p, {Polynomial::constant(I.registry(), p, 1)}, I.order());
    IdealHandle gi(I.registry(), p, {g}, I.order());
    IdealHandle cap = intersect(I, gi);
    std::vector<Polynomial> out;
    for (const auto& h : cap.groebner()) {
        // h ∈ (g); divide exactly via normal form against {g}
        Polynomial q = Polynomial::zero(I.registry(), p);
        Polynomial r = h;
        int gl = g.lead_index(I.order());
        const Monomial& glm = g.terms()[gl].mono;
        int64_t glc = g.terms()[gl].coeff;
        while (!r.is_zero()) {
            int rl = r.lead_index(I.order());
            const Monomial& rlm = r.terms()[rl].mono;
            if (!glm.divides(rlm))
                throw std::logic_error("colon_single: generator of I∩(g) not divisible by g");
            Polynomial t = Polynomial::term(I.registry(), p, glm.divide_into(rlm),
                                            fp_mul(r.terms()[rl].coeff, fp_inv(glc, p), p));
            q = q + t;
            r = r - t * g;
        }
        if (!q.is_zero()) out.push_back(std::move(q));
    }
    if (out.empty()) out.push_back(Polynomial::zero(I.registry(), p));
    return IdealHandle(I.registry(), p, std::move(out), I.order());
}

// (I : J) = ∩ over generators g of J of (I : g)
inline IdealHandle colon_ideal(const IdealHandle& I, const IdealHandle& J) {
    if (I.registry() != J.registry()) throw std::invalid_argument("colon_ideal: ring mismatch");
    bool first = true;
    IdealHandle acc;
    for (const auto& g : J.generators()) {
        if (g.is_zero()) continue;
        IdealHandle c = colon_single(I, g);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    if (first) {
        // J = (0): everything multiplies 0 into I
        return IdealHandle(I.registry(), I.modulus(),
                           {Polynomial::constant(I.registry(), I.modulus(), 1)}, I.order());
    }
    return acc;
}

// (I : f^∞) via the extra-variable form: eliminate w from I + (f·w - 1)
inline IdealHandle saturate(const IdealHandle& I, const Polynomial& f) {
    const int64_t p = I.modulus();
    if (f.is_zero())
        return IdealHandle(I.registry(), p, {Polynomial::constant(I.registry(), p, 1)}, I.order());
    if (f.is_constant()) return I;
    auto aux = detail::make_aux_ring(I.registry(), I.order());
    Polynomial w = Polynomial::variable(aux.reg, p, aux.aux);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.lift_to(aux.reg));
    gens.push_back(f.lift_to(aux.reg) * w - Polynomial::constant(aux.reg, p, 1));
    IdealHandle big(aux.reg, p, std::move(gens), aux.ord);
    return detail::drop_aux(big, I.registry(), I.order(), aux.aux);
}

// iterated-colon saturation, kept as a cross-check for the extra-variable form
inline IdealHandle saturate_by_iterated_colon(const IdealHandle& I, const Polynomial& f) {
    IdealHandle cur = I;
    IdealHandle fi(I.registry(), I.modulus(), {f}, I.order());
    for (;;) {
        IdealHandle next = colon_ideal(cur, fi);
        if (ideal_equal(next, cur)) return cur;
        cur = next;
    }
}

} // namespace reeskit
