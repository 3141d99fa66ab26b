#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rees.hpp"

namespace reeskit {

// ---------------------------------------------------------------------------
// the matrix B with [forms] = [Z_1..Z_r] * B
// ---------------------------------------------------------------------------

// Greedy, deterministic row assignment: every term of a form goes to the row
// of the lowest-indexed base variable dividing it. The reconstruction
// identity [forms] = [Z]*B holds exactly.
inline std::vector<std::vector<Polynomial>> build_B(const std::vector<Polynomial>& forms,
                                                    const RegistryPtr& reg, int64_t p,
                                                    const std::vector<int>& z_vars) {
    const int r = static_cast<int>(z_vars.size());
    std::vector<std::vector<Polynomial>> B(
        r, std::vector<Polynomial>(forms.size(), Polynomial::zero(reg, p)));
    for (std::size_t c = 0; c < forms.size(); ++c) {
        for (const auto& t : forms[c].terms()) {
            int row = -1;
            for (int i = 0; i < r; ++i)
                if (t.mono.exp(z_vars[i]) > 0) { row = i; break; }
            if (row < 0)
                throw std::invalid_argument("build_B: a term of form " + std::to_string(c) +
                                            " is divisible by no base variable");
            Monomial q = t.mono;
            q.set_exp(z_vars[row], q.exp(z_vars[row]) - 1);
            B[row][c] = B[row][c] + Polynomial::term(reg, p, std::move(q), t.coeff);
        }
    }
    return B;
}

inline Polynomial matrix_determinant(const std::vector<std::vector<Polynomial>>& M,
                                     const std::vector<int>& rows, const std::vector<int>& cols,
                                     const RegistryPtr& reg, int64_t p) {
    const std::size_t n = rows.size();
    if (n == 1) return M[rows[0]][cols[0]];
    Polynomial det = Polynomial::zero(reg, p);
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        const Polynomial& e = M[rows[0]][cols[j]];
        if (e.is_zero()) continue;
        std::vector<int> subcols;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) subcols.push_back(cols[k]);
        Polynomial minor = matrix_determinant(M, subrows, subcols, reg, p);
        Polynomial term = e * minor;
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// ---------------------------------------------------------------------------
// monomial content and perfect-power roots
// ---------------------------------------------------------------------------

// f = content * primitive with content the gcd of all term monomials
inline std::pair<Monomial, Polynomial> split_monomial_content(const Polynomial& f) {
    if (f.is_zero()) return {Monomial(f.registry()->size()), f};
    Monomial content = f.terms()[0].mono;
    for (const auto& t : f.terms()) content = content.gcd(t.mono);
    if (content.is_one()) return {content, f};
    Polynomial prim(f.registry(), f.modulus());
    std::unordered_map<Monomial, int64_t, MonomialHash> acc;
    for (const auto& t : f.terms()) acc[content.divide_into(t.mono)] = t.coeff;
    return {content, Polynomial::from_map(f.registry(), f.modulus(), acc)};
}

namespace detail {

inline std::optional<int64_t> fp_kth_root(int64_t c, int k, int64_t p) {
    if (c == 0) return 0;
    if (std::gcd(static_cast<int64_t>(k), p - 1) == 1) {
        // k invertible mod p-1: unique root c^(k^-1 mod p-1)
        int64_t kinv = 1, t = fp_normalize(k, p - 1), m = p - 1;
        // extended Euclid on (t, m)
        int64_t a = 0, b = 1, r0 = m, r1 = t;
        while (r1 != 0) {
            int64_t q = r0 / r1;
            int64_t tmp = a - q * b; a = b; b = tmp;
            tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        }
        kinv = ((a % m) + m) % m;
        int64_t root = fp_pow(c, kinv, p);
        if (fp_pow(root, k, p) == c) return root;
        return std::nullopt;
    }
    for (int64_t d = 1; d < p; ++d)
        if (fp_pow(d, k, p) == c) return d;
    return std::nullopt;
}

} // namespace detail

// g with g^k = f, when f is a perfect k-th power; term-by-term Newton
// iteration against a global order
inline std::optional<Polynomial> poly_kth_root(const Polynomial& f, int k,
                                               const MonomialOrder& ord) {
    if (k < 2) return std::nullopt;
    if (f.is_zero()) return f;
    const int64_t p = f.modulus();
    int li = f.lead_index(ord);
    const Monomial& lm = f.terms()[li].mono;
    Monomial rootm(f.registry()->size());
    for (int i = 0; i < f.registry()->size(); ++i) {
        if (lm.exp(i) % k != 0) return std::nullopt;
        rootm.set_exp(i, lm.exp(i) / k);
    }
    auto rootc = detail::fp_kth_root(f.terms()[li].coeff, k, p);
    if (!rootc) return std::nullopt;
    Polynomial g = Polynomial::term(f.registry(), p, rootm, *rootc);
    const int max_iter = 4 * f.nterms() + 4;
    for (int it = 0; it < max_iter; ++it) {
        Polynomial r = f - g.pow(k);
        if (r.is_zero()) return g;
        int ri = r.lead_index(ord);
        // next term t solves k * lt(g)^(k-1) * t = lt(r)
        Monomial gk1(f.registry()->size());
        for (int i = 0; i < f.registry()->size(); ++i) gk1.set_exp(i, rootm.exp(i) * (k - 1));
        if (!gk1.divides(r.terms()[ri].mono)) return std::nullopt;
        int64_t denom = fp_mul(fp_normalize(k, p), fp_pow(*rootc, k - 1, p), p);
        Polynomial t = Polynomial::term(f.registry(), p, gk1.divide_into(r.terms()[ri].mono),
                                        fp_mul(r.terms()[ri].coeff, fp_inv(denom, p), p));
        g = g + t;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// the closure loop
// ---------------------------------------------------------------------------

struct ClosureRound {
    int round = 0;
    int minors_considered = 0;
    int minors_in_P = 0;
    std::vector<std::string> admitted;
    std::vector<std::string> new_columns;
    std::vector<std::string> halted_columns; // admitted forms outside (Z)
    std::vector<std::string> rejected_phi;   // factors failing the phi oracle
    std::vector<std::string> notes;
};

struct ClosureResult {
    std::vector<Polynomial> forms;  // final list L: syzygies + admitted elements
    IdealHandle P;                  // the ideal they generate (in the T-presentation ring)
    std::vector<ClosureRound> trace;
    int rounds = 0;
    bool hit_round_cap = false;
    bool equals_rees_ideal = false; // containment P = Q checked against elimination
};

// minimal generating set of Q_1, as the fresh degree-1 representatives of the
// Rees presentation
inline std::vector<Polynomial> first_syzygies(const ReesPresentation& P) {
    FreshReport F = fresh_generators(P, 1);
    auto it = F.reps.find(1);
    if (it == F.reps.end()) return {};
    return it->second;
}

inline ClosureResult det_closure(const PresentedRing& ring, const IdealSpec& I, int max_rounds) {
    if (!ring.is_polynomial_ring())
        throw std::invalid_argument("det_closure: base must be a polynomial ring");
    const int64_t p = ring.p;
    ReesPresentation RP = rees_ideal(ring, I);
    const RegistryPtr qreg = RP.qreg;
    const std::vector<int>& zv = RP.z_vars;

    ClosureResult res;
    res.forms = first_syzygies(RP);

    auto in_z_ideal = [&](const Polynomial& f) {
        for (const auto& t : f.terms()) {
            bool div = false;
            for (int z : zv)
                if (t.mono.exp(z) > 0) { div = true; break; }
            if (!div) return false;
        }
        return true;
    };

    std::vector<Polynomial> columns; // forms currently represented in B
    for (const auto& f : res.forms)
        if (in_z_ideal(f)) columns.push_back(f);
    std::vector<std::vector<Polynomial>> B = build_B(columns, qreg, p, zv);
    IdealHandle Pideal(qreg, p, res.forms, RP.qord);

    const int r = static_cast<int>(zv.size());
    std::vector<int> allrows(r);
    std::iota(allrows.begin(), allrows.end(), 0);

    for (int round = 1; round <= max_rounds; ++round) {
        ClosureRound tr;
        tr.round = round;
        const int m = static_cast<int>(columns.size());
        if (m < r) {
            tr.notes.push_back("fewer columns than rows: no minors");
            res.trace.push_back(std::move(tr));
            break;
        }
        // enumerate r-subsets of columns in lexicographic index order
        std::vector<int> idx(r);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<Polynomial> fresh_candidates;
        for (;;) {
            Polynomial det = matrix_determinant(B, allrows, idx, qreg, p);
            ++tr.minors_considered;
            if (!det.is_zero()) {
                if (member(det, Pideal)) {
                    ++tr.minors_in_P;
                } else {
                    auto [content, prim] = split_monomial_content(det);
                    Polynomial candidate = prim;
                    // the primitive part may be a perfect power; its root is
                    // the element of Q that actually matters
                    int64_t deg = prim.total_degree();
                    for (int64_t k = deg; k >= 2; --k) {
                        if (deg % k != 0) continue;
                        auto root = poly_kth_root(prim, static_cast<int>(k), RP.qord);
                        if (root && RP.phi_zero(*root)) { candidate = *root; break; }
                    }
                    if (RP.phi_zero(candidate)) {
                        fresh_candidates.push_back(candidate.monic(RP.qord));
                    } else {
                        tr.rejected_phi.push_back(candidate.to_string());
                    }
                }
            }
            // next combination
            int i = r - 1;
            while (i >= 0 && idx[i] == m - r + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }

        fresh_candidates = detail::tidy_generators(std::move(fresh_candidates));
        std::vector<Polynomial> admitted;
        for (const auto& c : fresh_candidates)
            if (!member(c, Pideal)) admitted.push_back(c); // batch may repeat P-members

        if (admitted.empty()) {
            tr.notes.push_back("no admissible minor: fixed point reached");
            res.trace.push_back(std::move(tr));
            break;
        }
        bool new_column = false;
        for (const auto& a : admitted) {
            tr.admitted.push_back(a.to_string());
            res.forms.push_back(a);
            if (in_z_ideal(a)) {
                columns.push_back(a);
                auto col = build_B({a}, qreg, p, zv);
                for (int i = 0; i < r; ++i) B[i].push_back(col[i][0]);
                tr.new_columns.push_back(a.to_string());
                new_column = true;
            } else {
                tr.halted_columns.push_back(a.to_string());
            }
        }
        Pideal = IdealHandle(qreg, p, res.forms, RP.qord);
        res.rounds = round;
        res.trace.push_back(std::move(tr));
        if (!new_column) break;
        if (round == max_rounds) res.hit_round_cap = true;
    }

    res.P = Pideal;
    res.equals_rees_ideal = ideal_equal(Pideal, RP.q_plus_l());
    return res;
}

} // namespace reeskit
