#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace reeskit {

// Ideals generated by monomials in a permutable R-sequence, represented by
// exponent vectors alone. Correctness is exactly the polynomial-ring monomial
// case; this engine doubles as an independent oracle for the Groebner module.

using MVec = std::vector<int32_t>;

inline bool mvec_divides(const MVec& a, const MVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline MVec mvec_lcm(const MVec& a, const MVec& b) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline MVec mvec_gcd(const MVec& a, const MVec& b) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline MVec mvec_mul(const MVec& a, const MVec& b) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// a / b, requires b | a
inline MVec mvec_div(const MVec& a, const MVec& b) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw std::domain_error("mvec_div: inexact");
    }
    return r;
}

inline bool mvec_is_one(const MVec& a) {
    return std::all_of(a.begin(), a.end(), [](int32_t x) { return x == 0; });
}

class MonIdeal {
public:
    // the zero ideal
    explicit MonIdeal(int arity) : arity_(arity) {}

    MonIdeal(int arity, std::vector<MVec> gens) : arity_(arity) {
        for (auto& g : gens) {
            if (static_cast<int>(g.size()) != arity_)
                throw std::invalid_argument("MonIdeal: arity mismatch");
            for (int32_t e : g)
                if (e < 0) throw std::invalid_argument("MonIdeal: negative exponent");
        }
        gens_ = minimalize(std::move(gens));
    }

    static MonIdeal unit(int arity) { return MonIdeal(arity, {MVec(arity, 0)}); }

    int arity() const { return arity_; }
    const std::vector<MVec>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && mvec_is_one(gens_[0]); }

    bool operator==(const MonIdeal& o) const {
        return arity_ == o.arity_ && gens_ == o.gens_;
    }
    bool operator!=(const MonIdeal& o) const { return !(*this == o); }

    // unique minimal (antichain) generating set, sorted
    static std::vector<MVec> minimalize(std::vector<MVec> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<MVec> keep;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
                if (i != j && mvec_divides(gens[j], gens[i])) redundant = true;
            if (!redundant) keep.push_back(gens[i]);
        }
        return keep;
    }

private:
    int arity_;
    std::vector<MVec> gens_;
};

inline MonIdeal mi_minimalize(int arity, std::vector<MVec> gens) {
    return MonIdeal(arity, std::move(gens));
}

inline bool mi_member(const MVec& m, const MonIdeal& A) {
    for (const auto& g : A.gens())
        if (mvec_divides(g, m)) return true;
    return false;
}

// A : m  =  sum_j (lcm(m_j, m)/m)
inline MonIdeal mi_colon(const MonIdeal& A, const MVec& m) {
    std::vector<MVec> out;
    out.reserve(A.gens().size());
    for (const auto& g : A.gens()) out.push_back(mvec_div(mvec_lcm(g, m), m));
    return MonIdeal(A.arity(), std::move(out));
}

// A ∩ (m)  =  sum_j lcm(m_j, m)
inline MonIdeal mi_intersect_mono(const MonIdeal& A, const MVec& m) {
    std::vector<MVec> out;
    out.reserve(A.gens().size());
    for (const auto& g : A.gens()) out.push_back(mvec_lcm(g, m));
    return MonIdeal(A.arity(), std::move(out));
}

// A ∩ B  =  sum_{j,i} lcm(m_j, n_i)
inline MonIdeal mi_intersect(const MonIdeal& A, const MonIdeal& B) {
    std::vector<MVec> out;
    out.reserve(A.gens().size() * B.gens().size());
    for (const auto& a : A.gens())
        for (const auto& b : B.gens()) out.push_back(mvec_lcm(a, b));
    return MonIdeal(A.arity(), std::move(out));
}

// A : B  =  ∩_i (A : n_i)
inline MonIdeal mi_colon_ideal(const MonIdeal& A, const MonIdeal& B) {
    if (B.is_zero()) return MonIdeal::unit(A.arity());
    bool first = true;
    MonIdeal acc(A.arity());
    for (const auto& b : B.gens()) {
        MonIdeal c = mi_colon(A, b);
        acc = first ? c : mi_intersect(acc, c);
        first = false;
    }
    return acc;
}

inline MonIdeal mi_product(const MonIdeal& A, const MonIdeal& B) {
    std::vector<MVec> out;
    out.reserve(A.gens().size() * B.gens().size());
    for (const auto& a : A.gens())
        for (const auto& b : B.gens()) out.push_back(mvec_mul(a, b));
    return MonIdeal(A.arity(), std::move(out));
}

inline MonIdeal mi_power(const MonIdeal& A, int64_t n) {
    if (n < 0) throw std::invalid_argument("mi_power: negative exponent");
    MonIdeal acc = MonIdeal::unit(A.arity());
    for (int64_t k = 0; k < n; ++k) acc = mi_product(acc, A);
    return acc;
}

inline MonIdeal mi_sum(const MonIdeal& A, const MonIdeal& B) {
    std::vector<MVec> out = A.gens();
    out.insert(out.end(), B.gens().begin(), B.gens().end());
    return MonIdeal(A.arity(), std::move(out));
}

inline bool mi_equal(const MonIdeal& A, const MonIdeal& B) { return A == B; }

inline bool mi_contains(const MonIdeal& big, const MonIdeal& small) {
    for (const auto& g : small.gens())
        if (!mi_member(g, big)) return false;
    return true;
}

// number of minimal generators of (N + D)/D, N and D monomial; the quotient's
// generators descend from N's minimal generators
inline int mi_quotient_mingen_count(const MonIdeal& N, const MonIdeal& D) {
    int c = 0;
    for (const auto& g : N.gens())
        if (!mi_member(g, D)) ++c;
    return c;
}

inline bool monomials_minimally_generate(const std::vector<MVec>& ms) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
            if (i != j && mvec_divides(ms[i], ms[j])) return false;
    return true;
}

// Tang's criterion for a sequence of monomials to be a d-sequence:
// (1) the list is a minimal generating set, (2) gcd(f_i,f_j) | f_k for
// i<j<k, (3) gcd(f_i,f_j) = gcd(f_i,f_j^2) for i<j.
inline bool tang_d_sequence(const std::vector<MVec>& ms) {
    if (ms.empty()) return true;
    if (!monomials_minimally_generate(ms)) return false;
    const std::size_t s = ms.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            MVec g = mvec_gcd(ms[i], ms[j]);
            if (mvec_gcd(ms[i], mvec_mul(ms[j], ms[j])) != g) return false;
            for (std::size_t k = j + 1; k < s; ++k)
                if (!mvec_divides(g, ms[k])) return false;
        }
    return true;
}

// Direct evaluation of the defining colon identities
// ((x_1..x_i) : x_{i+1} x_k) = ((x_1..x_i) : x_k); oracle for tang_d_sequence.
inline bool d_sequence_bruteforce(const std::vector<MVec>& ms) {
    if (ms.empty()) return true;
    if (!monomials_minimally_generate(ms)) return false;
    const int arity = static_cast<int>(ms[0].size());
    const std::size_t s = ms.size();
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<MVec> head(ms.begin(), ms.begin() + static_cast<long>(i));
        MonIdeal Ji(arity, head); // J_0 = (0) when i = 0
        for (std::size_t k = i; k < s; ++k) {
            if (mi_colon(Ji, mvec_mul(ms[i], ms[k])) != mi_colon(Ji, ms[k])) return false;
        }
    }
    return true;
}

} // namespace reeskit
