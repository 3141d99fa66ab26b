#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fp.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "varset.hpp"

namespace reeskit {

struct Term {
    Monomial mono;
    int64_t coeff; // nonzero, in [1, p)
};

// Sparse multivariate polynomial over F_p. Terms are kept sorted in the
// canonical monomial order (graded + lex on exponent vectors), descending,
// with no zero coefficients, so equality, hashing and printing are
// representation-independent. All binary operations require both operands to
// share the registry (pointer identity) and the modulus.
class Polynomial {
public:
    Polynomial() : p_(0) {}
    Polynomial(RegistryPtr reg, int64_t p) : reg_(std::move(reg)), p_(p) {}

    static Polynomial zero(RegistryPtr reg, int64_t p) { return Polynomial(std::move(reg), p); }

    static Polynomial constant(RegistryPtr reg, int64_t p, int64_t c) {
        Polynomial f(reg, p);
        c = fp_normalize(c, p);
        if (c != 0) f.terms_.push_back({Monomial(reg->size()), c});
        return f;
    }

    static Polynomial term(RegistryPtr reg, int64_t p, Monomial m, int64_t c) {
        Polynomial f(reg, p);
        c = fp_normalize(c, p);
        if (c != 0) f.terms_.push_back({std::move(m), c});
        return f;
    }

    static Polynomial variable(RegistryPtr reg, int64_t p, int var, int32_t e = 1) {
        Monomial m(reg->size());
        m.set_exp(var, e);
        return term(std::move(reg), p, std::move(m), 1);
    }

    const RegistryPtr& registry() const { return reg_; }
    int64_t modulus() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    bool is_monomial() const { return terms_.size() == 1; }

    int64_t total_degree() const {
        int64_t d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    // maximal T-degree among terms (-1 for the zero polynomial)
    int64_t t_degree() const {
        int64_t d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.t_degree(*reg_));
        return d;
    }

    bool is_t_homogeneous() const {
        if (terms_.empty()) return true;
        int64_t d = terms_[0].mono.t_degree(*reg_);
        for (const auto& t : terms_)
            if (t.mono.t_degree(*reg_) != d) return false;
        return true;
    }

    bool uses_any(const std::vector<int>& vars) const {
        for (const auto& t : terms_)
            if (t.mono.uses_any(vars)) return true;
        return false;
    }

    int64_t coeff_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return 0;
    }

    Polynomial operator-() const {
        Polynomial r(reg_, p_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = fp_neg(t.coeff, p_);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_compat(o);
        Polynomial r(reg_, p_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].mono == o.terms_[j].mono) {
                int64_t c = fp_add(terms_[i].coeff, o.terms_[j].coeff, p_);
                if (c != 0) r.terms_.push_back({terms_[i].mono, c});
                ++i; ++j;
            } else if (o.terms_[j].mono.canonical_less(terms_[i].mono)) {
                r.terms_.push_back(terms_[i++]);
            } else {
                r.terms_.push_back(o.terms_[j++]);
            }
        }
        while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
        while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check_compat(o);
        std::unordered_map<Monomial, int64_t, MonomialHash> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                int64_t& slot = acc[m];
                slot = fp_add(slot, fp_mul(a.coeff, b.coeff, p_), p_);
            }
        return from_map(reg_, p_, acc);
    }

    Polynomial scaled(int64_t c) const {
        c = fp_normalize(c, p_);
        Polynomial r(reg_, p_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            int64_t v = fp_mul(t.coeff, c, p_);
            if (v != 0) r.terms_.push_back({t.mono, v});
        }
        return r;
    }

    Polynomial times_term(const Monomial& m, int64_t c) const {
        c = fp_normalize(c, p_);
        Polynomial r(reg_, p_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono * m, fp_mul(t.coeff, c, p_)});
        // multiplying by a fixed monomial preserves the canonical term order
        return r;
    }

    Polynomial pow(int64_t e) const {
        if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
        Polynomial r = constant(reg_, p_, 1);
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (p_ != o.p_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // index into terms() of the leading term under ord
    int lead_index(const MonomialOrder& ord) const {
        if (terms_.empty()) throw std::domain_error("lead term of zero polynomial");
        int best = 0;
        for (int i = 1; i < nterms(); ++i)
            if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return best;
    }

    const Monomial& lead_monomial(const MonomialOrder& ord) const {
        return terms_[lead_index(ord)].mono;
    }

    Polynomial monic(const MonomialOrder& ord) const {
        if (terms_.empty()) return *this;
        return scaled(fp_inv(terms_[lead_index(ord)].coeff, p_));
    }

    // ring-homomorphic substitution; every variable occurring in *this must
    // be mapped, and all images must share one registry/modulus
    Polynomial substitute(const std::map<int, Polynomial>& images) const {
        if (terms_.empty()) {
            if (images.empty()) return *this;
            const Polynomial& any = images.begin()->second;
            return Polynomial::zero(any.registry(), any.modulus());
        }
        const Polynomial* sample = images.empty() ? nullptr : &images.begin()->second;
        RegistryPtr target = sample ? sample->registry() : reg_;
        int64_t p = sample ? sample->modulus() : p_;
        if (p != p_) throw std::invalid_argument("substitute: modulus mismatch");
        for (const auto& [v, g] : images)
            if (g.registry() != target)
                throw std::invalid_argument("substitute: image registry mismatch");

        // identity on unmapped variables; they must exist in the target
        std::vector<std::optional<int>> passthrough(reg_->size());
        for (int i = 0; i < reg_->size(); ++i)
            if (!images.count(i)) passthrough[i] = target->find(reg_->name(i));

        std::map<std::pair<int, int32_t>, Polynomial> powers;
        auto power_of = [&](int var, int32_t e) -> const Polynomial& {
            auto key = std::make_pair(var, e);
            auto it = powers.find(key);
            if (it != powers.end()) return it->second;
            return powers.emplace(key, images.at(var).pow(e)).first->second;
        };

        Polynomial acc = Polynomial::zero(target, p_);
        for (const auto& t : terms_) {
            Polynomial prod = Polynomial::constant(target, p_, t.coeff);
            Monomial carried(target->size());
            for (int i = 0; i < reg_->size(); ++i) {
                int32_t e = t.mono.exp(i);
                if (e == 0) continue;
                if (images.count(i)) {
                    prod = prod * power_of(i, e);
                } else {
                    if (!passthrough[i])
                        throw std::invalid_argument(
                            "substitute: unmapped variable '" + reg_->name(i) +
                            "' absent from target registry");
                    carried.set_exp(*passthrough[i], carried.exp(*passthrough[i]) + e);
                }
            }
            acc = acc + prod.times_term(carried, 1);
        }
        return acc;
    }

    // homogeneous components under the T-weighting, lowest degree first;
    // they sum back to *this
    std::vector<Polynomial> t_components() const {
        std::map<int64_t, Polynomial> buckets;
        for (const auto& t : terms_) {
            int64_t d = t.mono.t_degree(*reg_);
            auto it = buckets.find(d);
            if (it == buckets.end())
                it = buckets.emplace(d, Polynomial(reg_, p_)).first;
            it->second.terms_.push_back(t);
        }
        std::vector<Polynomial> out;
        out.reserve(buckets.size());
        for (auto& [d, f] : buckets) out.push_back(std::move(f));
        return out;
    }

    // rename-based transport into another registry; target must contain all
    // variables occurring in *this
    Polynomial lift_to(const RegistryPtr& target) const {
        if (target == reg_) return *this;
        std::vector<std::optional<int>> where(reg_->size());
        for (int i = 0; i < reg_->size(); ++i) where[i] = target->find(reg_->name(i));
        Polynomial r(target, p_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(target->size());
            for (int i = 0; i < reg_->size(); ++i) {
                int32_t e = t.mono.exp(i);
                if (e == 0) continue;
                if (!where[i])
                    throw std::invalid_argument("lift_to: variable '" + reg_->name(i) +
                                                "' absent from target registry");
                m.set_exp(*where[i], e);
            }
            r.terms_.push_back({std::move(m), t.coeff});
        }
        r.canonicalize();
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            int64_t c = t.coeff;
            // print balanced representative for readability
            int64_t signedc = c > p_ / 2 ? c - p_ : c;
            if (first) {
                if (signedc < 0) os << "-";
            } else {
                os << (signedc < 0 ? " - " : " + ");
            }
            first = false;
            int64_t a = signedc < 0 ? -signedc : signedc;
            bool printed_coeff = false;
            if (a != 1 || t.mono.is_one()) {
                os << a;
                printed_coeff = true;
            }
            bool any_var = false;
            for (int i = 0; i < reg_->size(); ++i) {
                int32_t e = t.mono.exp(i);
                if (e == 0) continue;
                if (printed_coeff || any_var) os << "*";
                os << reg_->name(i);
                if (e > 1) os << "^" << e;
                any_var = true;
            }
        }
        return os.str();
    }

    static Polynomial from_map(const RegistryPtr& reg, int64_t p,
                               const std::unordered_map<Monomial, int64_t, MonomialHash>& acc) {
        Polynomial r(reg, p);
        r.terms_.reserve(acc.size());
        for (const auto& [m, c] : acc) {
            int64_t v = fp_normalize(c, p);
            if (v != 0) r.terms_.push_back({m, v});
        }
        r.canonicalize();
        return r;
    }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return b.mono.canonical_less(a.mono);
        });
    }

    void check_compat(const Polynomial& o) const {
        if (reg_ != o.reg_) throw std::invalid_argument("Polynomial: registry mismatch");
        if (p_ != o.p_) throw std::invalid_argument("Polynomial: modulus mismatch");
    }

    RegistryPtr reg_;
    int64_t p_;
    std::vector<Term> terms_;
};

} // namespace reeskit
