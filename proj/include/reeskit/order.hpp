#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace reeskit {

enum class Cmp { LT, EQ, GT };

// Total, multiplicative, global orders on exponent vectors: lex and degrevlex
// over the full registry, and block orders (a sequence of sub-orders on a
// partition of the variables, compared block by block). A block order whose
// leading blocks cover a set D of variables is an elimination order for D.
class MonomialOrder {
public:
    enum class Kind { lex, degrevlex, block };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex); }

    // parts[i] applies to vars[i]; the variable lists must be disjoint and
    // jointly cover the registry of any monomial compared. Nested block
    // orders are flattened (the nested part keeps its own variable lists).
    static MonomialOrder block(std::vector<MonomialOrder> parts,
                               std::vector<std::vector<int>> vars) {
        if (parts.size() != vars.size() || parts.empty())
            throw std::invalid_argument("MonomialOrder::block: bad partition");
        MonomialOrder o(Kind::block);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].kind_ == Kind::block) {
                for (std::size_t k = 0; k < parts[i].parts_.size(); ++k) {
                    o.parts_.push_back(parts[i].parts_[k]);
                    o.part_vars_.push_back(parts[i].part_vars_[k]);
                }
            } else {
                o.parts_.push_back(parts[i]);
                o.part_vars_.push_back(vars[i]);
            }
        }
        return o;
    }

    Kind kind() const { return kind_; }

    Cmp compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::lex: return cmp_lex(a, b, nullptr);
            case Kind::degrevlex: return cmp_drl(a, b, nullptr);
            case Kind::block: {
                for (std::size_t k = 0; k < parts_.size(); ++k) {
                    Cmp c = parts_[k].kind_ == Kind::lex
                                ? cmp_lex(a, b, &part_vars_[k])
                                : cmp_drl(a, b, &part_vars_[k]);
                    if (c != Cmp::EQ) return c;
                }
                return Cmp::EQ;
            }
        }
        return Cmp::EQ;
    }

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::LT;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::GT;
    }

    // True when every monomial in a dropped variable dominates every monomial
    // in the retained ones, i.e. the dropped variables fill the leading blocks.
    bool eliminates(const std::vector<int>& drop, int nvars) const {
        std::vector<char> dropped(nvars, 0);
        for (int v : drop) dropped.at(v) = 1;
        if (kind_ != Kind::block) return drop.empty();
        // find the first block containing a retained variable; every dropped
        // variable must live strictly before it
        std::size_t first_retained = parts_.size();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            for (int v : part_vars_[k])
                if (!dropped[v]) { first_retained = std::min(first_retained, k); }
        }
        for (std::size_t k = first_retained; k < parts_.size(); ++k)
            for (int v : part_vars_[k])
                if (dropped[v]) return false;
        return true;
    }

    // Restriction of a block order to the variables of its trailing blocks,
    // renumbered by `keep` (old index -> position in the restricted registry).
    MonomialOrder restrict_to(const std::vector<int>& keep) const {
        std::vector<int> newpos(1 + *std::max_element(keep.begin(), keep.end()), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) newpos[keep[i]] = static_cast<int>(i);
        if (kind_ != Kind::block) return *this;
        std::vector<MonomialOrder> parts;
        std::vector<std::vector<int>> vars;
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            std::vector<int> v;
            for (int x : part_vars_[k])
                if (x < static_cast<int>(newpos.size()) && newpos[x] >= 0)
                    v.push_back(newpos[x]);
            if (!v.empty()) {
                parts.push_back(parts_[k]);
                vars.push_back(std::move(v));
            }
        }
        if (parts.size() == 1) return parts[0];
        return block(std::move(parts), std::move(vars));
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::degrevlex: return "degrevlex";
            case Kind::block: {
                std::string s = "block(";
                for (std::size_t k = 0; k < parts_.size(); ++k) {
                    if (k) s += ";";
                    s += parts_[k].describe();
                }
                return s + ")";
            }
        }
        return "?";
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    // lex over the listed variables (or all, when vars == nullptr), priority
    // in list order
    static Cmp cmp_lex(const Monomial& a, const Monomial& b, const std::vector<int>* vars) {
        int n = a.nvars();
        if (vars) {
            for (int v : *vars) {
                if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
        }
        for (int i = 0; i < n; ++i)
            if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? Cmp::GT : Cmp::LT;
        return Cmp::EQ;
    }

    static Cmp cmp_drl(const Monomial& a, const Monomial& b, const std::vector<int>* vars) {
        int64_t da = 0, db = 0;
        if (vars) {
            for (int v : *vars) { da += a.exp(v); db += b.exp(v); }
        } else {
            da = a.total_degree();
            db = b.total_degree();
        }
        if (da != db) return da > db ? Cmp::GT : Cmp::LT;
        // reverse lex tie-break: scan from the least variable; smaller
        // exponent there wins
        if (vars) {
            for (auto it = vars->rbegin(); it != vars->rend(); ++it) {
                int v = *it;
                if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
        }
        for (int i = a.nvars() - 1; i >= 0; --i)
            if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? Cmp::GT : Cmp::LT;
        return Cmp::EQ;
    }

    Kind kind_;
    std::vector<MonomialOrder> parts_;
    std::vector<std::vector<int>> part_vars_;
};

inline Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("compare_monomials: registry mismatch");
    return ord.compare(a, b);
}

} // namespace reeskit
