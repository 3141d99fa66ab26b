#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "varset.hpp"

namespace reeskit {

// Exponent vector, one slot per registry variable. The registry itself is
// carried by the enclosing Polynomial; a Monomial is just the vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int32_t> e) : e_(std::move(e)) {
        for (int32_t x : e_)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int32_t exp(int i) const { return e_.at(i); }
    void set_exp(int i, int32_t v) {
        if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
        e_.at(i) = v;
    }
    const std::vector<int32_t>& exps() const { return e_; }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int32_t x) { return x == 0; });
    }

    int64_t total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), int64_t{0});
    }

    int64_t degree_in(const std::vector<int>& vars) const {
        int64_t d = 0;
        for (int v : vars) d += e_.at(v);
        return d;
    }

    // degree under weights: rees/aux variables count 1, base variables 0
    int64_t t_degree(const VarRegistry& reg) const {
        int64_t d = 0;
        for (int i = 0; i < nvars(); ++i)
            if (reg.t_weight(i)) d += e_[i];
        return d;
    }

    bool uses_any(const std::vector<int>& vars) const {
        for (int v : vars)
            if (e_.at(v) > 0) return true;
        return false;
    }

    static constexpr int32_t kMaxExp = 1 << 24;

    Monomial operator*(const Monomial& o) const {
        check_arity(o);
        Monomial r(nvars());
        for (int i = 0; i < nvars(); ++i) {
            r.e_[i] = e_[i] + o.e_[i];
            if (r.e_[i] > kMaxExp) throw std::overflow_error("Monomial: exponent overflow");
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        check_arity(o);
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // o / *this; requires divisibility
    Monomial divide_into(const Monomial& o) const {
        check_arity(o);
        Monomial r(nvars());
        for (int i = 0; i < nvars(); ++i) {
            if (e_[i] > o.e_[i]) throw std::domain_error("Monomial: inexact division");
            r.e_[i] = o.e_[i] - e_[i];
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        check_arity(o);
        Monomial r(nvars());
        for (int i = 0; i < nvars(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
        return r;
    }

    Monomial gcd(const Monomial& o) const {
        check_arity(o);
        Monomial r(nvars());
        for (int i = 0; i < nvars(); ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        check_arity(o);
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    // canonical comparison, independent of any user-selected monomial order:
    // graded, then lexicographic on the exponent vector
    bool canonical_less(const Monomial& o) const {
        int64_t da = total_degree(), db = o.total_degree();
        if (da != db) return da < db;
        return e_ < o.e_;
    }

private:
    void check_arity(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("Monomial: registry mismatch");
    }

    std::vector<int32_t> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (int32_t x : m.exps()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace reeskit
