// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, wall-clock bounds enforced. Returns nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <sstream>

#include <reeskit/reeskit.hpp>

using namespace reeskit;

namespace {

constexpr int64_t P = 32003;
int g_failures = 0;

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

void report(int id, const std::string& label, const Checker& c, double ms, double bound_ms) {
    bool ok = c.ok && ms < bound_ms;
    if (!ok) ++g_failures;
    std::printf("criterion %2d %-4s %9.1f ms  %s%s%s\n", id, ok ? "PASS" : "FAIL", ms,
                label.c_str(), c.detail.str().empty() ? "" : " -- ",
                c.detail.str().c_str());
    if (!c.ok && ms >= bound_ms) std::printf("              (also exceeded %g ms)\n", bound_ms);
}

struct TwoVars {
    RegistryPtr reg = VarRegistry::make_base({"a", "b"});
    Polynomial a = Polynomial::variable(reg, P, 0);
    Polynomial b = Polynomial::variable(reg, P, 1);
    PresentedRing R{reg, P, {}};

    IdealSpec classic(int p) const { return {R, {a.pow(p), b.pow(p), a * b.pow(p - 1)}, -1}; }
    IdealSpec pseudo(int p) const { return {R, {a.pow(p), b.pow(p), a * a * b.pow(p - 2)}, -1}; }
    IdealSpec J(int p) const { return {R, {a.pow(p), b.pow(p)}, -1}; }
};

MonIdeal entry_ideal(const ChainEntry& e, int arity) {
    std::vector<MVec> vs;
    for (const auto& g : e.gens) {
        auto v = poly_as_mvec(g);
        if (!v) throw std::logic_error("non-monomial chain entry");
        vs.push_back(*v);
    }
    return MonIdeal(arity, vs);
}

MonIdeal mono2(int i, int j) { return MonIdeal(2, {{i, 0}, {0, j}}); }

bool proportional(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return f == g;
    if (f.nterms() != g.nterms()) return false;
    int64_t c = fp_mul(g.terms()[0].coeff, fp_inv(f.terms()[0].coeff, f.modulus()), f.modulus());
    return f.scaled(c) == g;
}

// equality of classes modulo the ideal generated by `base`: each of f, g lies
// in the ideal generated by base and the other
bool equal_mod_ideal(const Polynomial& f, const Polynomial& g,
                     std::vector<Polynomial> base, const MonomialOrder& ord) {
    auto reg = f.registry();
    std::vector<Polynomial> with_g = base;
    with_g.push_back(g);
    std::vector<Polynomial> with_f = base;
    with_f.push_back(f);
    return member(f, IdealHandle(reg, f.modulus(), with_g, ord)) &&
           member(g, IdealHandle(reg, f.modulus(), with_f, ord));
}

IdealSpec dim4_ideal(const PresentedRing& R) {
    auto a = Polynomial::variable(R.reg, P, 0);
    auto b = Polynomial::variable(R.reg, P, 1);
    auto c = Polynomial::variable(R.reg, P, 2);
    return {R, {a.pow(4), b.pow(4), c.pow(4), a * b * c * c}, -1};
}

// -------------------------------------------------------------------------

void criterion1() {
    TwoVars W;
    for (int p = 2; p <= 5; ++p) {
        auto t0 = Clock::now();
        Checker c;
        auto Pr = rees_ideal(W.R, W.classic(p));
        auto F = fresh_generators(Pr, p + 1);
        c.expect(F.relation_type == p, "relation_type != p");
        c.expect(F.counts.at(1) == 2, "fresh count at degree 1 != 2");
        for (int n = 2; n <= p; ++n)
            c.expect(F.counts.at(n) == 1, "fresh count at degree " + std::to_string(n) + " != 1");
        c.expect(F.counts.at(p + 1) == 0, "fresh count above p nonzero");
        c.expect(reduction_number(W.J(p), W.classic(p), 10) == p - 1, "reduction number != p-1");
        auto C = colon_chain(W.J(p), W.classic(p), 2, p);
        c.expect(entry_ideal(C.entries[0], 2) == mono2(p - 1, 1), "(J:y) != (a^(p-1), b)");
        for (int n = 2; n <= p - 1; ++n)
            c.expect(entry_ideal(C.entries[n - 1], 2) == mono2(p - n, 1),
                     "chain at n=" + std::to_string(n) + " != (a^(p-n), b)");
        c.expect(C.entries[p - 1].is_unit, "chain at n=p is not (1)");
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report(1, "(a^p, b^p, ab^(p-1)) family, p=" + std::to_string(p), c, ms, 10000);
    }
}

void criterion2() {
    TwoVars W;
    for (int p : {5, 7}) {
        auto t0 = Clock::now();
        Checker c;
        auto Pr = rees_ideal(W.R, W.pseudo(p));
        auto F = fresh_generators(Pr, p + 1);
        c.expect(F.relation_type == p, "relation_type != p");
        c.expect(F.counts.at(1) == 2, "degree-1 count != 2");
        for (int n = 2; n <= (p + 1) / 2; ++n)
            c.expect(F.counts.at(n) == 1, "count at " + std::to_string(n) + " != 1");
        for (int n = (p + 3) / 2; n <= p - 1; ++n)
            c.expect(F.counts.at(n) == 0, "count at " + std::to_string(n) + " != 0");
        c.expect(F.counts.at(p) == 1, "count at p != 1");
        // the three-branch closed form of (i), chain entry m vs n = m-1
        auto C = colon_chain(W.J(p), W.pseudo(p), 2, p);
        for (int m = 1; m <= p; ++m) {
            const auto& e = C.entries[m - 1];
            int n = m - 1;
            if (n <= (p - 3) / 2)
                c.expect(entry_ideal(e, 2) == mono2(p - 2 * m, 2),
                         "chain m=" + std::to_string(m) + " != (a^(p-2m), b^2)");
            else if (n <= p - 2)
                c.expect(entry_ideal(e, 2) == MonIdeal(2, {{1, 0}, {0, 1}}),
                         "chain m=" + std::to_string(m) + " != (a, b)");
            else
                c.expect(e.is_unit, "chain m=" + std::to_string(m) + " != (1)");
        }
        c.expect(C.reduction_number == p - 1, "reduction number != p-1");
        // condition (ii) for all n <= p+1
        for (int n = 2; n <= p + 1; ++n) {
            auto v = check_Tn(W.J(p).gens, W.pseudo(p), n);
            c.expect(v[1], "(x1 I^(n-1):x2) ∩ I^(n-1) != x1 I^(n-2) at n=" + std::to_string(n));
        }
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report(2, "(a^p, b^p, a^2 b^(p-2)) family, p=" + std::to_string(p), c, ms, 60000);
    }
}

void criterion3() {
    auto t0 = Clock::now();
    Checker c;
    auto reg = VarRegistry::make_base({"a", "b", "c"});
    PresentedRing R{reg, P, {}};
    auto a = Polynomial::variable(reg, P, 0);
    auto b = Polynomial::variable(reg, P, 1);
    IdealSpec I = dim4_ideal(R);
    IdealSpec J{R, {I.gens[0], I.gens[1], I.gens[2]}, -1};

    auto Pr = rees_ideal(R, I);
    auto F = fresh_generators(Pr, 5);
    c.expect(F.relation_type == 4, "relation_type != 4");
    c.expect(F.counts.at(2) == 2 && F.counts.at(3) == 1 && F.counts.at(4) == 1,
             "fresh counts != {2:2, 3:1, 4:1}");

    auto C = colon_chain(J, I, 3, 4);
    auto expect3 = [&](const ChainEntry& e, std::vector<MVec> want, const char* what) {
        c.expect(entry_ideal(e, 3) == MonIdeal(3, want), what);
    };
    expect3(C.entries[0], {{3, 0, 0}, {0, 3, 0}, {0, 0, 2}}, "chain m=1 != (a^3,b^3,c^2)");
    expect3(C.entries[1], {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, "chain m=2 != (a^2,b^2,c^2)");
    expect3(C.entries[2], {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}},
            "chain m=3 != (a^2,b^2,c^2,ab)");
    c.expect(C.entries[3].is_unit, "chain m=4 != (1)");

    // the VV sub-check, exactly as specified: x1* and (x1,x2)* regular, n <= 6.
    // (x1) ∩ I^3 contains a^4 b^3 c^6 = a·y^3 while b^3 c^6 ∉ I^2, so this
    // fails from n = 3 on; it is reported honestly.
    IdealSpec A1{R, {a.pow(4)}, -1};
    IdealSpec A12{R, {a.pow(4), b.pow(4)}, -1};
    for (int n = 1; n <= 6; ++n) {
        c.expect(vv_module_zero(A1, I, n), "VV (x1) nonzero at n=" + std::to_string(n));
        c.expect(vv_module_zero(A12, I, n), "VV (x1,x2) nonzero at n=" + std::to_string(n));
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(3, "(a^4, b^4, c^4, abc^2) (VV sub-check fails: a*y^3 witness, see comments)", c, ms, 120000);
}

void criterion4() {
    for (int p = 2; p <= 4; ++p) {
        auto t0 = Clock::now();
        Checker c;
        auto reg = VarRegistry::make_base({"x", "y"});
        PresentedRing R{reg, P, {}};
        auto x = Polynomial::variable(reg, P, 0);
        auto y = Polynomial::variable(reg, P, 1);
        std::vector<Polynomial> gens;
        for (int i = 0; i <= p; ++i) gens.push_back(x.pow(p - i) * y.pow(i));
        auto Pr = rees_ideal(R, IdealSpec{R, gens, -1});
        auto F = fresh_generators(Pr, 4);
        c.expect(F.relation_type == 2, "relation_type != 2");
        c.expect(F.counts.at(2) == p * (p - 1) / 2, "quadratic count != C(p,2)");
        c.expect(F.counts.at(3) == 0 && F.counts.at(4) == 0, "fresh counts above 2 nonzero");
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report(4, "maximal-ideal power m^" + std::to_string(p) + " in k[x,y]", c, ms, 30000);
    }
}

void criterion5() {
    auto t0 = Clock::now();
    Checker c;
    auto reg = VarRegistry::make_base({"u", "v", "z", "t"});
    PresentedRing R{reg, P, {}};
    auto u = Polynomial::variable(reg, P, 0);
    auto v = Polynomial::variable(reg, P, 1);
    auto z = Polynomial::variable(reg, P, 2);
    auto t = Polynomial::variable(reg, P, 3);
    IdealSpec I{R, {u * v, v * z - u * t, z * t, u * t}, -1};
    IdealSpec J{R, {u * v, v * z - u * t, z * t}, -1};

    c.expect(reduction_number(J, I, 10) == 1, "reduction number != 1");
    auto Pr = rees_ideal(R, I);
    auto F = fresh_generators(Pr, 4);
    c.expect(F.relation_type == 2, "relation_type != 2");
    c.expect(F.counts.at(2) == 1, "fresh quadratic count != 1");

    // the unique quadratic equals Y^2 + X2 Y - X1 X3 modulo Q<1>
    auto T1 = Polynomial::variable(Pr.qreg, P, Pr.t_vars[0]);
    auto T2 = Polynomial::variable(Pr.qreg, P, Pr.t_vars[1]);
    auto T3 = Polynomial::variable(Pr.qreg, P, Pr.t_vars[2]);
    auto Y = Polynomial::variable(Pr.qreg, P, Pr.t_vars[3]);
    Polynomial expected = Y * Y + T2 * Y - T1 * T3;
    c.expect(Pr.phi_zero(expected), "expected quadratic is not in Q");
    const auto& rep = F.reps.at(2)[0];
    c.expect(equal_mod_ideal(rep, expected, Pr.q_truncated_gens(1), Pr.qord),
             "fresh quadratic differs from Y^2+X2Y-X1X3 modulo Q<1>");

    // det_closure on the plain monomial generators
    auto res = det_closure(R, IdealSpec{R, {u * v, v * z, z * t, u * t}, -1}, 10);
    c.expect(res.rounds == 1, "det_closure did not halt in one round");
    c.expect(res.equals_rees_ideal, "det_closure P != Q");
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(5, "the 4-cycle ideal (uv, vz-ut, zt, ut)", c, ms, 30000);
}

void criterion6() {
    auto reg = VarRegistry::make_base({"s", "t"});
    PresentedRing R{reg, P, {}};
    auto s = Polynomial::variable(reg, P, 0);
    auto t = Polynomial::variable(reg, P, 1);
    {
        auto t0 = Clock::now();
        Checker c;
        auto res = det_closure(R, IdealSpec{R, {s.pow(3), t.pow(3), s * t * t}, -1}, 10);
        c.expect(res.equals_rees_ideal, "P != Q");
        auto q = res.P.registry();
        auto T1 = Polynomial::variable(q, P, 2);
        auto T2 = Polynomial::variable(q, P, 3);
        auto T3 = Polynomial::variable(q, P, 4);
        auto sq = s.lift_to(q), tq = t.lift_to(q);
        auto has = [&](const std::vector<std::string>& v, const Polynomial& g) {
            Polynomial gm = g.monic(MonomialOrder::degrevlex());
            for (const auto& x : v)
                if (x == gm.to_string()) return true;
            return false;
        };
        bool quad = false, cubic = false;
        for (const auto& tr : res.trace) {
            if (has(tr.admitted, tq * T1 * T2 - sq * T3 * T3)) quad = true;
            if (has(tr.admitted, T1 * T2 * T2 - T3.pow(3))) cubic = true;
        }
        c.expect(quad, "missing fresh form tT1T2 - sT3^2");
        c.expect(cubic, "missing fresh form T1T2^2 - T3^3");
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report(6, "detclosure (s^3,t^3,st^2)", c, ms, 30000);
    }
    {
        auto t0 = Clock::now();
        Checker c;
        auto res = det_closure(R, IdealSpec{R, {s.pow(5), t.pow(5), s * s * t.pow(3)}, -1}, 10);
        c.expect(res.equals_rees_ideal, "P != Q");
        auto q = res.P.registry();
        auto T1 = Polynomial::variable(q, P, 2);
        auto T2 = Polynomial::variable(q, P, 3);
        auto T3 = Polynomial::variable(q, P, 4);
        Polynomial final_form = (T3.pow(5) - T1 * T1 * T2.pow(3)).monic(MonomialOrder::degrevlex());
        bool found = false;
        for (const auto& tr : res.trace)
            for (const auto& x : tr.admitted)
                if (x == final_form.to_string()) found = true;
        c.expect(found, "missing final form T3^5 - T1^2 T2^3");
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report(6, "detclosure (s^5,t^5,s^2t^3)", c, ms, 30000);
    }
}

void criterion7() {
    auto t0 = Clock::now();
    Checker c;
    for (int p = 2; p <= 3; ++p) {
        std::vector<std::string> names;
        for (int i = 0; i <= p; ++i) names.push_back("u" + std::to_string(i));
        names.push_back("x");
        names.push_back("y");
        auto reg = VarRegistry::make_base(names);
        auto var = [&](int i) { return Polynomial::variable(reg, P, i); };
        auto x = var(p + 1), y = var(p + 2);
        std::vector<Polynomial> rels{var(0) * y};
        for (int i = 0; i < p; ++i) rels.push_back(var(i) * x - var(i + 1) * y);
        rels.push_back(var(p) * x);
        rels.push_back(var(0) * x.pow(p));
        PresentedRing R{reg, P, rels};
        auto Pr = rees_ideal(R, IdealSpec{R, {x, y}, -1});
        for (int n = 2; n <= p + 3; ++n) {
            bool bz = ker_beta_zero(Pr, n);
            c.expect(bz == (n != p),
                     "p=" + std::to_string(p) + ": ker beta at n=" + std::to_string(n));
        }
        c.expect(!ker_alpha_zero(Pr, p), "p=" + std::to_string(p) + ": ker alpha zero at p");
        for (int n = p + 1; n <= p + 3; ++n)
            c.expect(ker_alpha_zero(Pr, n),
                     "p=" + std::to_string(p) + ": ker alpha nonzero at n=" + std::to_string(n));
    }
    {
        auto reg = VarRegistry::make_base({"u0", "u1", "u2", "x", "y"});
        auto var = [&](int i) { return Polynomial::variable(reg, P, i); };
        auto u0 = var(0), u1 = var(1), u2 = var(2), x = var(3), y = var(4);
        PresentedRing R{reg, P,
                        {u0 * x, u1 * y, u0 * y * y, u1 * x * x, u1 * x - u2 * y,
                         u0 * y + u2 * x}};
        auto Pr = rees_ideal(R, IdealSpec{R, {x, y}, -1});
        c.expect(!ker_alpha_zero(Pr, 2), "kuhl: ker alpha_2 = 0");
        for (int n = 3; n <= 5; ++n)
            c.expect(ker_alpha_zero(Pr, n), "kuhl: ker alpha nonzero at n=" + std::to_string(n));
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(7, "Kuhl-type family p=2,3 and the original example", c, ms, 120000);
}

void criterion8() {
    auto t0 = Clock::now();
    Checker c;
    {
        auto reg = VarRegistry::make_base({"x", "y"});
        auto x = Polynomial::variable(reg, P, 0);
        auto y = Polynomial::variable(reg, P, 1);
        PresentedRing R{reg, P, {x * y, y * y}};
        auto Pr = rees_ideal(R, IdealSpec{R, {x, y}, -1});
        auto F = fresh_generators(Pr, 4);
        c.expect(F.relation_type == 2, "k[x,y]/(xy,y^2): relation_type != 2");
        c.expect(F.counts.at(2) == 2, "k[x,y]/(xy,y^2): quadratic count != 2");
    }
    {
        auto reg = VarRegistry::make_base({"x1", "x2", "u1", "u2"});
        auto var = [&](int i) { return Polynomial::variable(reg, P, i); };
        auto x1 = var(0), x2 = var(1), u1 = var(2), u2 = var(3);
        PresentedRing R{reg, P, {x1 * u1, x1 * u2, x2 * u1, x2 * u2}};
        IdealSpec I{R, {x1 + u1, x2 + u2, x1 + x2}, -1};
        auto Pr = rees_ideal(R, I);
        auto F = fresh_generators(Pr, 4);
        c.expect(F.relation_type == 2, "buchsbaum: relation_type != 2");
        c.expect(F.counts.at(2) == 1, "buchsbaum: quadratic count != 1");
        auto T1 = Polynomial::variable(Pr.qreg, P, Pr.t_vars[0]);
        auto T2 = Polynomial::variable(Pr.qreg, P, Pr.t_vars[1]);
        auto Y = Polynomial::variable(Pr.qreg, P, Pr.t_vars[2]);
        Polynomial expected = Y * Y - Y * (T1 + T2);
        c.expect(Pr.phi_zero(expected), "buchsbaum: canonical quadratic not in Q");
        c.expect(equal_mod_ideal(F.reps.at(2)[0], expected, Pr.q_truncated_gens(1), Pr.qord),
                 "buchsbaum: fresh quadratic differs from Y^2 - Y(T1+T2) modulo the syzygies");
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(8, "k[x,y]/(xy,y^2) maximal ideal; Buchsbaum parameter ideal", c, ms, 60000);
}

void criterion9() {
    auto t0 = Clock::now();
    Checker c;
    auto reg = VarRegistry::make_base({"z3", "z4", "z5"});
    auto z3 = Polynomial::variable(reg, P, 0);
    auto z4 = Polynomial::variable(reg, P, 1);
    auto z5 = Polynomial::variable(reg, P, 2);
    PresentedRing R{reg, P, {z4 * z4 - z3 * z5, z3.pow(3) - z4 * z5, z5 * z5 - z3 * z3 * z4}};
    IdealSpec I{R, {z3, z4}, -1};
    c.expect(relation_type(rees_ideal(R, I), 6) == 3, "rt != 3 before the quotient");
    PresentedRing R2 = quotient_by_element(R, z3);
    c.expect(relation_type(rees_ideal(R2, image_ideal(R2, I)), 6) == 2,
             "rt != 2 after the quotient");
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(9, "semigroup quotient comparison rt 3 -> 2", c, ms, 30000);
}

void criterion10() {
    auto t0 = Clock::now();
    Checker c;
    auto reg = VarRegistry::make_base({"x", "y"});
    auto x = Polynomial::variable(reg, P, 0);
    auto y = Polynomial::variable(reg, P, 1);
    PresentedRing R{reg, P, {x * x * y, x * y * y}};
    auto Pr = rees_ideal(R, IdealSpec{R, {y}, -1});
    for (int n = 2; n <= 5; ++n)
        c.expect(!ker_alpha_zero(Pr, n), "ker alpha zero at n=" + std::to_string(n));
    // nilpotency proxy: the square of the degree-n witness lies in the
    // Q<1>-generated ideal
    IdealHandle Q1(Pr.qreg, P, Pr.q_truncated_gens(1), Pr.qord);
    auto T = Polynomial::variable(Pr.qreg, P, Pr.t_vars[0]);
    auto xq = x.lift_to(Pr.qreg);
    for (int n = 2; n <= 5; ++n) {
        Polynomial witness = xq * T.pow(n);
        c.expect(Pr.phi_zero(witness), "witness not in Q at n=" + std::to_string(n));
        c.expect(member(witness * witness, Q1),
                 "witness square outside Q<1> at n=" + std::to_string(n));
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(10, "principal g-linear but not p-linear", c, ms, 10000);
}

void criterion11() {
    auto t0 = Clock::now();
    Checker c;
    TwoVars W;
    for (int p = 2; p <= 5; ++p) {
        auto A = theorem_a_report(W.classic(p), p + 1);
        c.expect(A.counts_agree, "classic p=" + std::to_string(p) + ": counts disagree");
        c.expect(A.rt_equals_rn_plus_1, "classic p=" + std::to_string(p) + ": rt != rn+1");
        c.expect(A.top_monic_shape_ok, "classic p=" + std::to_string(p) + ": top form not monic in Y");
    }
    for (int p : {5, 7}) {
        auto A = theorem_a_report(W.pseudo(p), p + 1);
        c.expect(A.counts_agree, "pseudo p=" + std::to_string(p) + ": counts disagree");
        c.expect(A.rt_equals_rn_plus_1, "pseudo p=" + std::to_string(p) + ": rt != rn+1");
    }
    {
        auto reg = VarRegistry::make_base({"a", "b", "c"});
        PresentedRing R{reg, P, {}};
        auto A = theorem_a_report(dim4_ideal(R), 5);
        c.expect(A.counts_agree, "dim4: counts disagree");
        c.expect(A.rt_equals_rn_plus_1, "dim4: rt != rn+1");
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(11, "thmA cross-check: elimination vs colon-quotient counts", c, ms, 300000);
}

void criterion12() {
    auto t0 = Clock::now();
    Checker c;
    const int cap = 5;

    auto check_pattern = [&](const PresentedRing& R, const IdealSpec& I, const std::string& tag) {
        IdealSpec Iy = I.with_y_last();
        std::vector<Polynomial> xs(Iy.gens.begin(), Iy.gens.end() - 1);
        auto PJ = rees_ideal(R, IdealSpec{R, xs, -1});
        for (int n = 2; n <= cap; ++n)
            c.expect(ker_alpha_zero(PJ, n), tag + ": J not linear type at n=" + std::to_string(n));
        auto PI = rees_ideal(R, Iy);
        bool seen_zero = false;
        for (int n = 2; n <= cap; ++n) {
            bool z = ker_alpha_zero(PI, n);
            if (seen_zero && !z)
                c.expect(false, tag + ": nonzero kernel above a zero one at n=" + std::to_string(n));
            if (z) seen_zero = true;
        }
    };

    TwoVars W;
    for (int p = 2; p <= 5; ++p) check_pattern(W.R, W.classic(p), "classic p=" + std::to_string(p));
    for (int p : {5, 7}) check_pattern(W.R, W.pseudo(p), "pseudo p=" + std::to_string(p));
    {
        auto reg = VarRegistry::make_base({"a", "b", "c"});
        PresentedRing R{reg, P, {}};
        check_pattern(R, dim4_ideal(R), "dim4");
    }
    {
        auto reg = VarRegistry::make_base({"u", "v", "z", "t"});
        PresentedRing R{reg, P, {}};
        auto u = Polynomial::variable(reg, P, 0);
        auto v = Polynomial::variable(reg, P, 1);
        auto z = Polynomial::variable(reg, P, 2);
        auto t = Polynomial::variable(reg, P, 3);
        check_pattern(R, IdealSpec{R, {u * v, v * z - u * t, z * t, u * t}, -1}, "C4");
    }
    // linear-type control: an R-sequence ideal has every component zero
    {
        auto reg = VarRegistry::make_base({"x", "y"});
        PresentedRing R{reg, P, {}};
        auto x = Polynomial::variable(reg, P, 0);
        auto y = Polynomial::variable(reg, P, 1);
        auto PI = rees_ideal(R, IdealSpec{R, {x, y}, -1});
        for (int n = 2; n <= cap; ++n)
            c.expect(ker_alpha_zero(PI, n), "control: kernel nonzero at n=" + std::to_string(n));
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(12, "thmB downward-propagation property", c, ms, 300000);
}

void criterion13() {
    auto t0 = Clock::now();
    Checker c;
    uint64_t state = 0x7c3a1f2e9b8d4655ull;
    auto rnd = [&]() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    auto drl = MonomialOrder::degrevlex();
    int instances = 0;
    for (int it = 0; it < 220; ++it) {
        int arity = 1 + static_cast<int>(rnd() % 3);
        std::vector<std::string> names;
        for (int i = 0; i < arity; ++i) names.push_back(std::string(1, char('a' + i)));
        auto reg = VarRegistry::make_base(names);
        auto rv = [&]() {
            MVec v(arity);
            for (int i = 0; i < arity; ++i) v[i] = static_cast<int32_t>(rnd() % 7);
            return v;
        };
        std::vector<MVec> ag, bg;
        for (unsigned k = 0; k < 1 + rnd() % 4; ++k) ag.push_back(rv());
        for (unsigned k = 0; k < 1 + rnd() % 4; ++k) bg.push_back(rv());
        MVec m = rv();
        MonIdeal A(arity, ag), B(arity, bg);
        auto handle = [&](const MonIdeal& X) {
            std::vector<Polynomial> g;
            for (const auto& v : X.gens()) g.push_back(poly_of_mvec(reg, P, v));
            if (g.empty()) g.push_back(Polynomial::zero(reg, P));
            return IdealHandle(reg, P, g, drl);
        };
        IdealHandle Ah = handle(A), Bh = handle(B);
        Polynomial mp = poly_of_mvec(reg, P, m);
        bool ok = true;
        ok = ok && (mi_member(m, A) == member(mp, Ah));
        ok = ok && ideal_equal(handle(mi_colon(A, m)),
                               colon_ideal(Ah, IdealHandle(reg, P, {mp}, drl)));
        ok = ok && ideal_equal(handle(mi_intersect(A, B)), intersect(Ah, Bh));
        ok = ok && ideal_equal(handle(mi_colon_ideal(A, B)), colon_ideal(Ah, Bh));
        ok = ok && (mi_equal(A, B) == ideal_equal(Ah, Bh));
        if (!ok) c.expect(false, "disagreement at instance " + std::to_string(it));
        ++instances;
    }
    c.expect(instances >= 200, "fewer than 200 instances");
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(13, "oracle equivalence on " + std::to_string(instances) + " random monomial instances",
           c, ms, 60000);
}

void criterion14() {
    Checker c;
    const auto& st = gb_check_stats();
    c.expect(st.enabled, "self-checks were not enabled");
    c.expect(st.bases_checked > 0, "no bases were checked");
    c.expect(st.nf_idempotence_samples >= 10 * st.bases_checked, "missing idempotence samples");
    c.expect(st.failures == 0, std::to_string(st.failures) + " self-check failures");
    std::ostringstream label;
    label << "Groebner self-checks: " << st.bases_checked << " bases, " << st.spoly_reductions
          << " S-polynomial reductions, " << st.nf_idempotence_samples << " idempotence samples";
    report(14, label.str(), c, 0.0, 1.0);
}

void criterion15() {
    auto t0 = Clock::now();
    Checker c;
    TwoVars W;
    for (int p = 2; p <= 3; ++p) {
        auto Pr = rees_ideal(W.R, W.classic(p));
        IdealHandle F = fiber_ideal(Pr);
        c.expect(F.groebner().size() == 1, "fiber ideal not principal at p=" + std::to_string(p));
        auto treg = F.registry();
        auto T1 = Polynomial::variable(treg, P, 0);
        auto T2 = Polynomial::variable(treg, P, 1);
        auto T3 = Polynomial::variable(treg, P, 2);
        c.expect(proportional(F.groebner()[0], T3.pow(p) - T1 * T2.pow(p - 1)),
                 "fiber ideal != (Y^p - X1 X2^(p-1)) at p=" + std::to_string(p));
        int rtq = relation_type(Pr, p + 1);
        int rtg = graded_fresh(Pr, p + 1).relation_type;
        int rtf = fiber_fresh(Pr, p + 1).relation_type;
        c.expect(rtq == p && rtg == p && rtf == p,
                 "rt(fiber)=rt(gr)=rt(Q)=p fails at p=" + std::to_string(p));
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(15, "fiber cone principal form and rt equalities", c, ms, 30000);
}

} // namespace

int main() {
    gb_check_stats().enabled = true;
    std::printf("acceptance suite (exact arithmetic over F_%lld)\n",
                static_cast<long long>(P));
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    criterion14();
    criterion15();
    std::printf("%s: %d failing criterion line(s)\n", g_failures ? "FAIL" : "PASS", g_failures);
    return g_failures == 0 ? 0 : 1;
}
