#include <catch2/catch_amalgamated.hpp>

#include <reeskit/poly.hpp>

using namespace reeskit;

namespace {

constexpr int64_t P = 32003;

uint64_t rng_state = 0x9e3779b97f4a7c15ull;
uint64_t detail_rnd() {
    rng_state += 0x9e3779b97f4a7c15ull;
    uint64_t z = rng_state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Monomial random_mono(int nvars, int maxexp) {
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i)
        m.set_exp(i, static_cast<int32_t>(detail_rnd() % (maxexp + 1)));
    return m;
}

Polynomial random_poly(const RegistryPtr& reg, int64_t p, int terms, int maxexp) {
    Polynomial f = Polynomial::zero(reg, p);
    for (int t = 0; t < terms; ++t)
        f = f + Polynomial::term(reg, p, random_mono(reg->size(), maxexp),
                                 static_cast<int64_t>(detail_rnd() % p));
    return f;
}

} // namespace

TEST_CASE("prime field arithmetic") {
    REQUIRE(fp_add(P - 1, 1, P) == 0);
    REQUIRE(fp_sub(0, 1, P) == P - 1);
    REQUIRE(fp_mul(fp_inv(1234, P), 1234, P) == 1);
    REQUIRE(fp_pow(3, P - 1, P) == 1);
    REQUIRE_THROWS_AS(fp_inv(0, P), std::domain_error);
    REQUIRE(fp_is_prime(32003));
    REQUIRE_FALSE(fp_is_prime(32001));
}

TEST_CASE("monomial comparison examples") {
    auto lex = MonomialOrder::lex();
    auto drl = MonomialOrder::degrevlex();
    // lex(a>b): a^2 vs ab
    Monomial a2({2, 0}), ab({1, 1});
    REQUIRE(compare_monomials(a2, ab, lex) == Cmp::GT);
    REQUIRE(compare_monomials(ab, ab, lex) == Cmp::EQ);
    // degrevlex(a>b>c): b^2 vs ac
    Monomial b2({0, 2, 0}), ac({1, 0, 1});
    REQUIRE(compare_monomials(b2, ac, drl) == Cmp::GT);
    REQUIRE_THROWS_AS(compare_monomials(a2, ac, lex), std::invalid_argument);
}

TEST_CASE("order axioms", "[property]") {
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                                         MonomialOrder::block({MonomialOrder::lex(),
                                                               MonomialOrder::degrevlex()},
                                                              {{0}, {1, 2, 3}})};
    Monomial one(4);
    for (const auto& ord : orders) {
        for (int it = 0; it < 300; ++it) {
            Monomial m1 = random_mono(4, 5), m2 = random_mono(4, 5), m = random_mono(4, 5);
            // totality: EQ exactly when equal
            Cmp c = ord.compare(m1, m2);
            if (m1 == m2) REQUIRE(c == Cmp::EQ);
            if (c == Cmp::EQ) REQUIRE(m1 == m2);
            if (c == Cmp::LT) REQUIRE(ord.compare(m2, m1) == Cmp::GT);
            // multiplicativity
            if (c == Cmp::LT) REQUIRE(ord.compare(m1 * m, m2 * m) == Cmp::LT);
            // global: 1 is minimum
            if (!(m1 == one)) REQUIRE(ord.compare(one, m1) == Cmp::LT);
        }
    }
}

TEST_CASE("polynomial arithmetic examples") {
    auto reg = VarRegistry::make_base({"a", "b"});
    auto a = Polynomial::variable(reg, P, 0);
    auto b = Polynomial::variable(reg, P, 1);
    REQUIRE((a + b) * (a - b) == a * a - b * b);
    Polynomial f = a * a * b + b.pow(3) - Polynomial::constant(reg, P, 7);
    REQUIRE((f + (-f)).is_zero());
    REQUIRE(f - f == Polynomial::zero(reg, P));

    // (a+b)^5 over F_5: expected values from integer binomial coefficients
    auto reg5 = VarRegistry::make_base({"a", "b"});
    auto a5 = Polynomial::variable(reg5, 5, 0);
    auto b5 = Polynomial::variable(reg5, 5, 1);
    int64_t binom[6] = {1, 5, 10, 10, 5, 1};
    Polynomial expected = Polynomial::zero(reg5, 5);
    for (int k = 0; k <= 5; ++k) {
        Monomial m({static_cast<int32_t>(5 - k), static_cast<int32_t>(k)});
        expected = expected + Polynomial::term(reg5, 5, m, binom[k] % 5);
    }
    REQUIRE((a5 + b5).pow(5) == expected);
    REQUIRE(expected == a5.pow(5) + b5.pow(5));
}

TEST_CASE("arithmetic laws", "[property]") {
    auto reg = VarRegistry::make_base({"x", "y", "z"});
    for (int it = 0; it < 60; ++it) {
        Polynomial f = random_poly(reg, P, 4, 3);
        Polynomial g = random_poly(reg, P, 4, 3);
        Polynomial h = random_poly(reg, P, 4, 3);
        REQUIRE(f + g == g + f);
        REQUIRE(f * g == g * f);
        REQUIRE((f + g) + h == f + (g + h));
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("modulus and registry mismatches are rejected") {
    auto reg = VarRegistry::make_base({"a", "b"});
    auto reg2 = VarRegistry::make_base({"a", "b"});
    auto f = Polynomial::variable(reg, P, 0);
    auto g = Polynomial::variable(reg2, P, 0);
    REQUIRE_THROWS_AS(f + g, std::invalid_argument); // distinct registries
    auto h = Polynomial::variable(reg, 101, 0);
    REQUIRE_THROWS_AS(f + h, std::invalid_argument);
    REQUIRE_THROWS_AS(VarRegistry::make_base({"a", "a"}), std::invalid_argument);
}

TEST_CASE("substitution") {
    // T1 -> s^3 u, T2 -> t^3 u, T3 -> s t^2 u kills t*T1*T2 - s*T3^2
    auto qreg = VarRegistry::make({"s", "t", "T1", "T2", "T3"},
                                  {VarBlock::base, VarBlock::base, VarBlock::rees,
                                   VarBlock::rees, VarBlock::rees});
    auto ext = qreg->extend({"u"}, {VarBlock::aux});
    auto s = Polynomial::variable(ext, P, 0);
    auto t = Polynomial::variable(ext, P, 1);
    auto u = Polynomial::variable(ext, P, 5);
    auto sq = Polynomial::variable(qreg, P, 0);
    auto tq = Polynomial::variable(qreg, P, 1);
    auto T1 = Polynomial::variable(qreg, P, 2);
    auto T2 = Polynomial::variable(qreg, P, 3);
    auto T3 = Polynomial::variable(qreg, P, 4);
    Polynomial f = tq * T1 * T2 - sq * T3 * T3;
    std::map<int, Polynomial> phi{{2, s.pow(3) * u}, {3, t.pow(3) * u}, {4, s * t * t * u}};
    REQUIRE(f.lift_to(ext).substitute(phi).is_zero());

    // identity map
    std::map<int, Polynomial> id{{2, Polynomial::variable(qreg, P, 2)}};
    REQUIRE(f.substitute(id) == f);

    // T1 -> 0 on Y^2 + X2 Y - X1 X3  (variables renamed T1..T3, Y=T4)
    auto vreg = VarRegistry::make_base({"T1", "T2", "T3", "Y"});
    auto X1 = Polynomial::variable(vreg, P, 0);
    auto X2 = Polynomial::variable(vreg, P, 1);
    auto X3 = Polynomial::variable(vreg, P, 2);
    auto Y = Polynomial::variable(vreg, P, 3);
    Polynomial g = Y * Y + X2 * Y - X1 * X3;
    std::map<int, Polynomial> kill{{0, Polynomial::zero(vreg, P)}};
    REQUIRE(g.substitute(kill) == Y * Y + X2 * Y);
}

TEST_CASE("t_components") {
    auto reg = VarRegistry::make({"a", "T1", "T2"},
                                 {VarBlock::base, VarBlock::rees, VarBlock::rees});
    auto a = Polynomial::variable(reg, P, 0);
    auto T1 = Polynomial::variable(reg, P, 1);
    auto T2 = Polynomial::variable(reg, P, 2);
    Polynomial f = a + T1 + T1 * T2;
    auto comps = f.t_components();
    REQUIRE(comps.size() == 3);
    REQUIRE(comps[0] == a);
    REQUIRE(comps[1] == T1);
    REQUIRE(comps[2] == T1 * T2);

    Polynomial h = a * T1 * T2 + T2 * T2; // T-homogeneous of degree 2
    REQUIRE(h.t_components().size() == 1);
    REQUIRE(h.t_components()[0] == h);

    for (int it = 0; it < 40; ++it) {
        Polynomial r = random_poly(reg, P, 6, 4);
        Polynomial sum = Polynomial::zero(reg, P);
        for (const auto& c : r.t_components()) {
            REQUIRE(c.is_t_homogeneous());
            sum = sum + c;
        }
        REQUIRE(sum == r);
    }
}

TEST_CASE("exponent overflow is caught") {
    Monomial m({Monomial::kMaxExp - 1, 0});
    Monomial n({2, 0});
    REQUIRE_THROWS_AS(m * n, std::overflow_error);
}
