#include <doctest.h>

#include <random>

#include "macfock/basis.hpp"
#include "macfock/symfunc.hpp"

using namespace macfock;

namespace {

FieldElem q() { return FieldElem::q(); }
FieldElem t() { return FieldElem::t(); }
FieldElem one() { return FieldElem(1); }

SymFunc random_symfunc(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-4, 4), pick(0, 1);
    SymFunc f;
    for (int i = 0; i < 3; ++i) {
        auto parts = partitions_of(deg(rng));
        std::uniform_int_distribution<std::size_t> which(0, parts.size() - 1);
        int c = coeff(rng);
        if (c == 0) c = 2;
        FieldElem fc(c);
        if (pick(rng)) fc = fc * q();
        f.add_term(parts[which(rng)], fc);
    }
    return f;
}

}  // namespace

TEST_SUITE_BEGIN("symfunc");

TEST_CASE("sym_arith_examples") {
    SymFunc p1 = SymFunc::p(1);
    CHECK(p1 * p1 == SymFunc::p_mu(Partition({1, 1})));
    SymFunc f = SymFunc::p(2) + p1 * p1;
    CHECK(f.component(2) == f);
    CHECK(f.component(1).is_zero());
    CHECK(p1.scale(one() - q()) == SymFunc::term(Partition({1}), one() - q()));
}

TEST_CASE("basis_convert_examples") {
    // character-table oracle for S(2): chi^(2) = [1,1], chi^(1,1) = [1,-1]
    // on classes (1,1),(2) with z = 2,2 gives the frozen expansions below.
    SymFunc s2 = schur_sym(Partition({2}));
    SymFunc s11 = schur_sym(Partition({1, 1}));
    SymFunc p11 = SymFunc::p_mu(Partition({1, 1}));
    SymFunc p2 = SymFunc::p(2);
    FieldElem half = FieldElem::rational(1, 2);
    CHECK(s2 == (p11 + p2).scale(half));
    CHECK(s11 == (p11 - p2).scale(half));
    CHECK(monomial_sym(Partition({1})) == SymFunc::p(1));
}

TEST_CASE("basis_round_trip_degree_up_to_6") {
    std::mt19937 rng(314);
    for (int i = 0; i < 8; ++i) {
        SymFunc f = random_symfunc(rng, 6);
        for (Basis b : {Basis::power, Basis::monomial, Basis::schur}) {
            CHECK(from_expansion(basis_convert(f, b), b) == f);
        }
    }
}

TEST_CASE("inner_products_examples") {
    SymFunc p1 = SymFunc::p(1), p2 = SymFunc::p(2);
    CHECK(inner_qt(p1, p1) == (one() - q()) / (one() - t()));
    CHECK(inner_qt(p1, p2).is_zero());
    CHECK(inner_qt(p2, p2) == FieldElem(2) * (one() - q().pow(2)) / (one() - t().pow(2)));

    CHECK(inner_prime(p1, p1) == (one() - q()) * (one() - t()));
    CHECK(inner_prime(p1, SymFunc::one()).is_zero());
    SymFunc p11 = SymFunc::p_mu(Partition({1, 1}));
    CHECK(inner_prime(p11, p11) == FieldElem(2) * ((one() - q()) * (one() - t())).pow(2));
}

TEST_CASE("herm_examples") {
    SymFunc p1 = SymFunc::p(1), p2 = SymFunc::p(2);
    FieldElem u = FieldElem::u(), v = FieldElem::v();
    FieldElem w1 = (u - u.inverse()) * (v - v.inverse());
    CHECK(herm(p1, p1) == w1);
    CHECK(herm(p1.scale(q()), p1) == q().inverse() * w1);
    CHECK(herm(p2, p2) ==
          FieldElem(2) * (q() - q().inverse()) * (t() - t().inverse()));
}

TEST_CASE("herm_is_hermitian") {
    std::mt19937 rng(2718);
    for (int i = 0; i < 10; ++i) {
        SymFunc f = random_symfunc(rng, 4), g = random_symfunc(rng, 4);
        CHECK(herm(f, g) == herm(g, f).conjugate());
    }
}

TEST_CASE("pairings_diagonal_in_p_basis") {
    for (int d = 0; d <= 6; ++d) {
        auto parts = partitions_of(d);
        for (const auto& la : parts) {
            for (const auto& mu : parts) {
                SymFunc pl = SymFunc::p_mu(la), pm = SymFunc::p_mu(mu);
                if (la == mu) {
                    FieldElem z(la.zcent());
                    CHECK(inner_qt(pl, pm) == z * weight_qt(mu));
                    CHECK(inner_prime(pl, pm) == z * weight_prime(mu));
                    CHECK(herm(pl, pm) == z * weight_w(mu));
                } else {
                    CHECK(inner_qt(pl, pm).is_zero());
                    CHECK(inner_prime(pl, pm).is_zero());
                    CHECK(herm(pl, pm).is_zero());
                }
            }
        }
    }
}

TEST_CASE("omega_examples") {
    CHECK(omega(SymFunc::p(2)) == -SymFunc::p(2));
    CHECK(omega(SymFunc::p(3)) == SymFunc::p(3));
    SymFunc p21 = SymFunc::p_mu(Partition({2, 1}));
    CHECK(omega(p21) == -p21);
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        SymFunc f = random_symfunc(rng, 6);
        CHECK(omega(omega(f)) == f);
    }
}

TEST_CASE("upsilon_examples") {
    SymFunc p2 = SymFunc::p(2);
    CHECK(upsilon(p2) == p2.scale((one() - t().pow(-2)).inverse()));
    CHECK(upsilon(upsilon(SymFunc::p(1)), true) == SymFunc::p(1));
    SymFunc p11 = SymFunc::p_mu(Partition({1, 1}));
    CHECK(upsilon(p11) == p11.scale((one() - t().inverse()).pow(-2)));
    std::mt19937 rng(6);
    for (int i = 0; i < 10; ++i) {
        SymFunc f = random_symfunc(rng, 6);
        CHECK(upsilon(upsilon(f), true) == f);
        SymFunc g = random_symfunc(rng, 3);
        CHECK(upsilon(f * g) == upsilon(f) * upsilon(g));
    }
}

TEST_CASE("evaluate_examples") {
    // p_k at the empty principal specialization is 1/(1-t^k)
    AlphabetPoint x0 = AlphabetPoint::principal(Partition());
    for (int k = 1; k <= 4; ++k)
        CHECK(evaluate(SymFunc::p(k), x0) == one() / (one() - t().pow(k)));

    AlphabetPoint ab = AlphabetPoint::finite({q(), t()});
    CHECK(evaluate(SymFunc::p(1), ab) == q() + t());

    AlphabetPoint neg = ab.negate();
    for (int k = 1; k <= 3; ++k)
        CHECK(evaluate(SymFunc::p(k), neg) == -evaluate(SymFunc::p(k), ab));
}

TEST_CASE("evaluate_is_algebra_homomorphism") {
    std::mt19937 rng(17);
    std::vector<AlphabetPoint> points = {
        AlphabetPoint::principal(Partition({2, 1})),
        AlphabetPoint::finite({q(), t().inverse(), FieldElem::m()}),
        AlphabetPoint::principal(Partition({1})).negate(),
    };
    for (const auto& x : points) {
        for (int i = 0; i < 6; ++i) {
            SymFunc f = random_symfunc(rng, 3), g = random_symfunc(rng, 3);
            CHECK(evaluate(f * g, x) == evaluate(f, x) * evaluate(g, x));
        }
    }
}

TEST_CASE("serialization_round_trip") {
    std::mt19937 rng(23);
    for (int i = 0; i < 10; ++i) {
        SymFunc f = random_symfunc(rng, 5);
        CHECK(SymFunc::deserialize(f.serialize()) == f);
    }
    CHECK(SymFunc::p(1).str() == "p[1]");
    CHECK(SymFunc().serialize() == "0");
    CHECK(SymFunc::deserialize("0").is_zero());
}

TEST_SUITE_END();
