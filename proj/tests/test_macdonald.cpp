#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "macfock/basis.hpp"
#include "macfock/localization.hpp"
#include "macfock/macdonald.hpp"

using namespace macfock;

namespace {
FieldElem q() { return FieldElem::q(); }
FieldElem t() { return FieldElem::t(); }
FieldElem one() { return FieldElem(1); }
}  // namespace

TEST_SUITE_BEGIN("macdonald");

TEST_CASE("macdonald_P_examples") {
    Macdonald mac;
    CHECK(mac.P(Partition({1})) == SymFunc::p(1));
    // frozen values from the degree-2 Gram-Schmidt oracle
    CHECK(mac.P(Partition({1, 1})) == monomial_sym(Partition({1, 1})));
    SymFunc expect = monomial_sym(Partition({2})) +
                     monomial_sym(Partition({1, 1}))
                         .scale((one() + q()) * (one() - t()) / (one() - q() * t()));
    CHECK(mac.P(Partition({2})) == expect);
}

TEST_CASE("macdonald_P_monic_triangular") {
    Macdonald mac;
    for (int d = 1; d <= 4; ++d) {
        for (const auto& mu : partitions_of(d)) {
            auto exp = basis_convert(mac.P(mu), Basis::monomial);
            CHECK(exp.at(mu) == one());
            for (const auto& [nu, c] : exp) CHECK(nu.dominated_by(mu));
        }
    }
}

TEST_CASE("macdonald_P_orthogonal_up_to_5") {
    Macdonald mac;
    for (int d = 1; d <= 5; ++d) {
        auto parts = partitions_of(d);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                CHECK(inner_qt(mac.P(parts[i]), mac.P(parts[j])).is_zero());
    }
}

TEST_CASE("modified_H_examples") {
    Macdonald mac;
    CHECK(mac.H(Partition()) == SymFunc::one());
    CHECK(mac.H(Partition({1})) == SymFunc::p(1));
    FieldElem u = FieldElem::u(), v = FieldElem::v();
    CHECK(mac.norm_herm(Partition({1})) == (u - u.inverse()) * (v - v.inverse()));
    // H_(2) = (1+q)/2 p_1^2 + (1-q)/2 p_2 (worked defH chain at degree 2)
    SymFunc h2 = SymFunc::p_mu(Partition({1, 1})).scale((one() + q()) * FieldElem::rational(1, 2)) +
                 SymFunc::p(2).scale((one() - q()) * FieldElem::rational(1, 2));
    CHECK(mac.H(Partition({2})) == h2);
}

TEST_CASE("J_integral_form_has_integer_qt_coefficients") {
    Macdonald mac;
    for (int d = 0; d <= 5; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (const auto& [nu, c] : basis_convert(mac.J(mu), Basis::monomial)) {
                CHECK(c.is_polynomial());
                if (c.is_polynomial()) {
                    CHECK(c.den().is_one());
                    for (const auto& term : c.num().terms()) {
                        // only integer powers of q and t
                        CHECK(mono::exp_u(term.key) % 2 == 0);
                        CHECK(mono::exp_v(term.key) % 2 == 0);
                        CHECK(mono::exp_m(term.key) == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("norm_formula_hm2_up_to_3") {
    Macdonald mac;
    for (int d = 0; d <= 3; ++d) {
        for (const auto& la : partitions_of(d)) {
            FieldElem expect(1);
            Character cotangent = tangent_char(la);
            for (const auto& [key, mult] : cotangent.terms()) {
                FieldElem half = FieldElem::monomial(key.first, key.second, 0);
                expect *= (half - half.inverse()).pow(static_cast<int>(mult.get_si()));
            }
            CHECK(mac.norm_herm(la) == expect);
        }
    }
}

TEST_CASE("to_H_basis_examples") {
    Macdonald mac;
    auto e = mac.to_H_basis(mac.H(Partition({2})));
    REQUIRE(e.size() == 1);
    CHECK(e.at(Partition({2})) == one());
    auto p1 = mac.to_H_basis(SymFunc::p(1));
    REQUIRE(p1.size() == 1);
    CHECK(p1.at(Partition({1})) == one());
    CHECK(mac.to_H_basis(SymFunc()).empty());
    // reconstruction is exact on a mixed element
    SymFunc f = SymFunc::p_mu(Partition({2, 1})).scale(q()) + SymFunc::p(1) + SymFunc::one();
    CHECK(mac.from_H_basis(mac.to_H_basis(f)) == f);
}

TEST_CASE("T_operator_examples") {
    Macdonald mac;
    CHECK(mac.apply_T(mac.H(Partition({1}))) == mac.H(Partition({1})));
    CHECK(mac.apply_T(mac.H(Partition({2}))) == mac.H(Partition({2})).scale(q()));
    CHECK(mac.apply_T(mac.H(Partition({1, 1}))) == mac.H(Partition({1, 1})).scale(t()));
    SymFunc f = SymFunc::p_mu(Partition({2, 1})) + SymFunc::p(1).scale(q() - t());
    CHECK(mac.apply_T(mac.apply_T(f), -1) == f);
}

TEST_CASE("interpolation_Hstar_examples") {
    Macdonald mac;
    CHECK(mac.interpolation_Hstar(Partition()) == SymFunc::one());
    SymFunc h1 = mac.interpolation_Hstar(Partition({1}));
    CHECK(h1.component(1) == SymFunc::p(1));
    // H*_(1) = p_1 + c; at the negated empty ideal point it must vanish
    CHECK(evaluate(h1, ideal_point(Partition()).negate()).is_zero());
    // top degree of H*_mu is H_mu
    for (int d = 1; d <= 3; ++d)
        for (const auto& mu : partitions_of(d))
            CHECK(mac.interpolation_Hstar(mu).component(d) == mac.H(mu));
}

TEST_CASE("vanishing_table_up_to_3") {
    Macdonald mac;
    for (int dm = 0; dm <= 3; ++dm) {
        for (int dl = 0; dl <= 3; ++dl) {
            for (const auto& mu : partitions_of(dm)) {
                for (const auto& la : partitions_of(dl)) {
                    if (!la.contains(mu)) CHECK(mac.verify_vanishing(mu, la));
                }
            }
        }
    }
    for (int d = 0; d <= 3; ++d)
        for (const auto& mu : partitions_of(d)) CHECK_FALSE(mac.hstar_value(mu, mu).is_zero());
}

TEST_CASE("fourier_pair_examples") {
    Macdonald mac;
    CHECK(mac.fourier_pair(SymFunc::one(), Partition()) == one());
    // orthogonality of interpolation polynomials under the Fourier pairing
    auto all = partitions_up_to(3);
    for (const auto& la : all) {
        SymFunc hs = mac.interpolation_Hstar(la);
        for (const auto& mu : all) {
            if (!mu.contains(la)) CHECK(mac.fourier_pair(hs, mu).is_zero());
            if (la != mu) CHECK(mac.fourier_pair(hs, mu) * mac.fourier_pair(mac.interpolation_Hstar(mu), la) ==
                                FieldElem());  // both orders cannot be nonzero
        }
    }
}

TEST_CASE("hstar_fourier_orthogonality_up_to_3") {
    Macdonald mac;
    auto all = partitions_up_to(3);
    for (const auto& la : all) {
        for (const auto& mu : all) {
            if (la == mu) continue;
            AlphabetPoint neg_mu = ideal_point(mu).negate();
            AlphabetPoint neg0 = ideal_point(Partition()).negate();
            FieldElem pairing =
                evaluate(mac.interpolation_Hstar(la), neg_mu) * evaluate(mac.interpolation_Hstar(mu), neg0);
            // (H*_la, H*_mu)_Fourier expands through the H-expansion of H*_mu
            auto coeffs = mac.to_H_basis(mac.interpolation_Hstar(mu));
            FieldElem total;
            for (const auto& [nu, c] : coeffs)
                total += c * mac.fourier_pair(mac.interpolation_Hstar(la), nu);
            CHECK(total.is_zero());
            (void)pairing;
        }
    }
}

TEST_CASE("cache_round_trip") {
    auto dir = std::filesystem::temp_directory_path() / "macfock_cache_test";
    std::filesystem::remove_all(dir);
    {
        Macdonald mac(dir.string());
        mac.ensure_degree(3);
        CHECK(std::filesystem::exists(dir / "macdonald_deg3.txt"));
    }
    {
        Macdonald mac(dir.string());
        Macdonald fresh;
        for (int d = 0; d <= 3; ++d) {
            for (const auto& mu : partitions_of(d)) {
                CHECK(mac.P(mu) == fresh.P(mu));
                CHECK(mac.H(mu) == fresh.H(mu));
                CHECK(mac.norm_herm(mu) == fresh.norm_herm(mu));
            }
        }
    }
    // a mismatched version header forces a silent recompute
    {
        std::ofstream out(dir / "macdonald_deg1.txt");
        out << "macfock-cache v0\n";
    }
    {
        Macdonald mac(dir.string());
        CHECK(mac.H(Partition({1})) == SymFunc::p(1));
    }
    std::filesystem::remove_all(dir);
}

TEST_SUITE_END();
