#include <random>

#include "diffschub/nullspace.hpp"
#include "diffschub/oracle.hpp"
#include "diffschub/yops.hpp"
#include "doctest.h"

using namespace diffschub;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
DiagElement U(const std::string& s) { return DiagElement::unit(P(s)); }
}  // namespace

TEST_CASE("corner operators on the worked diagram") {
    DiagElement xi_want, nabla_want;
    xi_want.add(P("3,3,1"), 1);
    xi_want.add(P("4,2,1"), 1);
    xi_want.add(P("4,3"), 1);
    nabla_want.add(P("3,3,1"), 3);
    nabla_want.add(P("4,2,1"), 1);
    nabla_want.add(P("4,3"), -2);
    CHECK(xi(U("4,3,1")) == xi_want);
    CHECK(nabla(U("4,3,1")) == nabla_want);

    CHECK(xi(DiagElement::unit(Partition())).is_zero());
    CHECK(nabla(DiagElement::unit(Partition())).is_zero());
    CHECK(xi(U("1")) == DiagElement::unit(Partition()));
    CHECK(nabla(U("1")).is_zero());
    CHECK(nabla(U("2")) == U("1"));
}

TEST_CASE("recovery from the derivative pair") {
    DiagElement D, N;
    D.add(P("1,1"), 1);
    D.add(P("2"), 1);
    N.add(P("1,1"), 1);
    N.add(P("2"), -1);
    CHECK(recover(D, N) == U("2,1"));

    CHECK(recover(DiagElement(), DiagElement()).is_zero());

    DiagElement D2;
    D2.add(P("1"), 2);
    DiagElement want = U("2") + U("1,1");
    CHECK(recover(D2, DiagElement()) == want);

    // inconsistent pair: nothing has xi-image (1) with nabla-image 5*(1)
    DiagElement bad;
    bad.add(P("1"), 5);
    DiagElement D3 = DiagElement::unit(P("1"));
    CHECK_THROWS_AS(recover(D3, bad), NonRecoverable);
}

TEST_CASE("recovery round-trips systematically") {
    for (const auto& lam : partitions_up_to(7)) {
        if (lam.size() == 0) continue;
        const DiagElement x = DiagElement::unit(lam);
        CHECK(recover(xi(x), nabla(x)) == x);
    }
    std::mt19937_64 rng(11);
    const auto shapes = partitions_up_to(6);
    std::uniform_int_distribution<std::size_t> pick(1, shapes.size() - 1);
    std::uniform_int_distribution<int> coeff(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        DiagElement x;
        for (int i = 0; i < 3; ++i) x.add(shapes[pick(rng)], coeff(rng));
        CHECK(recover(xi(x), nabla(x)) == x);
    }
}

TEST_CASE("multiplication matches the pinned products") {
    CHECK(multiply(P("1"), P("1")) == U("2") + U("1,1"));
    CHECK(multiply(P("2,1"), P("1")) == U("3,1") + U("2,2") + U("2,1,1"));
    CHECK(multiply(P("2,1"), P("2,1")).coeff(P("3,2,1")) == Rational(2));
    CHECK(multiply(Partition(), P("3,1")) == U("3,1"));
    CHECK(multiply(P("3,1"), Partition()) == U("3,1"));
    CHECK(multiply(Partition(), Partition()) == DiagElement::unit(Partition()));

    // order-independence of the memoized pair
    CHECK(multiply(P("3,2"), P("2,1")) == multiply(P("2,1"), P("3,2")));
}

TEST_CASE("multiply agrees with the tableau oracle on a sweep") {
    const auto small = partitions_up_to(4);
    for (const auto& lam : small)
        for (const auto& mu : small) {
            const DiagElement got = multiply(lam, mu);
            for (const auto& nu : partitions_of(lam.size() + mu.size()))
                CHECK(got.coeff(nu) == Rational(oracle::lr_count(lam, mu, nu)));
        }
}

TEST_CASE("commutator ladder deletes border strips") {
    CHECK(rho(2, U("2")) == DiagElement::unit(Partition()));
    CHECK(rho(2, U("1,1")) == DiagElement::unit(Partition(), Rational(-1)));
    CHECK(rho(2, U("2,1")).is_zero());
    CHECK(rho(1, U("4,3,1")) == xi(U("4,3,1")));

    for (const auto& lam : partitions_up_to(6)) {
        const DiagElement x = DiagElement::unit(lam);
        for (int k = 1; k <= 6; ++k) CHECK(rho(k, x) == rho_strip(k, x));
    }
}

TEST_CASE("power sums as alternating hooks") {
    CHECK(power_sum(1) == U("1"));
    CHECK(power_sum(2) == U("2") - U("1,1"));
    CHECK(power_sum(3) == U("3") - U("2,1") + U("1,1,1"));

    // rho^(k) is dual to multiplication by p_k on the power-sum side
    for (int k = 1; k <= 5; ++k)
        for (int j = 1; j <= 5; ++j) {
            DiagElement want;
            if (j == k) want.add(Partition(), Rational(k));
            CHECK(rho(k, power_sum(j)) == want);
        }
}

TEST_CASE("symmetric group characters") {
    auto cv = character(P("2"), P("1,1"));
    CHECK(cv.chi == 1);
    CHECK(cv.z == 2);
    cv = character(P("1,1"), P("2"));
    CHECK(cv.chi == -1);
    CHECK(cv.z == 2);
    cv = character(P("2,1"), P("3"));
    CHECK(cv.chi == -1);
    CHECK(cv.z == 3);
    cv = character(P("2,1"), P("1,1,1"));
    CHECK(cv.chi == 2);  // dimension of the standard representation
    CHECK(cv.z == 6);

    // column orthogonality at mu = (1^n): sum of chi^2 weighted by 1/z is 1
    for (int n = 1; n <= 5; ++n) {
        Rational total;
        const Partition ones(std::vector<int>(n, 1));
        for (const auto& lam : partitions_of(n)) {
            const auto v = character(lam, ones);
            total += Rational(v.chi) * Rational(v.chi) / Rational(v.z);
        }
        CHECK(total == Rational(1));
    }
}

TEST_CASE("schur operators in the rho basis") {
    CHECK(xi_lambda(P("2"), U("2")) == DiagElement::unit(Partition()));
    CHECK(xi_lambda(P("2"), U("1,1")).is_zero());
    CHECK(xi_lambda(P("1,1"), U("1,1")) == DiagElement::unit(Partition()));
    CHECK(xi_lambda(P("1"), U("4,3,1")) == xi(U("4,3,1")));
    CHECK(xi_lambda(Partition(), U("3,2")) == U("3,2"));

    // adjointness: coefficient of mu in xi^nu s_lam is c^lam_{mu nu}
    for (const auto& lam : partitions_up_to(5)) {
        for (int k = 1; k <= lam.size(); ++k)
            for (const auto& nu : partitions_of(k)) {
                const DiagElement got = xi_lambda(nu, DiagElement::unit(lam));
                for (const auto& mu : partitions_of(lam.size() - k))
                    CHECK(got.coeff(mu) == Rational(oracle::lr_count(mu, nu, lam)));
            }
    }
}

TEST_CASE("determinantal identities") {
    CHECK(jacobi_trudi_h(P("2,1")) == U("2,1"));
    CHECK(jacobi_trudi_e(P("2,1")) == U("2,1"));
    CHECK(giambelli(P("1")) == U("1"));
    for (const auto& lam : partitions_up_to(6)) {
        const DiagElement want = DiagElement::unit(lam);
        CHECK(jacobi_trudi_h(lam) == want);
        CHECK(jacobi_trudi_e(lam) == want);
        CHECK(giambelli(lam) == want);
    }
}

TEST_CASE("leibniz operator space") {
    for (int d = 2; d <= 4; ++d) {
        const LeibnizSpace sp = leibniz_operator_space(d);
        CHECK(sp.dimension() == 2);
        std::vector<Rational> xi_vec, nabla_vec;
        for (const auto& u : sp.unknowns) {
            xi_vec.emplace_back(1);
            nabla_vec.emplace_back(u.box.content());
        }
        Matrix m = sp.basis;
        m.push_back(xi_vec);
        m.push_back(nabla_vec);
        CHECK(matrix_rank(m) == 2);
    }
}

TEST_CASE("joint kernel of the two operators is trivial") {
    for (int d = 1; d <= 6; ++d) CHECK(key_lemma_kernel_dim(d) == 0);
}
