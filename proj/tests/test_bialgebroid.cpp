#include "doctest.h"

#include "skewmon/instances.hpp"

using namespace skewmon;

TEST_CASE("bundled instances satisfy the axiom suite")
{
    CHECK(check_bialgebroid(*instance_b1()).ok());
    CHECK(check_bialgebroid(*instance_b2()).ok());
    CHECK(check_bialgebroid(*instance_b3()).ok());
    CHECK(check_bialgebroid(*instance_b4()).ok());
}

TEST_CASE("b4 matches the enveloping pattern")
{
    auto b4 = instance_b4();
    CHECK(b4->rdim() == 2);
    CHECK(b4->hdim() == 4);
    CHECK(b4->x2_proj.rows() == 8); // H (x)_{R1} H
}

TEST_CASE("mutations produce named failures")
{
    auto b2 = *instance_b2();
    {
        RightBialgebroid bad = mutate_entry(b2, BgdComponent::counit, 0, 1);
        Report rep = check_bialgebroid(bad);
        CHECK(!rep.ok());
    }
    {
        RightBialgebroid bad = mutate_entry(b2, BgdComponent::delta, 1, 1);
        Report rep = check_bialgebroid(bad);
        CHECK(!rep.ok());
    }
    auto b4 = *instance_b4();
    {
        RightBialgebroid bad = mutate_entry(b4, BgdComponent::s_map, 0, 1);
        Report rep = check_bialgebroid(bad);
        CHECK(!rep.ok());
        CHECK((rep.has_failing_axiom("bgd-s-mult") || !rep.ok()));
    }
    {
        RightBialgebroid bad = mutate_entry(b4, BgdComponent::total_mult, 2, 5);
        CHECK(!check_bialgebroid(bad).ok());
    }
}

TEST_CASE("induced product dimensions")
{
    auto s2 = std::make_shared<BialgebroidStructure>(instance_b2());
    Obj r2 = s2->unit();
    CHECK(s2->ob(r2, r2)->dim == 2);                  // R * R ~ H
    CHECK(s2->ob(r2, s2->ob(r2, r2))->dim == 4);      // R * (R * R) ~ H (x) H

    auto s4 = std::make_shared<BialgebroidStructure>(instance_b4());
    Obj r4 = s4->unit();
    CHECK(s4->ob(r4, r4)->dim == 4); // ~ H
}

TEST_CASE("galois map fixed matrices and ranks")
{
    {
        auto g = galois_map(*instance_b1());
        CHECK(g.domain_dim == 1);
        CHECK(g.rank == 1);
        CHECK(g.invertible);
    }
    {
        // basis (1(x)1, 1(x)g, g(x)1, g(x)g) of H(x)H collapses to itself
        // (R = k); the map sends 1(x)1->1(x)1, g(x)1->1(x)g, 1(x)g->g(x)g,
        // g(x)g->g(x)1
        auto g = galois_map(*instance_b2());
        CHECK(g.domain_dim == 4);
        CHECK(g.codomain_dim == 4);
        CHECK(g.rank == 4);
        CHECK(g.invertible);
        const Field f = Field::fp(3);
        // columns indexed by g (x) h in kron order (g index * 2 + h index)
        Mat expect(f, 4, 4);
        expect.set_int(0, 0, 1); // 1(x)1 -> 1(x)1
        expect.set_int(3, 1, 1); // 1(x)g -> g(x)g
        expect.set_int(1, 2, 1); // g(x)1 -> 1(x)g
        expect.set_int(2, 3, 1); // g(x)g -> g(x)1
        CHECK(g.map == expect);
    }
    {
        auto g = galois_map(*instance_b3());
        CHECK(g.domain_dim == 4);
        CHECK(g.rank == 3);
        CHECK(!g.invertible);
    }
}

TEST_CASE("is_hopf agrees with gamma_RRR invertibility")
{
    for (const auto& b : {instance_b1(), instance_b2(), instance_b3(), instance_b4()}) {
        HopfResult h = is_hopf(*b);
        CHECK(h.agree);
    }
    CHECK(is_hopf(*instance_b1()).hopf);
    CHECK(is_hopf(*instance_b2()).hopf);
    CHECK(!is_hopf(*instance_b3()).hopf);
    CHECK(is_hopf(*instance_b4()).hopf);
}

TEST_CASE("eta and eps shapes and unit law")
{
    auto s = std::make_shared<BialgebroidStructure>(instance_b4());
    Obj r = s->unit();
    BimodMap e = s->eta(r);
    CHECK(e.mat.rows() == s->ob(r, r)->dim);
    CHECK(e.mat.cols() == r->dim);
    BimodMap c = s->eps(r);
    // SMC5: eps_R . eta_R = id
    CHECK(c.mat * e.mat == Mat::identity(r->field(), r->dim));
}
