#include "doctest.h"

#include "skewmon/instances.hpp"
#include "skewmon/module.hpp"

using namespace skewmon;

TEST_CASE("check_algebra accepts valid algebras")
{
    CHECK(check_algebra(Algebra::field_unit(Field::fp(5))).ok());
    CHECK(check_algebra(Algebra::group_algebra_c2(Field::fp(3))).ok());
    CHECK(check_algebra(*algebra_f2xf2()).ok());
    CHECK(check_algebra(Algebra::enveloping(*algebra_f2xf2())).ok());
}

TEST_CASE("check_algebra names a corrupted structure constant")
{
    const Field f = Field::fp(2);
    Mat mult = algebra_f2xf2()->mult();
    mult.set_int(0, 1, 1); // e1*e2 gains a spurious component
    Algebra bad(f, 2, mult, algebra_f2xf2()->unit(), "bad");
    Report rep = check_algebra(bad);
    CHECK(!rep.ok());
    bool named = false;
    for (const auto& r : rep.records())
        if (r.status != CheckStatus::pass &&
            (r.axiom == "alg-assoc" || r.axiom == "alg-unit"))
            named = true;
    CHECK(named);
}

TEST_CASE("opposite and enveloping")
{
    Algebra k = Algebra::field_unit(Field::fp(3));
    CHECK(k.opposite().mult() == k.mult());
    // commutative algebra equals its opposite
    CHECK(algebra_f2xf2()->opposite().mult() == algebra_f2xf2()->mult());
    CHECK(Algebra::enveloping(*algebra_f2xf2()).dim() == 4);
    CHECK(check_algebra(Algebra::group_algebra_c2(Field::fp(3)).opposite()).ok());
}

TEST_CASE("tensor_over dimensions")
{
    const Field f2 = Field::fp(2);
    // over k the balancing relations vanish
    Obj a = make_obj(Bimodule::plain(f2, 2, "a"));
    Obj b = make_obj(Bimodule::plain(f2, 3, "b"));
    auto t = tensor_over(a, b);
    CHECK(t.ob->dim == 6);
    CHECK(t.proj == Mat::identity(f2, 6));

    // R (x)_R R ~ R
    AlgebraRef r = algebra_f2xf2();
    Obj reg = make_obj(Bimodule::regular(r));
    auto rr = tensor_over(reg, reg);
    CHECK(rr.ob->dim == 2);
    CHECK(check_bimodule(*rr.ob).ok());

    // H (x)_{R1} H for b4 has dimension 8 (rho2 on the left factor,
    // lambda1 on the right factor)
    auto b4 = instance_b4();
    Obj h_left = make_obj(Bimodule::bimodule(r, r, b4->lambda2, b4->rho2, "H-l"));
    Obj h_right = make_obj(Bimodule::bimodule(r, r, b4->lambda1, b4->rho1, "H-r"));
    auto hh = tensor_over(h_left, h_right);
    CHECK(hh.ob->dim == 8);
    CHECK(hh.ob->dim == b4->x2_proj.rows());
}

TEST_CASE("tensor_over projection is balanced and functorial on identities")
{
    AlgebraRef r = algebra_f2xf2();
    Obj reg = make_obj(Bimodule::regular(r));
    auto t = tensor_over(reg, reg);
    const Field f = r->field();
    Mat id2 = Mat::identity(f, 2);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(t.proj * Mat::kron(reg->ract[i], id2) == t.proj * Mat::kron(id2, reg->lact[i]));
    // identity (x) identity descends to the identity
    auto ind = factor_through_projection(t.proj * Mat::kron(id2, id2), t.proj, t.sect);
    REQUIRE(ind);
    CHECK(*ind == Mat::identity(f, t.ob->dim));
}

TEST_CASE("hom_basis dimensions and intertwining")
{
    const Field f2 = Field::fp(2);
    Obj k1 = make_obj(Bimodule::plain(f2, 1, "k"));
    CHECK(hom_basis(*k1, *k1, Side::both).size() == 1);

    AlgebraRef r = algebra_f2xf2();
    Obj reg = make_obj(Bimodule::regular(r));
    // right-module endomorphisms of R = left multiplications: dim 2
    auto endos = hom_basis(*reg, *reg, Side::right);
    CHECK(endos.size() == 2);
    for (const auto& h : endos)
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(h * reg->ract[i] == reg->ract[i] * h);

    // Hom_R(R, M) ~ M for a probe M (evaluation at 1)
    std::vector<Mat> ract = {Mat::from_rows(f2, {{1}}), Mat::from_rows(f2, {{0}})};
    Obj m = make_obj(Bimodule::right_module(r, ract, "simple1"));
    CHECK(hom_basis(*reg, *m, Side::right).size() == m->dim);
}

TEST_CASE("equalizer and coequalizer basics")
{
    const Field f3 = Field::fp(3);
    Obj k2 = make_obj(Bimodule::plain(f3, 2, "k2"));
    Mat id = Mat::identity(f3, 2), zero = Mat::zero(f3, 2, 2);
    {
        auto [eq, inc] = equalizer(k2, {id}, {id});
        CHECK(eq->dim == 2); // f = g: whole source
        CHECK((id * inc) == (inc)); // inclusion equalizes trivially
    }
    {
        auto [eq, inc] = equalizer(k2, {id}, {zero});
        CHECK(eq->dim == 0); // f = id, g = 0: zero object
    }
    {
        auto [q, proj] = coequalizer(k2, {id}, {id});
        CHECK(q->dim == 2);
        CHECK(proj == Mat::identity(f3, 2));
    }
    {
        auto [q, proj] = coequalizer(k2, {id}, {zero});
        CHECK(q->dim == 0);
    }
}

TEST_CASE("center of the t-action on H for b4 cross-checked by nullspace")
{
    auto b4 = instance_b4();
    // {h : h t(r) = t(r) h for all r}: lambda1 vs rho1
    std::vector<Mat> diffs;
    for (std::size_t i = 0; i < b4->rdim(); ++i)
        diffs.push_back(b4->lambda1[i] - b4->rho1[i]);
    Mat inc = Mat::vstack(diffs).kernel_basis();
    // independent route: rank of the stacked system directly
    Mat stacked = Mat::vstack(diffs);
    CHECK(inc.cols() == 4 - stacked.rank());
    // t(R) is central in R^e for commutative R, so the whole of H survives
    CHECK(inc.cols() == 4);
}

TEST_CASE("amalgamation M (x)_R H ->> M (x)_{R^e} H for b4")
{
    auto b4 = instance_b4();
    AlgebraRef r = b4->base;
    const Field f = b4->field();
    // M (x)_R H with H a left module via lambda1 (h t(r))
    Obj reg = make_obj(Bimodule::regular(r));
    Obj h_l1 = make_obj(Bimodule::bimodule(r, r, b4->lambda1, b4->rho2, "H"));
    auto mh = tensor_over(reg, h_l1);
    CHECK(mh.ob->dim == 4);
    // further coequalize rho1 against lambda2 on the H part
    std::vector<Mat> fs, gs;
    for (std::size_t i = 0; i < 2; ++i) {
        Mat top = mh.proj * Mat::kron(Mat::identity(f, 2), b4->rho1[i]) * mh.sect;
        Mat bot = mh.proj * Mat::kron(Mat::identity(f, 2), b4->lambda2[i]) * mh.sect;
        fs.push_back(top);
        gs.push_back(bot);
    }
    auto [q, proj] = coequalizer(mh.ob, fs, gs);
    CHECK(q->dim == 2);
}
