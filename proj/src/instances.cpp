#include "skewmon/instances.hpp"

namespace skewmon {

BialgebroidRef instance_b1()
{
    const Field f = Field::fp(2);
    AlgebraRef k = make_algebra(Algebra::field_unit(f));
    Mat delta = Mat::from_rows(f, {{1}}); // k -> k(x)k
    Mat counit = Mat::from_rows(f, {{1}});
    return std::make_shared<RightBialgebroid>(
        from_bialgebra(k, delta, counit, "b1"));
}

BialgebroidRef instance_b2()
{
    const Field f = Field::fp(3);
    AlgebraRef h = make_algebra(Algebra::group_algebra_c2(f));
    // Delta(1) = 1(x)1, Delta(g) = g(x)g; basis order (1(x)1, 1(x)g, g(x)1, g(x)g)
    Mat delta(f, 4, 2);
    delta.set_int(0, 0, 1);
    delta.set_int(3, 1, 1);
    Mat counit = Mat::from_rows(f, {{1, 1}});
    return std::make_shared<RightBialgebroid>(from_bialgebra(h, delta, counit, "b2"));
}

BialgebroidRef instance_b3()
{
    const Field f = Field::fp(3);
    // monoid algebra on {1, x} with x^2 = x
    Mat mult(f, 2, 4);
    mult.set_int(0, 0, 1); // 1*1 = 1
    mult.set_int(1, 1, 1); // 1*x = x
    mult.set_int(1, 2, 1); // x*1 = x
    mult.set_int(1, 3, 1); // x*x = x
    Mat unit(f, 2, 1);
    unit.set_int(0, 0, 1);
    AlgebraRef h = make_algebra(Algebra(f, 2, mult, unit, "k{1,x}"));
    Mat delta(f, 4, 2);
    delta.set_int(0, 0, 1); // Delta(1) = 1(x)1
    delta.set_int(3, 1, 1); // Delta(x) = x(x)x
    Mat counit = Mat::from_rows(f, {{1, 1}});
    return std::make_shared<RightBialgebroid>(from_bialgebra(h, delta, counit, "b3"));
}

AlgebraRef algebra_f2xf2()
{
    const Field f = Field::fp(2);
    Mat mult(f, 2, 4);
    mult.set_int(0, 0, 1); // e1*e1 = e1
    mult.set_int(1, 3, 1); // e2*e2 = e2
    Mat unit = Mat::from_rows(f, {{1}, {1}});
    return make_algebra(Algebra(f, 2, mult, unit, "F2xF2"));
}

BialgebroidRef instance_b4()
{
    return std::make_shared<RightBialgebroid>(enveloping_bialgebroid(algebra_f2xf2(), "b4"));
}

const char* to_string(BgdComponent c)
{
    switch (c) {
    case BgdComponent::base_mult: return "algebra.mult";
    case BgdComponent::s_map: return "bialgebroid.s";
    case BgdComponent::t_map: return "bialgebroid.t";
    case BgdComponent::total_mult: return "bialgebroid.mult";
    case BgdComponent::total_unit: return "bialgebroid.unit";
    case BgdComponent::delta: return "bialgebroid.Delta";
    default: return "bialgebroid.counit";
    }
}

RightBialgebroid mutate_entry(const RightBialgebroid& b, BgdComponent c, std::size_t i,
                              std::size_t j, std::int64_t bump)
{
    auto bump_mat = [&](Mat m) {
        Rat v = m.get(i % m.rows(), j % m.cols());
        m.set(i % m.rows(), j % m.cols(), v + Rat(bump));
        return m;
    };
    AlgebraRef base = b.base;
    AlgebraRef total = b.total;
    Mat s = b.s, t = b.t, counit = b.counit;
    Mat delta_hh = b.delta_lift; // equivalent presentation of delta
    switch (c) {
    case BgdComponent::base_mult:
        base = make_algebra(Algebra(b.field(), b.rdim(), bump_mat(b.base->mult()),
                                    b.base->unit(), b.base->name() + "'"));
        break;
    case BgdComponent::s_map: s = bump_mat(s); break;
    case BgdComponent::t_map: t = bump_mat(t); break;
    case BgdComponent::total_mult:
        total = make_algebra(Algebra(b.field(), b.hdim(), bump_mat(b.total->mult()),
                                     b.total->unit(), b.total->name() + "'"));
        break;
    case BgdComponent::total_unit:
        total = make_algebra(Algebra(b.field(), b.hdim(), b.total->mult(),
                                     bump_mat(b.total->unit()), b.total->name() + "'"));
        break;
    case BgdComponent::delta: delta_hh = bump_mat(delta_hh); break;
    case BgdComponent::counit: counit = bump_mat(counit); break;
    }
    return RightBialgebroid(base, total, s, t, delta_hh, counit, b.name + "-mut");
}

} // namespace skewmon
