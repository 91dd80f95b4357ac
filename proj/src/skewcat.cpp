#include "skewmon/skewcat.hpp"

#include <algorithm>
#include <functional>

namespace skewmon {

namespace {

std::string oname(const Obj& o) { return o->name.empty() ? "?" : o->name; }

// Run one equation under structural-error protection.
void guarded_eq(Report& rep, const SkewMonStructure&, const std::string& id,
                const std::string& axiom, const std::function<BimodMap()>& lhs,
                const std::function<BimodMap()>& rhs, const std::string& detail = "")
{
    try {
        BimodMap l = lhs(), r = rhs();
        if (l.src.get() != r.src.get() || l.dst.get() != r.dst.get()) {
            rep.add({id, axiom, CheckStatus::structural_error,
                     "endpoint mismatch between the two sides", std::nullopt});
            return;
        }
        CheckRecord rec{id, axiom, CheckStatus::pass, detail, std::nullopt};
        if (l.mat != r.mat) {
            rec.status = CheckStatus::fail;
            rec.witness = Witness{l.mat, r.mat};
        }
        rep.add(std::move(rec));
    } catch (const StructuralError& e) {
        rep.add({id, axiom, CheckStatus::structural_error, e.what(), std::nullopt});
    }
}

} // namespace

BimodMap SkewMonStructure::compose(const BimodMap& f, const BimodMap& g) const
{
    if (f.src.get() != g.dst.get())
        throw StructuralError("compose: endpoint mismatch (" + oname(f.src) + " vs " +
                              oname(g.dst) + ")");
    if (arrows_reversed())
        return {g.src, f.dst, g.mat * f.mat};
    return {g.src, f.dst, f.mat * g.mat};
}

BimodMap SkewMonStructure::identity(const Obj& a) const
{
    return {a, a, Mat::identity(a->field(), a->dim)};
}

Obj SkewMonStructure::cached_ob(const Obj& a, const Obj& b, const std::function<Obj()>& build) const
{
    const std::pair<const void*, const void*> key{a.get(), b.get()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = ob_cache_.find(key);
        if (it != ob_cache_.end())
            return it->second;
    }
    Obj built = build();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = ob_cache_.emplace(key, built);
    return it->second;
}

ProbeSet default_probes(const SkewMonStructure& s, const std::vector<Obj>& extras, Side hom_side,
                        std::size_t max_maps)
{
    ProbeSet p;
    Obj r = s.unit();
    p.objects.push_back(r);
    // R^2 = R (+) R
    {
        Bimodule sq;
        sq.left = r->left;
        sq.right = r->right;
        sq.dim = 2 * r->dim;
        for (const auto& a : r->lact)
            sq.lact.push_back(a.direct_sum(a));
        for (const auto& a : r->ract)
            sq.ract.push_back(a.direct_sum(a));
        sq.name = "R2";
        p.objects.push_back(make_obj(std::move(sq)));
    }
    for (const auto& e : extras) {
        bool dup = false;
        for (const auto& o : p.objects)
            dup = dup || o.get() == e.get();
        if (!dup)
            p.objects.push_back(e);
    }
    for (const auto& a : p.objects) {
        for (const auto& b : p.objects) {
            if (p.maps.size() >= max_maps)
                return p;
            for (auto& h : hom_basis(*a, *b, hom_side)) {
                if (p.maps.size() >= max_maps)
                    break;
                if (s.arrows_reversed())
                    p.maps.push_back({b, a, std::move(h)}); // arrow b -> a with underlying a<-b
                else
                    p.maps.push_back({a, b, std::move(h)});
            }
        }
    }
    return p;
}

Report check_smc(const SkewMonStructure& s, const ProbeSet& p, const CheckOptions& opt)
{
    Report rep;
    const Obj r = s.unit();
    auto id = [&](const Obj& o) { return s.identity(o); };

    // SMC5 once
    guarded_eq(rep, s, "SMC5", "SMC5", [&] { return s.compose(s.eps(r), s.eta(r)); },
               [&] { return id(r); });

    for (const auto& m : p.objects)
        for (const auto& n : p.objects) {
            const std::string tuple = "[" + oname(m) + "," + oname(n) + "]";
            guarded_eq(rep, s, "SMC2" + tuple, "SMC2",
                       [&] { return s.compose(s.gamma(r, m, n), s.eta(s.ob(m, n))); },
                       [&] { return s.mor(s.eta(m), id(n)); });
            guarded_eq(rep, s, "SMC3" + tuple, "SMC3",
                       [&] { return s.compose(s.eps(s.ob(m, n)), s.gamma(m, n, r)); },
                       [&] { return s.mor(id(m), s.eps(n)); });
            guarded_eq(rep, s, "SMC4" + tuple, "SMC4",
                       [&] {
                           return s.compose(s.mor(s.eps(m), id(n)),
                                            s.compose(s.gamma(m, r, n), s.mor(id(m), s.eta(n))));
                       },
                       [&] { return id(s.ob(m, n)); });
        }

    if (opt.pentagon_all_tuples) {
        for (const auto& k : p.objects)
            for (const auto& l : p.objects)
                for (const auto& m : p.objects)
                    for (const auto& n : p.objects) {
                        const std::string tuple = "[" + oname(k) + "," + oname(l) + "," +
                                                  oname(m) + "," + oname(n) + "]";
                        guarded_eq(
                            rep, s, "SMC1" + tuple, "SMC1",
                            [&] {
                                return s.compose(
                                    s.mor(s.gamma(k, l, m), id(n)),
                                    s.compose(s.gamma(k, s.ob(l, m), n),
                                              s.mor(id(k), s.gamma(l, m, n))));
                            },
                            [&] {
                                return s.compose(s.gamma(s.ob(k, l), m, n),
                                                 s.gamma(k, l, s.ob(m, n)));
                            });
                    }
    }

    if (opt.bifunctoriality) {
        for (const auto& m : p.objects)
            for (const auto& n : p.objects)
                guarded_eq(rep, s, "bifunctor-id[" + oname(m) + "," + oname(n) + "]",
                           "bifunctor-id", [&] { return s.mor(id(m), id(n)); },
                           [&] { return id(s.ob(m, n)); });
        std::size_t done = 0;
        for (const auto& f : p.maps)
            for (const auto& f2 : p.maps) {
                if (f2.src.get() != f.dst.get())
                    continue;
                for (const auto& g : p.maps)
                    for (const auto& g2 : p.maps) {
                        if (g2.src.get() != g.dst.get() || done >= 8)
                            continue;
                        ++done;
                        guarded_eq(rep, s, "bifunctor-comp[" + std::to_string(done) + "]",
                                   "bifunctor-comp",
                                   [&] { return s.mor(s.compose(f2, f), s.compose(g2, g)); },
                                   [&] { return s.compose(s.mor(f2, g2), s.mor(f, g)); });
                    }
            }
    }

    if (opt.naturality) {
        std::size_t idx = 0;
        for (const auto& f : p.maps) {
            const std::string tag = "[" + std::to_string(idx++) + "]";
            const Obj a = f.src, b = f.dst;
            guarded_eq(rep, s, "natural-gamma-1" + tag, "natural-gamma",
                       [&] { return s.compose(s.gamma(b, r, r), s.mor(f, id(s.ob(r, r)))); },
                       [&] { return s.compose(s.mor(s.mor(f, id(r)), id(r)), s.gamma(a, r, r)); });
            guarded_eq(rep, s, "natural-gamma-2" + tag, "natural-gamma",
                       [&] { return s.compose(s.gamma(r, b, r), s.mor(id(r), s.mor(f, id(r)))); },
                       [&] { return s.compose(s.mor(s.mor(id(r), f), id(r)), s.gamma(r, a, r)); });
            guarded_eq(rep, s, "natural-gamma-3" + tag, "natural-gamma",
                       [&] { return s.compose(s.gamma(r, r, b), s.mor(id(r), s.mor(id(r), f))); },
                       [&] { return s.compose(s.mor(id(s.ob(r, r)), f), s.gamma(r, r, a)); });
            guarded_eq(rep, s, "natural-eta" + tag, "natural-eta",
                       [&] { return s.compose(s.eta(b), f); },
                       [&] { return s.compose(s.mor(id(r), f), s.eta(a)); });
            guarded_eq(rep, s, "natural-eps" + tag, "natural-eps",
                       [&] { return s.compose(f, s.eps(a)); },
                       [&] { return s.compose(s.eps(b), s.mor(f, id(r))); });
        }
    }
    return rep;
}

CanonicalMonad canonical_monad(const StructureRef& s)
{
    CanonicalMonad t;
    t.ob = [s](const Obj& m) { return s->ob(s->unit(), m); };
    t.map = [s](const BimodMap& f) { return s->mor(s->identity(s->unit()), f); };
    t.mu = [s](const Obj& m) {
        const Obj r = s->unit();
        return s->compose(s->mor(s->eps(r), s->identity(m)), s->gamma(r, r, m));
    };
    t.eta = [s](const Obj& m) { return s->eta(m); };
    return t;
}

CanonicalComonad canonical_comonad(const StructureRef& s)
{
    CanonicalComonad q;
    q.ob = [s](const Obj& m) { return s->ob(m, s->unit()); };
    q.map = [s](const BimodMap& f) { return s->mor(f, s->identity(s->unit())); };
    q.delta = [s](const Obj& m) {
        const Obj r = s->unit();
        return s->compose(s->gamma(m, r, r), s->mor(s->identity(m), s->eta(r)));
    };
    q.eps = [s](const Obj& m) { return s->eps(m); };
    return q;
}

BimodMap canonical_mu(const SkewMonStructure& s, const Obj& m)
{
    const Obj r = s.unit();
    return s.compose(s.mor(s.eps(r), s.identity(m)), s.gamma(r, r, m));
}

BimodMap canonical_delta(const SkewMonStructure& s, const Obj& m)
{
    const Obj r = s.unit();
    return s.compose(s.gamma(m, r, r), s.mor(s.identity(m), s.eta(r)));
}

namespace {
BimodMap mu_at(const SkewMonStructure& s, const Obj& m) { return canonical_mu(s, m); }
BimodMap delta_at(const SkewMonStructure& s, const Obj& m) { return canonical_delta(s, m); }
} // namespace

Report check_monad_laws(const SkewMonStructure& s, const ProbeSet& p)
{
    Report rep;
    const Obj r = s.unit();
    for (const auto& n : p.objects) {
        const std::string tag = "[" + oname(n) + "]";
        const Obj tn = s.ob(r, n);
        guarded_eq(rep, s, "SMC10" + tag, "SMC10",
                   [&] { return s.compose(mu_at(s, n), s.eta(tn)); },
                   [&] { return s.identity(tn); });
        guarded_eq(rep, s, "SMC11" + tag, "SMC11",
                   [&] { return s.compose(mu_at(s, n), s.mor(s.identity(r), s.eta(n))); },
                   [&] { return s.identity(tn); });
        guarded_eq(rep, s, "monad-assoc" + tag, "monad-assoc",
                   [&] { return s.compose(mu_at(s, n), s.mor(s.identity(r), mu_at(s, n))); },
                   [&] { return s.compose(mu_at(s, n), mu_at(s, tn)); });
    }
    return rep;
}

Report check_comonad_laws(const SkewMonStructure& s, const ProbeSet& p)
{
    Report rep;
    const Obj r = s.unit();
    for (const auto& m : p.objects) {
        const std::string tag = "[" + oname(m) + "]";
        const Obj qm = s.ob(m, r);
        guarded_eq(rep, s, "SMC12" + tag, "SMC12",
                   [&] { return s.compose(s.eps(qm), delta_at(s, m)); },
                   [&] { return s.identity(qm); });
        guarded_eq(rep, s, "SMC13" + tag, "SMC13",
                   [&] { return s.compose(s.mor(s.eps(m), s.identity(r)), delta_at(s, m)); },
                   [&] { return s.identity(qm); });
        guarded_eq(rep, s, "comonad-coassoc" + tag, "comonad-coassoc",
                   [&] { return s.compose(s.mor(delta_at(s, m), s.identity(r)), delta_at(s, m)); },
                   [&] { return s.compose(delta_at(s, qm), delta_at(s, m)); });
    }
    return rep;
}

BimodMap distributive_law_chi(const SkewMonStructure& s, const Obj& m)
{
    const Obj r = s.unit();
    return s.gamma(r, m, r);
}

Report check_distributive_law(const SkewMonStructure& s, const ProbeSet& p)
{
    Report rep;
    const Obj r = s.unit();
    auto id = [&](const Obj& o) { return s.identity(o); };
    for (const auto& m : p.objects) {
        const std::string tag = "[" + oname(m) + "]";
        const Obj qm = s.ob(m, r), tm = s.ob(r, m);
        guarded_eq(rep, s, "SMC14" + tag, "SMC14",
                   [&] {
                       return s.compose(
                           s.mor(mu_at(s, m), id(r)),
                           s.compose(distributive_law_chi(s, tm),
                                     s.mor(id(r), distributive_law_chi(s, m))));
                   },
                   [&] { return s.compose(distributive_law_chi(s, m), mu_at(s, qm)); });
        guarded_eq(rep, s, "SMC15" + tag, "SMC15",
                   [&] {
                       return s.compose(
                           s.mor(distributive_law_chi(s, m), id(r)),
                           s.compose(distributive_law_chi(s, qm), s.mor(id(r), delta_at(s, m))));
                   },
                   [&] { return s.compose(delta_at(s, tm), distributive_law_chi(s, m)); });
        guarded_eq(rep, s, "SMC16" + tag, "SMC16",
                   [&] { return s.compose(distributive_law_chi(s, m), s.eta(qm)); },
                   [&] { return s.mor(s.eta(m), id(r)); });
        guarded_eq(rep, s, "SMC17" + tag, "SMC17",
                   [&] { return s.compose(s.eps(tm), distributive_law_chi(s, m)); },
                   [&] { return s.mor(id(r), s.eps(m)); });
    }
    return rep;
}

BimodMap delta2(const SkewMonStructure& s, const Obj& k, const Obj& l)
{
    const Obj r = s.unit();
    return s.compose(s.gamma(k, r, l), s.mor(s.identity(k), s.eta(l)));
}

BimodMap mu2(const SkewMonStructure& s, const Obj& k, const Obj& l)
{
    const Obj r = s.unit();
    return s.compose(s.mor(s.eps(k), s.identity(l)), s.gamma(k, r, l));
}

BimodMap sigma3(const SkewMonStructure& s, const Obj& l, const Obj& m, const Obj& n)
{
    const Obj r = s.unit();
    return s.compose(
        s.mor(s.identity(s.ob(l, m)), s.eta(n)),
        s.compose(s.gamma(l, m, n), s.mor(s.eps(l), s.identity(s.ob(m, n)))));
}

Report check_two_arg_maps(const SkewMonStructure& s, const ProbeSet& p)
{
    Report rep;
    const Obj r = s.unit();
    auto id = [&](const Obj& o) { return s.identity(o); };
    for (const auto& k : p.objects)
        for (const auto& l : p.objects) {
            const std::string tag = "[" + oname(k) + "," + oname(l) + "]";
            const Obj qk = s.ob(k, r), tl = s.ob(r, l);
            guarded_eq(rep, s, "delta2-coassoc" + tag, "delta2-coassoc",
                       [&] { return s.compose(delta2(s, qk, l), delta2(s, k, l)); },
                       [&] { return s.compose(s.mor(delta_at(s, k), id(l)), delta2(s, k, l)); });
            guarded_eq(rep, s, "delta2-counit" + tag, "delta2-counit",
                       [&] { return s.compose(s.mor(s.eps(k), id(l)), delta2(s, k, l)); },
                       [&] { return id(s.ob(k, l)); });
            guarded_eq(rep, s, "mu2-assoc" + tag, "mu2-assoc",
                       [&] { return s.compose(mu2(s, k, l), mu2(s, k, tl)); },
                       [&] { return s.compose(mu2(s, k, l), s.mor(id(k), mu_at(s, l))); });
            guarded_eq(rep, s, "mu2-unit" + tag, "mu2-unit",
                       [&] { return s.compose(mu2(s, k, l), s.mor(id(k), s.eta(l))); },
                       [&] { return id(s.ob(k, l)); });
        }
    return rep;
}

Report check_galois_identity(const SkewMonStructure& s, const ProbeSet& p)
{
    Report rep;
    const Obj r = s.unit();
    for (const auto& m : p.objects)
        for (const auto& n : p.objects) {
            const std::string tag = "[" + oname(m) + "," + oname(n) + "]";
            const Obj qm = s.ob(m, r), tn = s.ob(r, n);
            guarded_eq(rep, s, "galois-identity" + tag, "galois-identity",
                       [&] { return s.compose(mu2(s, qm, n), delta2(s, m, tn)); },
                       [&] { return s.gamma(m, r, n); });
        }
    return rep;
}

CompatibilityResult check_compatibility_diagram(const SkewMonStructure& s)
{
    CompatibilityResult res;
    const Obj r = s.unit();
    auto id = [&](const Obj& o) { return s.identity(o); };
    const Obj rr = s.ob(r, r);
    const Obj trr = s.ob(r, rr);       // R(*) (R(*)R)
    const Obj q2r = s.ob(rr, r);       // (R(*)R)(*)R
    guarded_eq(res.report, s, "compat-hexagon", "compat-hexagon",
               [&] { return s.compose(delta_at(s, r), mu_at(s, r)); },
               [&] {
                   BimodMap inner = s.mor(id(r), delta_at(s, r));
                   BimodMap d2 = delta2(s, r, q2r);
                   BimodMap sg = sigma3(s, r, rr, r);
                   BimodMap m2 = mu2(s, trr, r);
                   BimodMap outer = s.mor(mu_at(s, r), id(r));
                   return s.compose(outer, s.compose(m2, s.compose(sg, s.compose(d2, inner))));
               });
    guarded_eq(res.report, s, "compat-second-row", "compat-second-row",
               [&] { return s.compose(delta_at(s, r), mu_at(s, r)); },
               [&] {
                   return s.compose(s.mor(mu_at(s, r), id(r)),
                                    s.compose(s.gamma(r, rr, r), s.mor(id(r), delta_at(s, r))));
               });
    // Naive-coherence witness: compare delta_R . mu_R with gamma_{R,R,R}.
    try {
        BimodMap lhs = s.compose(delta_at(s, r), mu_at(s, r));
        BimodMap rhs = s.gamma(r, r, r);
        res.delta_mu_equals_gamma = s.map_eq(lhs, rhs);
        res.report.add_pass("coherence-witness", "coherence-witness",
                            res.delta_mu_equals_gamma ? "delta_R.mu_R == gamma_RRR"
                                                      : "delta_R.mu_R != gamma_RRR");
    } catch (const StructuralError& e) {
        res.report.add({"coherence-witness", "coherence-witness", CheckStatus::structural_error,
                        e.what(), std::nullopt});
    }
    return res;
}

Report check_skewmon_functor(const SkewMonFunctorData& f, const ProbeSet& p)
{
    Report rep;
    const SkewMonStructure& m = *f.src;
    const SkewMonStructure& n = *f.dst;
    const Obj r = m.unit();
    auto idn = [&](const Obj& o) { return n.identity(o); };
    for (const auto& x : p.objects)
        for (const auto& y : p.objects)
            for (const auto& z : p.objects) {
                const std::string tag = "[" + oname(x) + "," + oname(y) + "," + oname(z) + "]";
                guarded_eq(rep, n, "smf1" + tag, "smf1",
                           [&] {
                               return n.compose(
                                   f.map(m.gamma(x, y, z)),
                                   n.compose(f.f2(x, m.ob(y, z)),
                                             n.mor(idn(f.ob(x)), f.f2(y, z))));
                           },
                           [&] {
                               return n.compose(
                                   f.f2(m.ob(x, y), z),
                                   n.compose(n.mor(f.f2(x, y), idn(f.ob(z))),
                                             n.gamma(f.ob(x), f.ob(y), f.ob(z))));
                           });
            }
    for (const auto& x : p.objects) {
        const std::string tag = "[" + oname(x) + "]";
        guarded_eq(rep, n, "smf2" + tag, "smf2",
                   [&] {
                       return n.compose(f.f2(r, x),
                                        n.compose(n.mor(f.f0, idn(f.ob(x))), n.eta(f.ob(x))));
                   },
                   [&] { return f.map(m.eta(x)); });
        guarded_eq(rep, n, "smf3" + tag, "smf3",
                   [&] {
                       return n.compose(f.map(m.eps(x)),
                                        n.compose(f.f2(x, r), n.mor(idn(f.ob(x)), f.f0)));
                   },
                   [&] { return n.eps(f.ob(x)); });
    }
    return rep;
}

Report check_skew_opmonoidal_functor(const SkewOpmonFunctorData& f, const ProbeSet& p)
{
    Report rep;
    const SkewMonStructure& m = *f.src;
    const SkewMonStructure& n = *f.dst;
    const Obj r = m.unit();
    auto idn = [&](const Obj& o) { return n.identity(o); };
    for (const auto& x : p.objects)
        for (const auto& y : p.objects)
            for (const auto& z : p.objects) {
                const std::string tag = "[" + oname(x) + "," + oname(y) + "," + oname(z) + "]";
                guarded_eq(rep, n, "opsmf1" + tag, "opsmf1",
                           [&] {
                               return n.compose(
                                   n.gamma(f.ob(x), f.ob(y), f.ob(z)),
                                   n.compose(n.mor(idn(f.ob(x)), f.f2(y, z)),
                                             f.f2(x, m.ob(y, z))));
                           },
                           [&] {
                               return n.compose(
                                   n.mor(f.f2(x, y), idn(f.ob(z))),
                                   n.compose(f.f2(m.ob(x, y), z), f.map(m.gamma(x, y, z))));
                           });
            }
    for (const auto& x : p.objects) {
        const std::string tag = "[" + oname(x) + "]";
        guarded_eq(rep, n, "opsmf2" + tag, "opsmf2",
                   [&] {
                       return n.compose(n.mor(f.f0, idn(f.ob(x))),
                                        n.compose(f.f2(r, x), f.map(m.eta(x))));
                   },
                   [&] { return n.eta(f.ob(x)); });
        guarded_eq(rep, n, "opsmf3" + tag, "opsmf3",
                   [&] {
                       return n.compose(n.eps(f.ob(x)),
                                        n.compose(n.mor(idn(f.ob(x)), f.f0), f.f2(x, r)));
                   },
                   [&] { return f.map(m.eps(x)); });
    }
    return rep;
}

Report check_monoidal_nat(const std::function<BimodMap(const Obj&)>& nu,
                          const SkewMonFunctorData& f, const SkewMonFunctorData& g,
                          const ProbeSet& p)
{
    Report rep;
    const SkewMonStructure& m = *f.src;
    const SkewMonStructure& n = *f.dst;
    for (const auto& x : p.objects) {
        // naturality on probe maps
        for (const auto& t : p.maps) {
            if (t.src.get() != x.get())
                continue;
            guarded_eq(rep, n, "mnat-natural[" + oname(t.src) + "->" + oname(t.dst) + "]",
                       "mnat-natural", [&] { return n.compose(nu(t.dst), f.map(t)); },
                       [&] { return n.compose(g.map(t), nu(t.src)); });
        }
        for (const auto& y : p.objects) {
            const std::string tag = "[" + oname(x) + "," + oname(y) + "]";
            guarded_eq(rep, n, "mnat1" + tag, "mnat1",
                       [&] { return n.compose(nu(m.ob(x, y)), f.f2(x, y)); },
                       [&] { return n.compose(g.f2(x, y), n.mor(nu(x), nu(y))); });
        }
    }
    guarded_eq(rep, n, "mnat2", "mnat2", [&] { return n.compose(nu(m.unit()), f.f0); },
               [&] { return g.f0; });
    return rep;
}

MonadMorphism monad_morphism_from_functor(const SkewMonFunctorData& f, const ProbeSet& p)
{
    MonadMorphism out;
    const SkewMonStructure* msrc = f.src;
    const SkewMonStructure* mdst = f.dst;
    auto fob = f.ob;
    auto fmap = f.map;
    auto f2 = f.f2;
    BimodMap f0 = f.f0;
    out.phi = [msrc, mdst, fob, f2, f0](const Obj& m) {
        const Obj r = msrc->unit();
        return mdst->compose(f2(r, m), mdst->mor(f0, mdst->identity(fob(m))));
    };
    const SkewMonStructure& n = *mdst;
    const Obj rs = msrc->unit();
    for (const auto& m : p.objects) {
        const std::string tag = "[" + oname(m) + "]";
        const Obj tm = msrc->ob(rs, m);
        guarded_eq(out.checks, n, "monmor-mult" + tag, "monmor-mult",
                   [&] {
                       return n.compose(fmap(mu_at(*msrc, m)),
                                        n.compose(out.phi(tm),
                                                  n.mor(n.identity(n.unit()), out.phi(m))));
                   },
                   [&] { return n.compose(out.phi(m), mu_at(n, fob(m))); });
        guarded_eq(out.checks, n, "monmor-unit" + tag, "monmor-unit",
                   [&] { return fmap(msrc->eta(m)); },
                   [&] { return n.compose(out.phi(m), n.eta(fob(m))); });
    }
    return out;
}

MonadMorphism comonad_morphism_from_opfunctor(const SkewOpmonFunctorData& f, const ProbeSet& p)
{
    MonadMorphism out;
    const SkewMonStructure* msrc = f.src;
    const SkewMonStructure* mdst = f.dst;
    auto fob = f.ob;
    auto fmap = f.map;
    auto f2 = f.f2;
    BimodMap f0 = f.f0;
    out.phi = [msrc, mdst, fob, f2, f0](const Obj& m) {
        return mdst->compose(mdst->mor(mdst->identity(fob(m)), f0), f2(m, msrc->unit()));
    };
    const SkewMonStructure& n = *mdst;
    const Obj rs = msrc->unit();
    for (const auto& m : p.objects) {
        const std::string tag = "[" + oname(m) + "]";
        const Obj qm = msrc->ob(m, rs);
        guarded_eq(out.checks, n, "comonmor-comult" + tag, "comonmor-comult",
                   [&] {
                       return n.compose(n.mor(out.phi(m), n.identity(n.unit())),
                                        n.compose(out.phi(qm), fmap(delta_at(*msrc, m))));
                   },
                   [&] { return n.compose(delta_at(n, fob(m)), out.phi(m)); });
        guarded_eq(out.checks, n, "comonmor-counit" + tag, "comonmor-counit",
                   [&] { return n.compose(n.eps(fob(m)), out.phi(m)); },
                   [&] { return fmap(msrc->eps(m)); });
    }
    return out;
}

namespace {

class OpRevStructure : public SkewMonStructure {
public:
    explicit OpRevStructure(StructureRef base) : base_(std::move(base)) {}

    Obj unit() const override { return base_->unit(); }
    Obj ob(const Obj& a, const Obj& b) const override { return base_->ob(b, a); }

    BimodMap mor(const BimodMap& f, const BimodMap& g) const override
    {
        BimodMap uf{f.dst, f.src, f.mat}; // underlying arrows of the base category
        BimodMap ug{g.dst, g.src, g.mat};
        BimodMap r = base_->mor(ug, uf);
        return {r.dst, r.src, r.mat};
    }

    BimodMap gamma(const Obj& l, const Obj& m, const Obj& n) const override
    {
        BimodMap g = base_->gamma(n, m, l);
        return {g.dst, g.src, g.mat};
    }

    BimodMap eta(const Obj& m) const override
    {
        BimodMap e = base_->eps(m);
        return {e.dst, e.src, e.mat};
    }

    BimodMap eps(const Obj& m) const override
    {
        BimodMap e = base_->eta(m);
        return {e.dst, e.src, e.mat};
    }

    BimodMap compose(const BimodMap& f, const BimodMap& g) const override
    {
        if (f.src.get() != g.dst.get())
            throw StructuralError("dual compose: endpoint mismatch");
        BimodMap uf{f.dst, f.src, f.mat};
        BimodMap ug{g.dst, g.src, g.mat};
        BimodMap r = base_->compose(ug, uf);
        return {r.dst, r.src, r.mat};
    }

    bool arrows_reversed() const override { return !base_->arrows_reversed(); }

private:
    StructureRef base_;
};

} // namespace

StructureRef dual_oprev(const StructureRef& s) { return std::make_shared<OpRevStructure>(s); }

BimodMap dualize_map(const BimodMap& f) { return {f.dst, f.src, f.mat}; }

ProbeSet dualize_probes(const ProbeSet& p)
{
    ProbeSet out;
    out.objects = p.objects;
    for (const auto& f : p.maps)
        out.maps.push_back(dualize_map(f));
    return out;
}

TensorStructure::TensorStructure(AlgebraRef a) : alg_(std::move(a))
{
    unit_ = make_obj(Bimodule::regular(alg_, "R"));
}

const TensorStructure::Prod& TensorStructure::product(const Obj& a, const Obj& b) const
{
    const std::pair<const void*, const void*> key{a.get(), b.get()};
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = prod_cache_.find(key);
    if (it != prod_cache_.end())
        return it->second;
    auto t = tensor_over(a, b);
    auto [it2, inserted] =
        prod_cache_.emplace(key, Prod{t.ob, std::move(t.proj), std::move(t.sect)});
    return it2->second;
}

Obj TensorStructure::ob(const Obj& a, const Obj& b) const { return product(a, b).ob; }
Mat TensorStructure::proj(const Obj& a, const Obj& b) const { return product(a, b).proj; }
Mat TensorStructure::sect(const Obj& a, const Obj& b) const { return product(a, b).sect; }

BimodMap TensorStructure::mor(const BimodMap& f, const BimodMap& g) const
{
    // module maps always descend to the balanced quotient
    const Prod& src = product(f.src, g.src);
    const Prod& dst = product(f.dst, g.dst);
    Mat y = dst.proj.mul_kron_id(f.mat, g.dst->dim);
    y = y.mul_id_kron(f.src->dim, g.mat);
    return {src.ob, dst.ob, y * src.sect};
}

BimodMap TensorStructure::gamma(const Obj& l, const Obj& m, const Obj& n) const
{
    const Prod& mn = product(m, n);
    const Prod& l_mn = product(l, mn.ob);
    const Prod& lm = product(l, m);
    const Prod& lm_n = product(lm.ob, n);
    // both sides are quotients of the triple Kronecker space
    Mat pi_right = l_mn.proj.mul_id_kron(l->dim, mn.proj);
    Mat section_right = Mat::kron(Mat::identity(l->field(), l->dim), mn.sect) * l_mn.sect;
    Mat pi_left = lm_n.proj.mul_kron_id(lm.proj, n->dim);
    auto g = factor_through_projection(pi_left, pi_right, section_right);
    if (!g)
        throw StructuralError("TensorStructure::gamma: associator failed to factor");
    return {l_mn.ob, lm_n.ob, std::move(*g)};
}

BimodMap TensorStructure::lunit(const Obj& m) const
{
    const Prod& rm = product(unit_, m);
    const Field f = m->field();
    Mat act(f, m->dim, unit_->dim * m->dim);
    for (std::size_t i = 0; i < unit_->dim; ++i)
        for (std::size_t j = 0; j < m->dim; ++j) {
            Mat c = m->lact[i] * Mat::basis_col(f, m->dim, j);
            for (std::size_t t = 0; t < m->dim; ++t)
                act.set(t, i * m->dim + j, c.get(t, 0));
        }
    auto g = factor_through_projection(act, rm.proj, rm.sect);
    if (!g)
        throw StructuralError("TensorStructure::lunit: action not balanced");
    return {rm.ob, m, std::move(*g)};
}

BimodMap TensorStructure::eta(const Obj& m) const
{
    BimodMap lu = lunit(m);
    auto inv = lu.mat.inverse();
    if (!inv)
        throw StructuralError("TensorStructure::eta: left unitor is not invertible");
    return {m, lu.src, std::move(*inv)};
}

BimodMap TensorStructure::eps(const Obj& m) const
{
    const Prod& mr = product(m, unit_);
    const Field f = m->field();
    Mat act(f, m->dim, m->dim * unit_->dim);
    for (std::size_t j = 0; j < m->dim; ++j)
        for (std::size_t i = 0; i < unit_->dim; ++i) {
            Mat c = m->ract[i] * Mat::basis_col(f, m->dim, j);
            for (std::size_t t = 0; t < m->dim; ++t)
                act.set(t, j * unit_->dim + i, c.get(t, 0));
        }
    auto g = factor_through_projection(act, mr.proj, mr.sect);
    if (!g)
        throw StructuralError("TensorStructure::eps: action not balanced");
    return {mr.ob, m, std::move(*g)};
}

BimodMap TensorStructure::runit_inv(const Obj& m) const
{
    BimodMap ru = eps(m);
    auto inv = ru.mat.inverse();
    if (!inv)
        throw StructuralError("TensorStructure::runit_inv: right unitor is not invertible");
    return {m, ru.src, std::move(*inv)};
}

} // namespace skewmon
