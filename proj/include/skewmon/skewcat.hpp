#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "skewmon/module.hpp"
#include "skewmon/report.hpp"

namespace skewmon {

// A right-monoidal structure presented through evaluators: the product on
// objects and maps, the unit object R, and the comparison maps gamma, eta,
// eps at object tuples. Implementations must be deterministic: evaluating
// twice on the same objects yields identical matrices.
//
// Arrows are BimodMaps. compose/identity are virtual so the op-rev dual can
// reverse arrow semantics while every checker stays generic.
class SkewMonStructure {
public:
    virtual ~SkewMonStructure() = default;

    virtual Obj unit() const = 0;
    virtual Obj ob(const Obj& a, const Obj& b) const = 0;
    virtual BimodMap mor(const BimodMap& f, const BimodMap& g) const = 0;
    virtual BimodMap gamma(const Obj& l, const Obj& m, const Obj& n) const = 0;
    virtual BimodMap eta(const Obj& m) const = 0;
    virtual BimodMap eps(const Obj& m) const = 0;

    virtual BimodMap compose(const BimodMap& f, const BimodMap& g) const; // f after g
    virtual BimodMap identity(const Obj& a) const;
    virtual bool arrows_reversed() const { return false; }

    bool map_eq(const BimodMap& f, const BimodMap& g) const
    {
        return f.src.get() == g.src.get() && f.dst.get() == g.dst.get() && f.mat == g.mat;
    }

protected:
    // Shared memo for object products keyed by operand identity.
    mutable std::map<std::pair<const void*, const void*>, Obj> ob_cache_;
    mutable std::mutex cache_mutex_;
    Obj cached_ob(const Obj& a, const Obj& b, const std::function<Obj()>& build) const;
};

using StructureRef = std::shared_ptr<const SkewMonStructure>;

// Finite stand-in for "for all objects": probe objects plus a spanning set
// of maps between them used for naturality checks.
struct ProbeSet {
    std::vector<Obj> objects;
    std::vector<BimodMap> maps;
};

// Build the default probe set {R, R^2, extras...} with hom bases as maps.
ProbeSet default_probes(const SkewMonStructure& s, const std::vector<Obj>& extras, Side hom_side,
                        std::size_t max_maps = 24);

struct CheckOptions {
    bool pentagon_all_tuples = true; // SMC1 over all 4-tuples of probe objects
    bool naturality = true;
    bool bifunctoriality = true;
};

// SMC1..SMC5 plus bifunctoriality and naturality of the structure maps.
Report check_smc(const SkewMonStructure& s, const ProbeSet& p, const CheckOptions& opt = {});

// Canonical monad T = R (*) - and comonad Q = - (*) R with the derived
// multiplication/comultiplication; the returned evaluators are closures
// over the structure.
struct CanonicalMonad {
    std::function<Obj(const Obj&)> ob;
    std::function<BimodMap(const BimodMap&)> map;
    std::function<BimodMap(const Obj&)> mu;
    std::function<BimodMap(const Obj&)> eta;
};
struct CanonicalComonad {
    std::function<Obj(const Obj&)> ob;
    std::function<BimodMap(const BimodMap&)> map;
    std::function<BimodMap(const Obj&)> delta;
    std::function<BimodMap(const Obj&)> eps;
};
CanonicalMonad canonical_monad(const StructureRef& s);
CanonicalComonad canonical_comonad(const StructureRef& s);
Report check_monad_laws(const SkewMonStructure& s, const ProbeSet& p);
Report check_comonad_laws(const SkewMonStructure& s, const ProbeSet& p);

// mu_M = (eps_R (*) M) . gamma_{R,R,M} and delta_M = gamma_{M,R,R} . (M (*) eta_R)
BimodMap canonical_mu(const SkewMonStructure& s, const Obj& m);
BimodMap canonical_delta(const SkewMonStructure& s, const Obj& m);

// chi_M = gamma_{R,M,R} and the four mixed distributive-law equations.
BimodMap distributive_law_chi(const SkewMonStructure& s, const Obj& m);
Report check_distributive_law(const SkewMonStructure& s, const ProbeSet& p);

// Two-argument delta/mu and sigma with their unit/coassociativity relations.
BimodMap delta2(const SkewMonStructure& s, const Obj& k, const Obj& l);
BimodMap mu2(const SkewMonStructure& s, const Obj& k, const Obj& l);
BimodMap sigma3(const SkewMonStructure& s, const Obj& l, const Obj& m, const Obj& n);
Report check_two_arg_maps(const SkewMonStructure& s, const ProbeSet& p);

// mu_{QM,N} . delta_{M,TN} = gamma_{M,R,N} on probe pairs.
Report check_galois_identity(const SkewMonStructure& s, const ProbeSet& p);

// The compatibility hexagon at R, the second-row identity through
// chi_{R(*)R}, plus the explicit witness comparison delta_R.mu_R vs
// gamma_{R,R,R} (expected to differ for instances where naive coherence
// fails; recorded as its own record with status pass when they differ).
struct CompatibilityResult {
    Report report;
    bool delta_mu_equals_gamma = false;
};
CompatibilityResult check_compatibility_diagram(const SkewMonStructure& s);

// Skew-monoidal functor data between two structures.
struct SkewMonFunctorData {
    const SkewMonStructure* src = nullptr;
    const SkewMonStructure* dst = nullptr;
    std::function<Obj(const Obj&)> ob;
    std::function<BimodMap(const BimodMap&)> map;
    std::function<BimodMap(const Obj&, const Obj&)> f2; // F X (*) F Y -> F(X (*) Y)
    BimodMap f0;                                        // R -> F R
};
Report check_skewmon_functor(const SkewMonFunctorData& f, const ProbeSet& p);

// Right-opmonoidal functor data (F, F^2, F^0): F^2: F(X (*) Y) -> FX (*) FY.
struct SkewOpmonFunctorData {
    const SkewMonStructure* src = nullptr;
    const SkewMonStructure* dst = nullptr;
    std::function<Obj(const Obj&)> ob;
    std::function<BimodMap(const BimodMap&)> map;
    std::function<BimodMap(const Obj&, const Obj&)> f2; // F(X (*) Y) -> FX (*) FY
    BimodMap f0;                                        // F R -> R
};
Report check_skew_opmonoidal_functor(const SkewOpmonFunctorData& f, const ProbeSet& p);

// Monoidal natural transformation between skew-monoidal functors.
Report check_monoidal_nat(const std::function<BimodMap(const Obj&)>& nu,
                          const SkewMonFunctorData& f, const SkewMonFunctorData& g,
                          const ProbeSet& p);

// phi_M = F_{R,M} . (F_0 (*) F M): monad morphism between canonical monads.
struct MonadMorphism {
    std::function<BimodMap(const Obj&)> phi;
    Report checks;
};
MonadMorphism monad_morphism_from_functor(const SkewMonFunctorData& f, const ProbeSet& p);

// psi_M = (F M (*) F^0) . F^{M,R}: comonad morphism between canonical comonads.
MonadMorphism comonad_morphism_from_opfunctor(const SkewOpmonFunctorData& f, const ProbeSet& p);

// The op-rev dual: arrows reversed, product order reversed, eta/eps swapped.
// Applying it twice restores the original matrices. The op and rev variants
// are left-monoidal and share this structure as their computational content.
StructureRef dual_oprev(const StructureRef& s);
BimodMap dualize_map(const BimodMap& f);
ProbeSet dualize_probes(const ProbeSet& p);

// The ordinary monoidal category of bimodules over an algebra, with tensor
// over the algebra, presented right-monoidally (gamma = associator,
// eta = inverse left unitor, eps = right unitor; all invertible).
class TensorStructure : public SkewMonStructure {
public:
    explicit TensorStructure(AlgebraRef a);

    Obj unit() const override { return unit_; }
    Obj ob(const Obj& a, const Obj& b) const override;
    BimodMap mor(const BimodMap& f, const BimodMap& g) const override;
    BimodMap gamma(const Obj& l, const Obj& m, const Obj& n) const override;
    BimodMap eta(const Obj& m) const override;
    BimodMap eps(const Obj& m) const override;

    // projection/section between the Kronecker space a.dim*b.dim and the
    // tensor product, for callers assembling maps through free spaces
    Mat proj(const Obj& a, const Obj& b) const;
    Mat sect(const Obj& a, const Obj& b) const;
    // inverses of the unitors as plain maps
    BimodMap lunit(const Obj& m) const;  // R(x)M -> M
    BimodMap runit_inv(const Obj& m) const;

    AlgebraRef algebra() const { return alg_; }

private:
    AlgebraRef alg_;
    Obj unit_;
    struct Prod {
        Obj ob;
        Mat proj, sect;
    };
    mutable std::map<std::pair<const void*, const void*>, Prod> prod_cache_;
    const Prod& product(const Obj& a, const Obj& b) const;
};

} // namespace skewmon
