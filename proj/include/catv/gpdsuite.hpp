#pragma once

#include <functional>
#include <vector>

#include "catv/classifier.hpp"
#include "catv/congruence.hpp"
#include "catv/fincat.hpp"
#include "catv/limits.hpp"

namespace catv {

/// Groupoid probes for a subject x: a fixed corpus of small groupoids plus
/// the nerve levels of x (cores of x, of its arrow category and of its
/// composable-pair category) with the tautological cocone recorded.
struct ProbeFamily {
  CatPtr x;
  std::vector<CatPtr> corpus;
  NerveData nv;  // dc.c0/c1/c2 are the nerve-level probes, taut the cocone
  std::vector<CatPtr> all() const;
};
/// {terminal, discrete 2, walking iso, Z/2, disjoint pair of walking isos}.
std::vector<CatPtr> corpus_probes();
ProbeFamily probes_for(const CatPtr& x);

/// Strictly natural family F_A: Fun(A,x) -> Fun(A,y) over groupoid probes A,
/// kept as callables: hom categories at the nerve levels are far too large
/// to materialize (|Fun(A,x)| grows like |x|^|A|).
struct GroupoidNaturalData {
  CatPtr x, y;
  std::function<Functor(const Functor&)> on_obj;  // g: A -> x  |->  A -> y
  std::function<Transformation(const Transformation&)> on_mor;
  std::string name;
};
/// The family induced by postcomposition with f.
GroupoidNaturalData restrict_functor(const Functor& f);

/// 2-cell-level family between two natural families: one transformation
/// src(g) => dst(g) per probe functor g.
struct GroupoidCellData {
  GroupoidNaturalData src, dst;
  std::function<Transformation(const Functor&)> at;
  std::string name;
};
GroupoidCellData restrict_transformation(const Transformation& t);

/// Finds a probe and a test functor (or component) on which the postcomposition
/// data of two distinct parallel functors (or transformations) differ; the
/// canonical nerve-level witnesses are tried first, then the corpus by
/// enumeration. Equal inputs fail with a precondition counterexample; a
/// distinct pair with no separator fails with NoSeparatorFound.
Verdict separate(const Functor& f, const Functor& g, const ProbeFamily& pf, Budget& budget);
Verdict separate(const Transformation& a, const Transformation& b, const ProbeFamily& pf,
                 Budget& budget);

/// Rebuilds the functor x -> y underlying a natural family: objects from the
/// value at the core inclusion, morphisms from the value on the tautological
/// 2-cell, validated by the cocone equations. Throws ValidationError with kind
/// NaturalityViolation (a structure-functor square fails) or
/// CoconeEquationViolation. The verdict records the round trip against
/// postcomposition on every corpus probe, including 2-cells.
struct ReconstructResult {
  Functor f;
  Verdict verdict;
};
ReconstructResult reconstruct(const GroupoidNaturalData& d, const ProbeFamily& pf,
                              Budget& budget);

/// 2-cell variant: components from the value at the core inclusion; the
/// verdict additionally records that the modification compatibility clause
/// holds on the corpus (it is derivable, not assumed).
struct ReconstructCellResult {
  Transformation t;
  Verdict verdict;
};
ReconstructCellResult reconstruct_cell(const GroupoidCellData& d, const ProbeFamily& pf,
                                       Budget& budget);

/// Limit-operator characterization for shape j: materializes Fun(j,x),
/// Fun([0]*j,x), Fun([1]*j,x), builds the pointwise-limit section ell of the
/// restriction functor when every diagram has a limit cone, and checks the
/// section law, the pullback factorization criterion (projection composed
/// with evaluation at the fresh vertex is an isomorphism of categories), and
/// the same criterion on cores. When some diagram has no limit cone, exists
/// is false and checks carries the exhaustive counterexample.
struct LimitOperatorData {
  CatPtr jhat, jhathat;  // [0]*j and [1]*j
  FunCatData fj, fjh, fjhh;
  Functor restr;  // Fun([0]*j,x) -> Fun(j,x), precomposition
  bool exists = false;
  Functor ell;
  Verdict checks;
};
LimitOperatorData limit_operator(const CatPtr& x, const CatPtr& j, Budget& budget);

/// Power-object workbench over the bounded set skeleton: canonical
/// membership-relation diagrams on diagram-admissible sizes, the relation
/// classification bijection, the direct-image functor against its adjunction
/// characterization and against the classifier module's power functor, the
/// contravariant (inverse-image) variant, and uniqueness of the comparison
/// with a reversed-encoding second choice of diagrams. Sizes admissible for
/// the power but not for the full diagram are reported as skipped, never
/// silently clipped. Throws ValidationError(PowerNotAdmissible) when the
/// bound is below 4.
Verdict power_morphism_check(const ClassifierConfig& cfg, Budget& budget);

/// Exponential workbench: full Heyting-implication check on the boolean
/// poset (functors, unit, counit, both triangle identities) and the
/// function-set check on the bounded skeleton restricted to
/// exponent-admissible instances (currying bijection, evaluation, triangle
/// instances), with every skipped instance reported.
Verdict exponential_check(const ClassifierConfig& cfg, Budget& budget);

/// Representable characterization of opposites: per groupoid probe A the
/// canonical functor Fun(A,x)^op -> Fun(A,x^op) is an isomorphism of
/// categories, both naturality squares hold (the 2-cell square inverts the
/// whiskering cell), double opposite is the identity under the canonical
/// identification, and for endofunctors f the representable prescription
/// picks out exactly the table-level opposite.
Verdict op_representable_check(const CatPtr& x, Budget& budget);

}  // namespace catv
