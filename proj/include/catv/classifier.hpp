#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "catv/fincat.hpp"
#include "catv/limits.hpp"

namespace catv {

/// Fibre-size bound for the finite-set classifier. A fibre is
/// power-admissible when its power set still fits under the bound.
struct ClassifierConfig {
  int n = 4;
  bool power_admissible(int m) const { return m >= 0 && (1 << m) <= n; }
};

/// The generic discrete opfibration at bound n: the skeleton of sets of size
/// at most n, the category of pointed such sets, and the forgetful functor.
struct BoundedSetClassifier {
  ClassifierConfig cfg;
  SetSkeleton s;
  CatPtr star;
  Functor p;  // star -> s.cat, a DOF
  std::vector<std::pair<int, int>> star_obj;  // star object -> (size, point)
  int star_obj_of(int m, int i) const;
  Verdict genericity;  // morphisms biject with fibre maps, checked at build

 private:
  friend BoundedSetClassifier build_classifier(const ClassifierConfig& cfg);
  std::vector<std::vector<int>> star_idx_;
};
BoundedSetClassifier build_classifier(const ClassifierConfig& cfg);

/// Counting form of the genericity criterion, usable beyond the sizes at
/// which the classifier is materialized: |Hom(m, n)| = n^m with 0^0 = 1,
/// tables closed under composition and associative on samples.
Verdict genericity_criterion(int n);

/// Category of elements of g: A -> S; the projection is a DOF whose fibre
/// over a is the canonical set of size g(a).
struct ElData {
  CatPtr total;
  Functor proj;  // total -> A
  std::vector<std::pair<int, int>> obj;  // total object -> (A-object, index)
  std::vector<std::pair<int, int>> mor;  // total morphism -> (A-morphism, index)
  int obj_of(int a, int i) const { return obj_idx_[a][i]; }

 private:
  friend ElData gr(const Functor& g, const SetSkeleton& s);
  std::vector<std::vector<int>> obj_idx_;
};
ElData gr(const Functor& g, const SetSkeleton& s);

/// Over-A functor El(f) -> El(h) induced by a 2-cell f => h.
Functor gr_2cell(const Transformation& gamma, const ElData& ef, const ElData& eh,
                 const SetSkeleton& s);

/// Classifying functor of a DOF over A, with the canonical isomorphism of its
/// category of elements onto the total category. Fibres are ordered by object
/// index in the total category. Throws ValidationError(FibreTooLarge).
struct ClassifyResult {
  Functor g;    // A -> S
  ElData el;    // gr(g)
  Functor iso;  // el.total -> dom(f), over A
};
ClassifyResult classify(const Functor& f, const SetSkeleton& s);

/// Full faithfulness of gr at A: 2-cells f => h biject with over-A functors
/// El(f) -> El(h), checked by enumeration of both sides.
Verdict check_gr_fully_faithful(const CatPtr& a, const Functor& f, const Functor& h,
                                const SetSkeleton& s, Budget& budget);

/// Closure laws of smallness at the bound: monic DOFs are small (with the
/// pseudo-monic equivalence), composites are small exactly when the combined
/// fibre bound fits, pullback stability, and the 2-of-3 rule. Findings are
/// reported per case in the witness.
Verdict smallness_suite(const ClassifierConfig& cfg);

/// The subset fibration: objects (m, T subset of {0..m-1}), morphisms the
/// direct-image transports over isos of the core of S.
struct SubsetFibration {
  CatPtr wpow;
  std::vector<std::pair<int, unsigned>> wobj;  // wpow object -> (size, bitmask)
  CoreData s_iso;                              // core of S
  Functor dot_pow;   // wpow -> s_iso.cat, a DOF
  Functor tilde_d0;  // wpow -> S, (m, T) -> |T|
  Transformation tilde_d;  // tilde_d0 => dot_pow ; incl, pointwise mono
  FullSubcatData admissible;  // power-admissible objects of the core
  Functor pow;                // admissible.cat -> S, m -> 2^m by direct image
  Verdict collapse_check;     // dof_collapse(Mon(S)^iso -> S^iso) matches
  int wobj_of(int m, unsigned mask) const;

 private:
  friend SubsetFibration subset_fibration(const SetSkeleton& s, const ClassifierConfig& cfg);
  std::vector<std::vector<int>> widx_;
};
SubsetFibration subset_fibration(const SetSkeleton& s, const ClassifierConfig& cfg);

/// Cardinality of the power object at size m; throws
/// ValidationError(PowerNotAdmissible) above the bound.
int pow_value(const ClassifierConfig& cfg, int m);

/// Universal property of the subset fibration: a pointwise mono alpha: f => g
/// between functors A -> S (A a groupoid, g pointwise admissible) induces a
/// unique classifying functor A -> Wpow. Throws NotGroupoid /
/// PowerNotAdmissible on precondition failure.
Verdict verify_pow_universal(const CatPtr& a, const Transformation& alpha,
                             const SetSkeleton& s, const SubsetFibration& w,
                             const ClassifierConfig& cfg, Budget& budget);

/// Power object of a small DOF a_dof: A -> U in DOF(U), U a groupoid: the
/// fibrewise subset fibration P, the membership DOF eps, and the universal
/// mono j: eps -> A x_U P.
struct PowerObject {
  CatPtr p_total;
  Functor p_dof;  // p_total -> U
  std::vector<std::pair<int, unsigned>> p_obj;  // (U-object, fibre bitmask)
  CatPtr eps_total;
  Functor eps_dof;  // eps_total -> U
  std::vector<std::array<int, 3>> eps_obj;  // (U-object, mask, fibre position)
  PullbackData axp;  // A x_U P
  Functor j;         // eps_total -> axp.apex, a mono over U
  std::vector<std::vector<int>> fib;  // U-object -> A-objects of the fibre
  int p_obj_of(int u, unsigned mask) const;
  int eps_obj_of(int u, unsigned mask, int t) const;

 private:
  friend PowerObject power_object_in_dof(const Functor& a_dof, const ClassifierConfig& cfg);
  std::vector<std::vector<int>> pidx_;
  std::map<std::array<int, 3>, int> eps_idx_;
};
PowerObject power_object_in_dof(const Functor& a_dof, const ClassifierConfig& cfg);

/// Exhaustive universal-property check: over every small DOF B (as a
/// classifying functor U -> S), every small DOF R and every mono
/// k: R -> A x_U B over U, the subset-membership mediator B -> P is the
/// unique functor pulling j back to k.
Verdict verify_power_universal(const Functor& a_dof, const PowerObject& po,
                               const ClassifierConfig& cfg, Budget& budget);

/// Stability: the pullback of (P, j) along a groupoid probe f: U' -> U is
/// isomorphic over U' to the power object built directly from the pulled-back
/// DOF.
Verdict power_stability(const Functor& f, const Functor& a_dof, const ClassifierConfig& cfg,
                        Budget& budget);

/// All lifts of g: A -> B along a discrete opfibration q: T -> B, i.e.
/// functors h: A -> T with h;q == g. Object assignments are searched with
/// morphism-level pruning; morphism parts are forced by unique lifting.
std::vector<Functor> enumerate_lifts(const Functor& g, const Functor& q, Budget& budget);

/// Finite limits of DOF(A): terminal object id_A, pullbacks computed on total
/// categories, smallness closure, and the nested-bound comparison from the
/// n_small classifier into the n-bounded one.
Verdict dof_limits(const CatPtr& a, const ClassifierConfig& cfg, int n_small, Budget& budget);

}  // namespace catv
