#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "catv/classifier.hpp"
#include "catv/fincat.hpp"
#include "catv/limits.hpp"

namespace catv {

/// Strict category-valued presheaf on a finite index category (covariant
/// convention: act follows the index arrows).
struct PresheafOfCats {
  CatPtr index;
  std::vector<CatPtr> at;     // per index object
  std::vector<Functor> act;   // per index morphism
  std::string name;
};
/// act(id) = id and act(f;g) = act(f);act(g), all components well-formed.
Verdict check_presheaf(const PresheafOfCats& f);

PresheafOfCats constant_presheaf(const CatPtr& c, const CatPtr& d, std::string name);
/// Discrete-valued representable at an index object: b -> Hom(obj, b).
PresheafOfCats representable_presheaf(const CatPtr& c, int obj);

/// Strictly natural morphism of presheaves: one functor per index object.
struct PsMorphism {
  PresheafOfCats src, dst;
  std::vector<Functor> comp;
  std::string name;
};
Verdict check_ps_morphism(const PsMorphism& m);
PsMorphism identity_ps_morphism(const PresheafOfCats& f);
PsMorphism compose_ps_morphisms(const PsMorphism& a, const PsMorphism& b);
bool same_ps_morphism(const PsMorphism& a, const PsMorphism& b);

/// Modification between parallel presheaf morphisms: one transformation per
/// index object, compatible with the actions.
struct PsModification {
  PsMorphism src, dst;
  std::vector<Transformation> comp;
  std::string name;
};
Verdict check_ps_modification(const PsModification& m);

std::vector<PsMorphism> enumerate_ps_morphisms(const PresheafOfCats& x,
                                               const PresheafOfCats& f, Budget& budget);
std::vector<PsModification> enumerate_ps_modifications(const PsMorphism& a,
                                                       const PsMorphism& b, Budget& budget);

/// Grothendieck construction of a presheaf, with its split opfibration data.
struct ElPresheaf {
  CatPtr total;
  Functor proj;  // to the index category
  std::vector<std::pair<int, int>> obj;  // (index object, fibre object)
  std::vector<std::pair<int, int>> mor;  // (index morphism, fibre morphism)
  int obj_of(int c, int x) const { return obj_idx_[c][x]; }
  int mor_of(int dom_obj, int u, int xi) const;
  /// Chosen cocartesian lift of u at an object over its domain.
  int cocart(int o, int u) const;

 private:
  friend ElPresheaf el(const PresheafOfCats& f);
  std::vector<std::vector<int>> obj_idx_;
  std::map<std::tuple<int, int, int>, int> mor_idx_;
  std::vector<std::vector<int>> cocart_;  // [object][index morphism] -> lift or -1
};
ElPresheaf el(const PresheafOfCats& f);
/// Splitting equations of the chosen lifts: identities and composites.
Verdict check_split_opfibration(const ElPresheaf& e);
/// Functor on total categories induced by a presheaf morphism.
Functor el_of(const PsMorphism& m, const ElPresheaf& ef, const ElPresheaf& eg);

/// Strict pullback of presheaves is pointwise; el preserves and reflects it.
Verdict ps_square_pullback(const PsMorphism& h, const PsMorphism& k, const PsMorphism& f,
                           const PsMorphism& g);
Verdict el_preserves_reflects_pullback(const PsMorphism& h, const PsMorphism& k,
                                       const PsMorphism& f, const PsMorphism& g);

/// Right adjoint to el: at(c) = Fun(c/C, D), action by precomposition with
/// the coslice reindexing.
struct SpData {
  PresheafOfCats ps;
  std::vector<CosliceData> coslices;              // per index object
  std::vector<std::shared_ptr<FunCatData>> fun;   // per index object
  std::vector<Functor> ustar;                     // per index morphism: cod coslice -> dom coslice
};
SpData sp(const CatPtr& d, const CatPtr& c, Budget& budget);
/// Pointwise post-composition with a functor p: D -> E.
PsMorphism sp_of(const Functor& p, const SpData& spd, const SpData& spe);

PsMorphism adjunction_unit(const PresheafOfCats& f, const ElPresheaf& ef,
                           const SpData& sp_elf);
Functor adjunction_counit(const CatPtr& d, const SpData& spd, const ElPresheaf& el_spd);
/// Triangle identities of el -| sp on the instance (C, D, F).
Verdict adjunction_check(const CatPtr& c, const CatPtr& d, const PresheafOfCats& f,
                         Budget& budget);
/// The counit naturality square at the bounded classifier is a strict pullback.
Verdict counit_square_at_p(const CatPtr& c, const ClassifierConfig& cfg, Budget& budget);

/// Three equivalent characterisations of a presheaf-level DOF: pointwise,
/// on el, and representably against the probes (representables plus the
/// constant terminal presheaf); verified to agree.
Verdict dof_criteria(const PsMorphism& f, Budget& budget);

/// Three equivalent smallness tests for a presheaf-level DOF: pointwise fibre
/// bounds, fibre bounds of el(f), and existence of a classifying pullback
/// square against sp(p); the classifying transpose is round-tripped.
Verdict smallness_criteria(const PsMorphism& f, const ClassifierConfig& cfg, Budget& budget);

/// Pointwise core with its inclusion, checked universal against a family of
/// groupoid-valued probes.
struct CorePresheaf {
  PresheafOfCats core;
  PsMorphism incl;
  Verdict universal;
};
CorePresheaf core_presheaf(const PresheafOfCats& f, Budget& budget);

/// Subfunctor fibration over the iso-core of Fun(c/C, S) for each index
/// object: a DOF equivalent over the base to the collapse of the pointwise
/// mono fibration, with fibre sizes within the power-set bound.
Verdict sub_fibration_check(const CatPtr& c, const ClassifierConfig& cfg, Budget& budget);

}  // namespace catv
