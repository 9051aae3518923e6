#pragma once

#include <vector>

#include "catv/fincat.hpp"
#include "catv/limits.hpp"

namespace catv {

/// Raw data of an internal double category in Cat: three categories and the
/// six structure functors, before any law has been checked.
struct RawDouble {
  CatPtr c0, c1, c2;
  Functor p0, p1;           // c1 -> c0 (horizontal source / target)
  Functor e;                // c0 -> c1 (horizontal identity)
  Functor p01, p12, p02;    // c2 -> c1 (pair projections and composite)
};

/// A validated internal double category. Objects of c0 are objects, morphisms
/// of c0 are vertical arrows, objects of c1 are horizontal arrows, morphisms
/// of c1 are squares. c3 (triples) is always materialized, together with
/// lookup tables inverting the strict-pullback structure of c2 and c3.
struct DoubleCat {
  CatPtr c0, c1, c2, c3;
  Functor p0, p1, e, p01, p12, p02;
  Functor q012, q123;  // c3 -> c2

  // (h, k) horizontal arrows with p1(h) == p0(k)  ->  the c2 object / morphism.
  int pair_obj(int h, int k) const { return pair_obj_[h][k]; }
  int pair_mor(int a, int b) const { return pair_mor_[a][b]; }
  // Pair of c2 cells sharing their middle projection -> c3 cell.
  int triple_obj(int w01, int w12) const { return triple_obj_[w01][w12]; }
  int triple_mor(int a, int b) const { return triple_mor_[a][b]; }

  // Horizontal composition, via p02 on the looked-up pair.
  int hcomp_obj(int h, int k) const { return p02.obj[pair_obj(h, k)]; }
  int hcomp_mor(int a, int b) const { return p02.mor[pair_mor(a, b)]; }

  friend DoubleCat validate_double(const RawDouble& raw);

 private:
  std::vector<std::vector<int>> pair_obj_, pair_mor_, triple_obj_, triple_mor_;
};

/// Checks every internal-category equation, the strict-pullback condition on
/// c2, and that the boundary functor is an isofibration; builds c3. Throws
/// ValidationError with kind EquationViolation (naming the equation),
/// NotPullback, or NotIsofibration.
DoubleCat validate_double(const RawDouble& raw);

/// The double category of all commutative squares in x (horizontal and
/// vertical arrows both arbitrary arrows of x).
RawDouble squares_double(const CatPtr& x);

enum class GboRoute { kDirect, kCharacterization };
/// Groupoidal-with-boundary-opfibration recognition. Direct route checks
/// groupoidality of all levels plus the DOF property of the boundary functor;
/// the characterization route checks that the canonical relation from vertical
/// arrows to horizontal arrows is a function and that a square with a given
/// boundary exists exactly when the two reflected composites agree.
Verdict is_gbo(const DoubleCat& c, GboRoute route);

/// Reflection of a gbo congruence: one horizontal arrow per vertical arrow,
/// with the unique connecting square. Throws ValidationError(NotGbo) when the
/// input is not gbo.
struct ReflectionData {
  std::vector<int> r;       // c0 morphism -> c1 object
  std::vector<int> filler;  // c0 morphism -> c1 morphism e(dom) -> r(v)
};
ReflectionData reflection(const DoubleCat& c);

/// Full subcategory of c1 on the horizontally invertible objects, with the
/// inclusion, the factorization of e through it, and the strict-pullback
/// criterion (the canonical pullback of the double-composite boundary of c3
/// against e x e is exactly this subcategory).
struct ObjectOfIsos {
  FullSubcatData sub;   // c_iso inside c1
  Functor e_bar;        // c0 -> c_iso
  std::vector<int> hinv;  // c1 object -> horizontal inverse object, -1 if none
  Verdict pullback_criterion;
};
ObjectOfIsos object_of_isos(const DoubleCat& c);

enum class CompleteRoute { kRBijection, kEEquivalence, kPullbackSquare };
/// Rezk completeness of a gbo congruence, by one of three routes: the
/// reflection bijects verticals onto horizontal isos; e factors as an
/// equivalence onto the object of isos; or the reflection square into c3 is a
/// strict pullback. Throws ValidationError(NotGbo) when the input is not gbo.
Verdict is_complete(const DoubleCat& c, CompleteRoute route);

/// Cocone under a congruence: a functor off c0 and a 2-cell off c1 satisfying
/// the unit and multiplication cocone equations.
struct DoubleCocone {
  Functor gamma;            // c0 -> target
  Transformation gamma01;   // p0;gamma => p1;gamma
};
Verdict check_cocone(const DoubleCat& c, const DoubleCocone& k);

/// Nerve of a finite category: cores of x, of its arrow category and of its
/// composable-pair category, with the induced structure functors, plus the
/// tautological cocone with vertex x.
struct NerveData {
  DoubleCat dc;
  DoubleCocone taut;       // vertex x
  CatPtr x;
  CoreData core0, core1, core2;
  ArrowCatData arrow;
  PairCatData pairs;
};
NerveData nerve(const CatPtr& x);

/// Quotient of a complete congruence: the horizontal category, the canonical
/// cocone, and the universality verdict against a probe family (functors off
/// the quotient must biject with cocones). Throws ValidationError(NotComplete)
/// when the congruence is not complete.
struct QuotientData {
  CatPtr x;
  DoubleCocone cocone;
  Verdict universality;
};
QuotientData quotient(const DoubleCat& c, const std::vector<CatPtr>& probes, Budget& budget);

/// Default probe family for quotient universality.
std::vector<CatPtr> default_quotient_probes();

/// Reverse the horizontal direction of a double category (swap source with
/// target and first pair projection with second).
DoubleCat swap_double(const DoubleCat& c);

/// Opposition of x: the nerve, its horizontal swap, both quotients, and the
/// verdict bundle (x recovered, the swap's quotient isomorphic to the table
/// opposite of x, and the swapped reflection equal to the inverted one).
struct OppositionData {
  NerveData nv;
  DoubleCat cop;
  QuotientData q, qop;
  CatPtr xop;  // build_opposite(x)
  Verdict checks;
};
OppositionData opposition(const CatPtr& x, const std::vector<CatPtr>& probes, Budget& budget);

/// Internal functor between double categories: levelwise functors commuting
/// with all structure maps.
struct InternalFunctor {
  Functor f0, f1, f2;
};
std::vector<InternalFunctor> enumerate_internal_functors(const DoubleCat& c,
                                                         const DoubleCat& d, Budget& budget);

/// Full faithfulness of the nerve at desk scale: internal functors
/// nerve(x) -> nerve(y) biject with functors x -> y, and internal natural
/// transformations biject with transformations, both checked by enumeration.
Verdict nerve_hom_check(const CatPtr& x, const CatPtr& y, Budget& budget);

}  // namespace catv
