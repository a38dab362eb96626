#pragma once

#include "forms/error.hpp"
#include "forms/subobject.hpp"

#include <string>
#include <vector>

namespace forms {

// The canonical three-way splitting of a morphism:
// f = embedding ∘ middle ∘ projection, with the middle an isomorphism,
// the projection associated to Ker f and the embedding to Im f.
struct Factorization {
  MorphId projection;
  MorphId middle;
  MorphId embedding;
};

// The contract every model satisfies: objects carry bounded subobject
// lattices, morphisms carry a monotone Galois pair of direct/inverse image
// maps, conormal subobjects admit canonical embeddings and normal ones
// canonical projections, and every morphism factorizes through both.
//
// Objects and morphisms created on demand (quotients, carriers, composites)
// are memoized, so a repeated request returns the identical id; all queries
// are deterministic and logically pure. Morphism identity is extensional:
// two morphisms with the same endpoints and the same underlying map share
// one id.
class Model {
public:
  virtual ~Model() = default;

  // -- objects ---------------------------------------------------------
  virtual bool has_object(ObjectId g) const = 0;
  virtual std::string object_name(ObjectId g) const = 0;
  virtual int object_order(ObjectId g) const = 0;

  // -- subobject lattice -------------------------------------------------
  virtual SubObject top(ObjectId g) const = 0;
  virtual SubObject bottom(ObjectId g) const = 0;
  virtual bool is_subobject(const SubObject& s) const = 0;
  virtual bool leq(const SubObject& a, const SubObject& b) const = 0;
  virtual SubObject meet(const SubObject& a, const SubObject& b) const = 0;
  virtual SubObject join(const SubObject& a, const SubObject& b) const = 0;
  // All subobjects, sorted by (size, lexicographic payload) in the primal
  // reading; duplicate-free.
  virtual std::vector<SubObject> subobjects(ObjectId g) const = 0;

  // -- morphisms ---------------------------------------------------------
  virtual ObjectId dom(MorphId f) const = 0;
  virtual ObjectId cod(MorphId f) const = 0;
  virtual MorphId identity(ObjectId g) const = 0;
  // compose(f, g) is f ∘ g: apply g first. Endpoints must match.
  virtual MorphId compose(MorphId after, MorphId before) const = 0;
  virtual SubObject direct_image(MorphId f, const SubObject& a) const = 0;
  virtual SubObject inverse_image(MorphId f, const SubObject& b) const = 0;
  virtual bool is_embedding(MorphId f) const = 0;
  virtual bool is_projection(MorphId f) const = 0;
  // Defined exactly on isomorphisms; throws not-an-isomorphism otherwise.
  virtual MorphId invert(MorphId f) const = 0;

  // -- normality and canonical providers ---------------------------------
  virtual bool is_normal(const SubObject& s) const = 0;
  virtual bool is_conormal(const SubObject& s) const = 0;
  // ι_S for conormal S (Im ι_S = S, trivial kernel); ι_⊤ is the identity.
  virtual MorphId canonical_embedding(const SubObject& s) const = 0;
  // π_S for normal S (Ker π_S = S, full image); π_1 is the identity.
  virtual MorphId canonical_projection(const SubObject& s) const = 0;

  // -- universal-property mediators ---------------------------------------
  // Given a projection p and g with Ker p ⊆ Ker g, the unique v with g = v∘p.
  virtual MorphId mediate_through_projection(MorphId p, MorphId g) const = 0;
  // Given an embedding m and f with Im f ⊆ Im m, the unique u with f = m∘u.
  virtual MorphId mediate_through_embedding(MorphId m, MorphId f) const = 0;

  // -- scoped enumeration --------------------------------------------------
  // Every morphism x → y, sorted; memoized per pair.
  virtual std::vector<MorphId> enumerate_homs(ObjectId x, ObjectId y) const = 0;

  // -- element level (concrete models only) --------------------------------
  virtual bool is_element_level() const { return false; }
  virtual const std::vector<int>& morph_map(MorphId f) const;
  virtual bool map_is_hom(ObjectId x, ObjectId y, const std::vector<int>& map) const;

  // -- derived, uniform across models ---------------------------------------
  SubObject kernel(MorphId f) const;  // f⁻¹(1)
  SubObject image(MorphId f) const;   // f(⊤)
  bool is_isomorphism(MorphId f) const;
  Factorization factorize(MorphId f) const;

  std::string morph_repr(MorphId f) const;  // "A -> B map [. .]"
};

}  // namespace forms
