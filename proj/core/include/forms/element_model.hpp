#pragma once

#include "forms/model.hpp"

#include <map>
#include <utility>
#include <vector>

namespace forms {

// Shared machinery for models whose objects are finite operation tables and
// whose morphisms are element maps. Subclasses supply the algebra: the
// closure operation that defines the subobject lattice join, full validity
// of a map, normality/conormality of a payload, and construction of
// quotient and carrier objects.
//
// Canonical numbering conventions (fixed for bit-exact regression output):
//   * quotient elements are numbered by the minimal element of each coset,
//     cosets ordered by that representative;
//   * carrier elements are the payload elements renumbered in ascending
//     order.
class ElementModel : public Model {
public:
  // Model: objects
  bool has_object(ObjectId g) const override;
  std::string object_name(ObjectId g) const override;
  int object_order(ObjectId g) const override;
  int object_count() const { return static_cast<int>(objects_.size()); }

  // Model: lattice
  SubObject top(ObjectId g) const override;
  SubObject bottom(ObjectId g) const override;
  bool is_subobject(const SubObject& s) const override;
  bool leq(const SubObject& a, const SubObject& b) const override;
  SubObject meet(const SubObject& a, const SubObject& b) const override;
  SubObject join(const SubObject& a, const SubObject& b) const override;
  std::vector<SubObject> subobjects(ObjectId g) const override;

  // Model: morphisms
  ObjectId dom(MorphId f) const override;
  ObjectId cod(MorphId f) const override;
  MorphId identity(ObjectId g) const override;
  MorphId compose(MorphId after, MorphId before) const override;
  SubObject direct_image(MorphId f, const SubObject& a) const override;
  SubObject inverse_image(MorphId f, const SubObject& b) const override;
  bool is_embedding(MorphId f) const override;   // injective map
  bool is_projection(MorphId f) const override;  // surjective map
  MorphId invert(MorphId f) const override;

  bool is_normal(const SubObject& s) const override;
  bool is_conormal(const SubObject& s) const override;
  MorphId canonical_embedding(const SubObject& s) const override;
  MorphId canonical_projection(const SubObject& s) const override;

  MorphId mediate_through_projection(MorphId p, MorphId g) const override;
  MorphId mediate_through_embedding(MorphId m, MorphId f) const override;

  std::vector<MorphId> enumerate_homs(ObjectId x, ObjectId y) const override;

  bool is_element_level() const override { return true; }
  const std::vector<int>& morph_map(MorphId f) const override;
  bool map_is_hom(ObjectId x, ObjectId y, const std::vector<int>& map) const override;

  // Validates the map and returns the memoized id; the same
  // (dom, cod, map) triple always yields the same id.
  MorphId register_morphism(ObjectId dom, ObjectId cod, std::vector<int> map) const;

  // Smallest subobject containing the seed (for groups the generated
  // subgroup; for rings the generated additive subgroup).
  SubObject generated_subobject(ObjectId g, const ElemSet& seed) const;

  int morphism_count() const { return static_cast<int>(morphs_.size()); }

protected:
  // The single binary operation driving closure, cosets and hom extension:
  // the group product, or ring addition.
  virtual int op(ObjectId g, int a, int b) const = 0;
  // Full structure-preservation check for a total map x -> y (map(0)=0 and
  // additivity follow from op; rings add multiplicativity and unitality).
  virtual bool map_is_valid(ObjectId x, ObjectId y, const std::vector<int>& map) const = 0;
  virtual bool payload_is_normal(ObjectId g, const ElemSet& s) const = 0;
  virtual bool payload_is_conormal(ObjectId g, const ElemSet& s) const = 0;
  // Build the coset object for a normal payload; `cosets` lists the blocks
  // ordered by minimal member, `index_of` maps elements to block indices.
  virtual ObjectId build_quotient_object(ObjectId g, const ElemSet& s,
                                         const std::vector<ElemSet>& cosets,
                                         const std::vector<int>& index_of) const = 0;
  // Build the standalone object on a conormal payload (ascending order).
  virtual ObjectId build_carrier_object(ObjectId g, const ElemSet& s) const = 0;

  ObjectId add_object_info(const std::string& name, int order) const;

  ElemSet close(ObjectId g, ElemSet seed) const;
  void check_object(ObjectId g) const;
  void check_parent(const SubObject& s, ObjectId g, const char* what) const;

  // Partition of g's carrier into op-cosets of s, ordered by minimal member.
  void coset_partition(ObjectId g, const ElemSet& s, std::vector<ElemSet>& cosets,
                       std::vector<int>& index_of) const;

  ElemSet greedy_generators(ObjectId g) const;

  struct ObjectInfo {
    std::string name;
    int order;
  };
  struct MorphData {
    ObjectId dom;
    ObjectId cod;
    std::vector<int> map;
  };

  const MorphData& data(MorphId f) const;

  // Registries grow during const queries; every construction is memoized so
  // results do not depend on request order.
  mutable std::vector<ObjectInfo> objects_;
  mutable std::vector<MorphData> morphs_;
  mutable std::map<std::tuple<ObjectId, ObjectId, std::vector<int>>, MorphId> morph_ids_;
  mutable std::map<ObjectId, MorphId> identities_;
  mutable std::map<std::pair<ObjectId, ElemSet>, MorphId> canonical_embeddings_;
  mutable std::map<std::pair<ObjectId, ElemSet>, MorphId> canonical_projections_;
  mutable std::map<ObjectId, std::vector<SubObject>> subobject_cache_;
  mutable std::map<std::pair<ObjectId, ObjectId>, std::vector<MorphId>> hom_cache_;
  mutable std::map<ObjectId, ElemSet> generator_cache_;
};

}  // namespace forms
