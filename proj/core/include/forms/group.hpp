#pragma once

#include "forms/element_model.hpp"

namespace forms {

// A finite group presented by its Cayley table. Element 0 is the identity.
struct GroupTable {
  int n = 0;
  std::vector<int> table;    // n*n, row-major: table[a*n+b] = a·b
  std::vector<int> inverse;  // derived

  int at(int a, int b) const { return table[a * n + b]; }
};

// Validates the four table laws in order (identity, permutation,
// associativity, inverse) and throws invalid-table naming the first
// violated one.
GroupTable make_group_table(int n, std::vector<int> table);

// Reference model: finite groups by Cayley table. Every subgroup is
// conormal; a subgroup is normal iff it is closed under conjugation.
//
// Builder numbering conventions:
//   cyclic k     addition mod k.
//   klein        Z2×Z2 with (a,b) -> 2a+b.
//   dihedral k   (k >= 3) i < k is the rotation v -> v+i of the k-gon;
//                k+i is the reflection v -> k-v composed after rotation i.
//   symmetric k  permutations ordered by (number of moved points,
//                lexicographic one-line form), identity first.
//   quaternion   0..7 = 1, -1, i, -i, j, -j, k, -k.
class GroupModel final : public ElementModel {
public:
  explicit GroupModel(int max_order = 24) : max_order_(max_order) {}

  ObjectId add_cyclic(const std::string& name, int k);
  ObjectId add_klein(const std::string& name);
  ObjectId add_dihedral(const std::string& name, int k);
  ObjectId add_symmetric(const std::string& name, int k);
  ObjectId add_quaternion(const std::string& name);
  ObjectId add_table(const std::string& name, int n, std::vector<int> table);

  const GroupTable& table(ObjectId g) const;
  int max_order() const { return max_order_; }

  // Spec surface of the group model; the lattice/hom machinery lives in
  // ElementModel.
  SubObject generated_subgroup(ObjectId g, const ElemSet& gens) const {
    return generated_subobject(g, gens);
  }
  std::vector<SubObject> enumerate_subgroups(ObjectId g) const { return subobjects(g); }
  std::pair<ObjectId, MorphId> quotient_group(ObjectId g, const SubObject& n) const;

protected:
  int op(ObjectId g, int a, int b) const override;
  bool map_is_valid(ObjectId x, ObjectId y, const std::vector<int>& map) const override;
  bool payload_is_normal(ObjectId g, const ElemSet& s) const override;
  bool payload_is_conormal(ObjectId g, const ElemSet& s) const override;
  ObjectId build_quotient_object(ObjectId g, const ElemSet& s,
                                 const std::vector<ElemSet>& cosets,
                                 const std::vector<int>& index_of) const override;
  ObjectId build_carrier_object(ObjectId g, const ElemSet& s) const override;

private:
  ObjectId install(const std::string& name, GroupTable t) const;
  void check_bound(const std::string& name, int order) const;

  int max_order_;
  mutable std::vector<GroupTable> tables_;
};

}  // namespace forms
