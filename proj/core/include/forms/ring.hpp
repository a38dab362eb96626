#pragma once

#include "forms/element_model.hpp"

namespace forms {

// A finite ring with identity. The addition table is an abelian group table
// with 0 as neutral element; the zero ring (n = 1, one = 0) is admitted.
struct RingTable {
  int n = 0;
  std::vector<int> add;
  std::vector<int> mul;
  int one = -1;
  std::vector<int> neg;  // additive inverses, derived

  int plus(int a, int b) const { return add[a * n + b]; }
  int times(int a, int b) const { return mul[a * n + b]; }
};

// Validates in order: addition group laws, commutativity of addition,
// associativity of multiplication, distributivity, two-sided identity.
// Throws invalid-ring naming the first violated law.
RingTable make_ring_table(int n, std::vector<int> add, std::vector<int> mul, int one);

// Second model: subobjects are additive subgroups, normal means two-sided
// ideal, conormal means unital subring. The bottom subobject {0} is not
// conormal in any ring with 1 != 0, so canonical embeddings are genuinely
// partial here.
class RingModel final : public ElementModel {
public:
  explicit RingModel(int max_order = 16) : max_order_(max_order) {}

  ObjectId add_ring(const std::string& name, int n, std::vector<int> add, std::vector<int> mul,
                    int one);
  // Z modulo n; n == 1 yields the zero ring.
  ObjectId add_zmod(const std::string& name, int n);
  // Componentwise product; pairs numbered (a,b) -> a*order(b)+b.
  ObjectId add_product(const std::string& name, ObjectId a, ObjectId b);

  const RingTable& table(ObjectId r) const;
  int max_order() const { return max_order_; }

  // (normal, conormal) = (two-sided ideal, unital subring).
  std::pair<bool, bool> classify_subobject(ObjectId r, const SubObject& s) const;
  std::pair<ObjectId, MorphId> quotient_ring(ObjectId r, const SubObject& ideal) const;

protected:
  int op(ObjectId g, int a, int b) const override;  // addition
  bool map_is_valid(ObjectId x, ObjectId y, const std::vector<int>& map) const override;
  bool payload_is_normal(ObjectId g, const ElemSet& s) const override;
  bool payload_is_conormal(ObjectId g, const ElemSet& s) const override;
  ObjectId build_quotient_object(ObjectId g, const ElemSet& s,
                                 const std::vector<ElemSet>& cosets,
                                 const std::vector<int>& index_of) const override;
  ObjectId build_carrier_object(ObjectId g, const ElemSet& s) const override;

private:
  ObjectId install(const std::string& name, RingTable t) const;

  int max_order_;
  mutable std::vector<RingTable> tables_;
};

}  // namespace forms
