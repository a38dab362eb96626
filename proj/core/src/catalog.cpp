#include "forms/catalog.hpp"

namespace forms {

std::vector<ObjectId> install_grp_axiom_scope(GroupModel& gm) {
  std::vector<ObjectId> out;
  out.push_back(gm.add_cyclic("Z1", 1));
  out.push_back(gm.add_cyclic("Z2", 2));
  out.push_back(gm.add_cyclic("Z3", 3));
  out.push_back(gm.add_cyclic("Z4", 4));
  out.push_back(gm.add_klein("K4"));
  out.push_back(gm.add_cyclic("Z6", 6));
  out.push_back(gm.add_symmetric("S3", 3));
  out.push_back(gm.add_dihedral("D4", 4));
  out.push_back(gm.add_quaternion("Q8"));
  return out;
}

std::vector<ObjectId> install_ring_axiom_scope(RingModel& rm) {
  std::vector<ObjectId> out;
  out.push_back(rm.add_zmod("R0", 1));
  out.push_back(rm.add_zmod("Z2r", 2));
  out.push_back(rm.add_zmod("Z4r", 4));
  out.push_back(rm.add_zmod("Z6r", 6));
  ObjectId z2a = rm.add_zmod("Z2a", 2);
  ObjectId z2b = rm.add_zmod("Z2b", 2);
  out.push_back(rm.add_product("Z2xZ2", z2a, z2b));
  return out;
}

std::vector<ObjectId> install_grp_catalog(GroupModel& gm, int max_order) {
  std::vector<ObjectId> out;
  for (int k = 1; k <= max_order; ++k) out.push_back(gm.add_cyclic("Z" + std::to_string(k), k));
  if (max_order >= 4) out.push_back(gm.add_klein("K4"));
  for (int k = 3; 2 * k <= max_order; ++k)
    out.push_back(gm.add_dihedral("D" + std::to_string(k), k));
  long fact = 2;
  for (int k = 3; (fact *= k) <= max_order; ++k)
    out.push_back(gm.add_symmetric("S" + std::to_string(k), k));
  if (max_order >= 8) out.push_back(gm.add_quaternion("Q8"));
  return out;
}

}  // namespace forms
