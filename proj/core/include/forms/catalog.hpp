#pragma once

#include "forms/group.hpp"
#include "forms/ring.hpp"

#include <vector>

namespace forms {

// Certification scope for the group model: Z1 Z2 Z3 Z4 K4 Z6 S3 D4 Q8.
std::vector<ObjectId> install_grp_axiom_scope(GroupModel& gm);

// Certification scope for the ring model: zero ring, Z2, Z4, Z6, Z2xZ2.
std::vector<ObjectId> install_ring_axiom_scope(RingModel& rm);

// Every builder-kind group with order <= max_order: cyclic 1..N, klein,
// dihedral k (2k <= N), symmetric k (k! <= N, k >= 3), quaternion (N >= 8).
std::vector<ObjectId> install_grp_catalog(GroupModel& gm, int max_order);

}  // namespace forms
