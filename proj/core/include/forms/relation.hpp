#pragma once

#include "forms/zigzag.hpp"

#include <utility>
#include <vector>

namespace forms {

// Element-level relation between the end nodes of a zigzag: the composite
// of the step graphs (opposite graphs for backward steps). Functionality and
// totality are queried, never assumed.
struct Relation {
  ObjectId from = -1;
  ObjectId to = -1;
  int from_order = 0;
  int to_order = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted

  bool is_total() const;
  bool is_single_valued() const;
  bool is_function() const { return is_total() && is_single_valued(); }
  // The map when is_function(); undefined entries are -1 otherwise.
  std::vector<int> as_map() const;

  std::string repr() const;  // "{(0,0),(1,1)}"
};

// Composes the element relations of the steps. Requires an element-level
// model; the ring model composes on its additive reduct.
Relation relation_oracle(const Model& m, const Zigzag& z);

// True when the relation is a function whose map preserves the structure.
bool relation_is_hom(const Model& m, const Relation& r);

}  // namespace forms
