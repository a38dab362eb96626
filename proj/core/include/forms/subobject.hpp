#pragma once

#include <string>
#include <vector>

namespace forms {

using ObjectId = int;
using MorphId = int;

// Element index sets are kept sorted and duplicate-free, so payload equality
// is set equality.
using ElemSet = std::vector<int>;

ElemSet normalized(ElemSet v);
bool set_contains(const ElemSet& s, int x);
bool is_subset(const ElemSet& a, const ElemSet& b);
ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_intersect(const ElemSet& a, const ElemSet& b);

// "{0,2}" with ascending elements and no spaces.
std::string set_repr(const ElemSet& s);
// Parses the exact shape emitted by set_repr; returns false on malformed text.
bool parse_set(const std::string& text, ElemSet& out);

// A subobject of a model object. The payload is interpreted by the owning
// model; for the concrete models it is a set of element indices of the parent.
struct SubObject {
  ObjectId parent = -1;
  ElemSet elems;

  SubObject() = default;
  SubObject(ObjectId p, ElemSet e) : parent(p), elems(normalized(std::move(e))) {}

  bool operator==(const SubObject&) const = default;
  // (parent, size, lexicographic payload): the enumeration order used everywhere.
  bool operator<(const SubObject& o) const;

  std::string repr() const { return set_repr(elems); }
};

}  // namespace forms
