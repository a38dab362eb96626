#pragma once

#include "forms/model.hpp"

#include <vector>

namespace forms {

enum class Dir { Fwd, Bwd };

inline const char* dir_name(Dir d) { return d == Dir::Fwd ? "fwd" : "bwd"; }

struct Step {
  MorphId morph;
  Dir dir;

  bool operator==(const Step&) const = default;
  bool operator<(const Step& o) const {
    return morph != o.morph ? morph < o.morph : dir < o.dir;
  }
};

// A finite chain of morphisms each pointing forward or backward. A forward
// step has its domain at the previous node; a backward step has its codomain
// there. The zero-length zigzag is represented by one forward identity step.
class Zigzag {
public:
  Zigzag(const Model& m, std::vector<Step> steps);
  static Zigzag loop(const Model& m, ObjectId g);  // identity forward step

  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<ObjectId>& nodes() const { return nodes_; }
  int length() const { return static_cast<int>(steps_.size()); }
  ObjectId initial() const { return nodes_.front(); }
  ObjectId final() const { return nodes_.back(); }

  Zigzag opposite(const Model& m) const;  // reflected horizontally

  bool operator==(const Zigzag& o) const { return steps_ == o.steps_; }
  bool operator<(const Zigzag& o) const { return steps_ < o.steps_; }

private:
  std::vector<Step> steps_;
  std::vector<ObjectId> nodes_;
};

struct ChaseTrace {
  // at[i] is the subobject at node i; a forward chase fills left to right,
  // a backward chase right to left.
  std::vector<SubObject> at;

  const SubObject& result(Dir dir) const { return dir == Dir::Fwd ? at.back() : at.front(); }
};

// Transport a subobject along the zigzag: direct images over steps traversed
// with their arrow, inverse images against it.
ChaseTrace chase(const Model& m, const Zigzag& z, const SubObject& s, Dir dir);

}  // namespace forms
