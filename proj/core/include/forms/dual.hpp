#pragma once

#include "forms/model.hpp"

namespace forms {

// The dual reading of a model: morphisms reversed, each subobject poset
// order-inverted (top and bottom, meet and join swap), direct and inverse
// image maps swapped, normal and conormal swapped, embeddings and
// projections swapped. Every query delegates to the base model, so ids are
// shared and wrapping twice answers every contract query exactly like the
// base model.
//
// The dual of an element-level model is not element-level: its "direct
// image" is a preimage, so it carries no forward element maps.
class DualModel final : public Model {
public:
  explicit DualModel(const Model& base) : base_(base) {}
  // Copying is deleted so that wrapping a DualModel cannot silently degrade
  // into copying its base reference; dualize(dual) must genuinely wrap.
  DualModel(const DualModel&) = delete;
  DualModel& operator=(const DualModel&) = delete;

  const Model& base() const { return base_; }

  bool has_object(ObjectId g) const override { return base_.has_object(g); }
  std::string object_name(ObjectId g) const override { return base_.object_name(g); }
  int object_order(ObjectId g) const override { return base_.object_order(g); }

  SubObject top(ObjectId g) const override { return base_.bottom(g); }
  SubObject bottom(ObjectId g) const override { return base_.top(g); }
  bool is_subobject(const SubObject& s) const override { return base_.is_subobject(s); }
  bool leq(const SubObject& a, const SubObject& b) const override { return base_.leq(b, a); }
  SubObject meet(const SubObject& a, const SubObject& b) const override {
    return base_.join(a, b);
  }
  SubObject join(const SubObject& a, const SubObject& b) const override {
    return base_.meet(a, b);
  }
  std::vector<SubObject> subobjects(ObjectId g) const override { return base_.subobjects(g); }

  ObjectId dom(MorphId f) const override { return base_.cod(f); }
  ObjectId cod(MorphId f) const override { return base_.dom(f); }
  MorphId identity(ObjectId g) const override { return base_.identity(g); }
  MorphId compose(MorphId after, MorphId before) const override {
    return base_.compose(before, after);
  }
  SubObject direct_image(MorphId f, const SubObject& a) const override {
    return base_.inverse_image(f, a);
  }
  SubObject inverse_image(MorphId f, const SubObject& b) const override {
    return base_.direct_image(f, b);
  }
  bool is_embedding(MorphId f) const override { return base_.is_projection(f); }
  bool is_projection(MorphId f) const override { return base_.is_embedding(f); }
  MorphId invert(MorphId f) const override { return base_.invert(f); }

  bool is_normal(const SubObject& s) const override { return base_.is_conormal(s); }
  bool is_conormal(const SubObject& s) const override { return base_.is_normal(s); }
  MorphId canonical_embedding(const SubObject& s) const override {
    return base_.canonical_projection(s);
  }
  MorphId canonical_projection(const SubObject& s) const override {
    return base_.canonical_embedding(s);
  }

  MorphId mediate_through_projection(MorphId p, MorphId g) const override {
    return base_.mediate_through_embedding(p, g);
  }
  MorphId mediate_through_embedding(MorphId m, MorphId f) const override {
    return base_.mediate_through_projection(m, f);
  }

  std::vector<MorphId> enumerate_homs(ObjectId x, ObjectId y) const override {
    return base_.enumerate_homs(y, x);
  }

private:
  const Model& base_;
};

// Always wraps, even when the argument is itself a dual view, so the
// involution can be exercised literally.
inline DualModel dualize(const Model& m) { return DualModel(m); }

}  // namespace forms
