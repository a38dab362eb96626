#pragma once

#include "forms/model.hpp"

namespace forms {

// B ◁ A: B ⊆ A, A is conormal, and ι_A⁻¹B is normal in the carrier of A.
bool normal_to(const Model& m, const SubObject& b, const SubObject& a);

// The dual relation: B is normal, B ⊆ A, and π_B(A) is conormal in G/B.
bool conormal_to(const Model& m, const SubObject& a, const SubObject& b);

// A/B = (A/1)/ι_A⁻¹B, defined when B ◁ A; applies the identity conventions
// (A/1 is the carrier of A, and quotients by the trivial subobject are the
// carrier itself).
ObjectId subquotient(const Model& m, const SubObject& a, const SubObject& b);

// B\A: the carrier of π_B(A) inside G/B, defined when A is conormal to B.
ObjectId coquotient(const Model& m, const SubObject& b, const SubObject& a);

}  // namespace forms
