#pragma once

#include "forms/normality.hpp"
#include "forms/pyramid.hpp"
#include "forms/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace forms {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Executable record of one theorem instance: hypothesis checks, the zigzags
// built exactly as in the corresponding proof, the induced isomorphisms, and
// the independent cross-checks. The verdict passes only if everything holds.
struct TheoremReport {
  std::string theorem;
  std::vector<CheckItem> hypotheses;
  std::vector<CheckItem> checks;
  std::vector<std::string> notes;
  std::vector<MorphId> induced;

  bool passed() const;
  std::string to_text(const Model& m) const;
};

// A ◁ B and C conormal imply A∧C ◁ B∧C; returns the checked conclusion.
bool lemma_meet_normality(const Model& m, const SubObject& a, const SubObject& b,
                          const SubObject& c);
// A ◁ B and C ◁ B∨C imply A∨C ◁ B∨C.
bool lemma_join_normality(const Model& m, const SubObject& a, const SubObject& b,
                          const SubObject& c);

// B conormal and A ◁ A∨B give A∧B ◁ B and B/(A∧B) ≅ (A∨B)/A.
TheoremReport diamond_iso(const Model& m, const SubObject& a, const SubObject& b);

// For normal N and a subobject S of G/N (given by its payload): R = π_N⁻¹S
// satisfies (i) N ⊆ R, π_N R = S; (ii) when S is conormal, N\R = S/1 on the
// nose; (iii) S normal ⇔ R normal, and then G/R ≅ (G/N)/S.
TheoremReport double_quotient(const Model& m, const SubObject& n, const ElemSet& s_payload);

// Ker f ⊆ W ⊆ X with X conormal: W ◁ X ⇔ fW ◁ fX, and then X/W ≅ fX/fW.
TheoremReport image_theorem(const Model& m, MorphId f, const SubObject& w, const SubObject& x);

// S′ ◁ S, T′ ◁ T, all four conormal, the two antenna joins conormal:
// both dashed zigzags induce isomorphisms through (S∧T)/((S′∧T)∨(S∧T′)).
TheoremReport butterfly(const Model& m, const SubObject& s1, const SubObject& s,
                        const SubObject& t1, const SubObject& t);

// X ⊆ Z and (Y normal, Z conormal) or (Y conormal, X normal):
// X∨(Y∧Z) = (X∨Y)∧Z.
TheoremReport restricted_modular_law(const Model& m, const SubObject& x, const SubObject& y,
                                     const SubObject& z);

struct ModularWitness {
  ObjectId object = -1;
  SubObject x, y, z;
  SubObject lhs, rhs;
};

// First triple X ⊆ Z violating the unrestricted modular law over the given
// objects, in deterministic enumeration order.
std::optional<ModularWitness> find_modular_violation(const Model& m,
                                                     const std::vector<ObjectId>& scope);

// Shared verification core: checks the chase criterion, extracts the induced
// morphism, requires it to be an isomorphism, and cross-checks against the
// element relation oracle (element-level models) and end-node cardinality.
MorphId verify_induced_iso(const Model& m, const Zigzag& z, const std::string& label,
                           TheoremReport& report);

}  // namespace forms
