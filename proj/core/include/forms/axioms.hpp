#pragma once

#include "forms/model.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace forms {

// Finitization of the universal quantifiers: the objects under test, an
// optional explicit morphism list (otherwise all morphisms between scope
// objects are enumerated), and the closure level. At closure depth 1 the
// objects created while checking the listed scope (subobject carriers,
// quotients, factorization middles) join a secondary list once: they receive
// the object-local checks and their canonical providers are certified
// against morphisms sourced from the listed objects, while the
// morphism-global quantifiers (composition laws, Galois identities,
// factorization) range over the listed objects' morphisms.
struct Scope {
  std::vector<ObjectId> objects;
  std::optional<std::vector<MorphId>> morphisms;
  int closure_depth = 1;
};

struct Violation {
  std::string check;
  std::string witness;

  bool operator==(const Violation&) const = default;
};

struct AxiomReport {
  // (check key, verdict) sorted by key; a key appears iff it was selected.
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<Violation> violations;
  long instances = 0;

  bool passed() const;
  bool verdict_for(const std::string& key) const;
  std::string to_text() const;
};

// Exhaustively certifies the selected axioms over the scope. Violations are
// report content with a minimal witness, never exceptions; a model whose
// canonical provider throws is reported as an existence violation.
AxiomReport check_axioms(const Model& m, const Scope& sc,
                         const std::set<int>& which = {1, 2, 3, 4, 5});

// The derived laws; failures indicate implementation bugs, since the
// observations follow from the axioms.
AxiomReport check_observations(const Model& m, const Scope& sc);

struct DualityReport {
  AxiomReport primal;
  AxiomReport dual;
  bool verdicts_match = false;

  std::string to_text() const;
};

// Certifies the dual model over the same scope and asserts verdict equality
// axiom-by-axiom (each axiom is self-dual).
DualityReport duality_selftest(const Model& m, const Scope& sc);

// Every contract query over the scope, asked of dualize(dualize(m)) and of m;
// returns the mismatches (empty means the involution is exact).
std::vector<Violation> double_dual_mismatches(const Model& m, const Scope& sc);

}  // namespace forms
