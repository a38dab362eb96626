#pragma once

#include "forms/subobject.hpp"
#include "forms/zigzag.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace forms::dsl {

// Declarations ---------------------------------------------------------

struct GroupDecl {
  std::string name;
  std::string kind;  // cyclic dihedral symmetric klein quaternion table
  int param = 0;     // k, or n for raw tables
  std::vector<int> table;

  bool operator==(const GroupDecl&) const = default;
};

struct RingDecl {
  std::string name;
  int n = 0;
  int one = 0;
  std::vector<int> add;
  std::vector<int> mul;

  bool operator==(const RingDecl&) const = default;
};

struct HomDecl {
  std::string name, dom, cod;
  std::vector<int> map;

  bool operator==(const HomDecl&) const = default;
};

struct SubDecl {
  std::string name, parent;
  ElemSet elems;

  bool operator==(const SubDecl&) const = default;
};

struct ZigzagDecl {
  std::string name;
  std::vector<std::pair<std::string, Dir>> steps;

  bool operator==(const ZigzagDecl&) const = default;
};

struct ScopeDecl {
  std::string name;
  std::vector<std::string> objects;
  std::optional<std::vector<std::string>> homs;

  bool operator==(const ScopeDecl&) const = default;
};

// Commands --------------------------------------------------------------

// A subobject argument: a declared name or a {i,j,...} literal.
struct SubArg {
  std::string name;
  ElemSet lit;
  bool is_literal = false;

  bool operator==(const SubArg&) const = default;
};

struct ChaseCmd {
  std::string zigzag;
  Dir dir = Dir::Fwd;
  SubArg start;

  bool operator==(const ChaseCmd&) const = default;
};

struct ZigzagCmd {  // induce | oracle | pyramid
  std::string verb;
  std::string zigzag;

  bool operator==(const ZigzagCmd&) const = default;
};

struct VerifyAxiomsCmd {
  std::string scope;

  bool operator==(const VerifyAxiomsCmd&) const = default;
};

struct VerifyCmd {  // diamond doublequotient imagetheorem butterfly modularlaw
  std::string verb;
  std::string subject;  // object name, or hom name for imagetheorem
  std::vector<SubArg> args;

  bool operator==(const VerifyCmd&) const = default;
};

struct DualizeCmd {
  bool on = false;

  bool operator==(const DualizeCmd&) const = default;
};

using StatementData = std::variant<GroupDecl, RingDecl, HomDecl, SubDecl, ZigzagDecl, ScopeDecl,
                                   ChaseCmd, ZigzagCmd, VerifyAxiomsCmd, VerifyCmd, DualizeCmd>;

struct Statement {
  int line = 0;
  StatementData data;
};

struct Script {
  std::vector<Statement> statements;
};

// Line-oriented grammar; '#' comments. Enforces unique names per kind and
// declaration before use, so execution never sees an unresolved name.
// Throws syntax / undefined-name / arity errors carrying the line number.
Script parse_script(const std::string& text);

// Canonical text form; parsing it back yields an equal script.
std::string print_script(const Script& s);
std::string print_statement(const StatementData& data);

bool script_equal(const Script& a, const Script& b);  // data equality, positions ignored

struct ExecOptions {
  bool json = false;
  bool fail_fast = false;
};

// Runs the statements in order against fresh models. Failures are reported
// in-stream with their source line and execution continues (unless
// fail_fast). Returns 0 iff every command passed. Output is deterministic:
// equal script and options give byte-identical output.
int execute_script(const Script& s, std::ostream& out, const ExecOptions& opt = {});

// Convenience: parse + execute, reporting parse errors in-stream too.
int run_script_text(const std::string& text, std::ostream& out, const ExecOptions& opt = {});

}  // namespace forms::dsl
