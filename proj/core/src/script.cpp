#include "forms/script.hpp"

#include "forms/axioms.hpp"
#include "forms/dual.hpp"
#include "forms/group.hpp"
#include "forms/normality.hpp"
#include "forms/pyramid.hpp"
#include "forms/relation.hpp"
#include "forms/ring.hpp"
#include "forms/theorems.hpp"

#include <json.hpp>

#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace forms::dsl {

using njson = nlohmann::ordered_json;

namespace {

[[noreturn]] void perr(int line, Errc code, const std::string& msg) {
  fail(code, "line " + std::to_string(line) + ": " + msg);
}

struct Lines {
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line no, tokens)
};

Lines tokenize(const std::string& text) {
  Lines out;
  std::istringstream is(text);
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.rows.emplace_back(no, std::move(toks));
  }
  return out;
}

bool is_int(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

bool is_name(const std::string& s) {
  if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Declared-name tables used for parse-time resolution and arity checks.
struct Symbols {
  std::map<std::string, int> object_order;
  std::set<std::string> homs, subs, zigzags, scopes;

  void unique(int line, const std::string& kind, const std::string& name, bool taken) {
    if (taken) perr(line, Errc::Syntax, kind + " name '" + name + "' already declared");
  }
};

struct Parser {
  Lines in;
  size_t pos = 0;
  Symbols sym = {};
  Script out = {};

  bool done() const { return pos >= in.rows.size(); }
  int line() const { return in.rows[pos].first; }
  const std::vector<std::string>& toks() const { return in.rows[pos].second; }

  std::vector<int> read_row(int expect, const std::string& what) {
    if (done()) perr(in.rows.back().first, Errc::Syntax, "unexpected end of script in " + what);
    auto [no, ts] = in.rows[pos];
    std::vector<int> row;
    for (const std::string& t : ts) {
      if (!is_int(t)) perr(no, Errc::Syntax, what + " row entries must be integers, got '" + t + "'");
      row.push_back(std::stoi(t));
    }
    if (static_cast<int>(row.size()) != expect)
      perr(no, Errc::Arity, what + " row needs " + std::to_string(expect) + " entries, got " +
                                std::to_string(row.size()));
    ++pos;
    return row;
  }

  SubArg read_subarg(int no, const std::string& t) {
    SubArg a;
    if (!t.empty() && t[0] == '{') {
      if (!parse_set(t, a.lit)) perr(no, Errc::Syntax, "malformed set literal '" + t + "'");
      a.is_literal = true;
      return a;
    }
    if (!is_name(t)) perr(no, Errc::Syntax, "expected set literal or subobject name, got '" + t + "'");
    if (!sym.subs.count(t)) perr(no, Errc::UndefinedName, "subobject '" + t + "' not declared");
    a.name = t;
    return a;
  }

  void need_object(int no, const std::string& n) {
    if (!sym.object_order.count(n)) perr(no, Errc::UndefinedName, "object '" + n + "' not declared");
  }
  void need_hom(int no, const std::string& n) {
    if (!sym.homs.count(n)) perr(no, Errc::UndefinedName, "hom '" + n + "' not declared");
  }

  void parse_group(int no, const std::vector<std::string>& ts) {
    if (ts.size() < 3 || !is_name(ts[1])) perr(no, Errc::Syntax, "usage: group NAME KIND ...");
    GroupDecl d;
    d.name = ts[1];
    d.kind = ts[2];
    sym.unique(no, "object", d.name, sym.object_order.count(d.name) != 0);
    int order = 0;
    if (d.kind == "cyclic" || d.kind == "dihedral" || d.kind == "symmetric" || d.kind == "table") {
      if (ts.size() != 4 || !is_int(ts[3]))
        perr(no, Errc::Syntax, "usage: group NAME " + d.kind + " K");
      d.param = std::stoi(ts[3]);
      if (d.kind == "cyclic") order = d.param;
      if (d.kind == "dihedral") order = 2 * d.param;
      if (d.kind == "symmetric") order = static_cast<int>(factorial(d.param));
      if (d.kind == "table") order = d.param;
    } else if (d.kind == "klein") {
      if (ts.size() != 3) perr(no, Errc::Syntax, "usage: group NAME klein");
      order = 4;
    } else if (d.kind == "quaternion") {
      if (ts.size() != 3) perr(no, Errc::Syntax, "usage: group NAME quaternion");
      order = 8;
    } else {
      perr(no, Errc::Syntax, "unknown group kind '" + d.kind + "'");
    }
    ++pos;
    if (d.kind == "table") {
      for (int r = 0; r < d.param; ++r) {
        auto row = read_row(d.param, "group table");
        d.table.insert(d.table.end(), row.begin(), row.end());
      }
    }
    sym.object_order[d.name] = order;
    out.statements.push_back({no, std::move(d)});
  }

  void parse_ring(int no, const std::vector<std::string>& ts) {
    // ring NAME table N one=I
    if (ts.size() != 5 || !is_name(ts[1]) || ts[2] != "table" || !is_int(ts[3]) ||
        ts[4].rfind("one=", 0) != 0 || !is_int(ts[4].substr(4)))
      perr(no, Errc::Syntax, "usage: ring NAME table N one=I");
    RingDecl d;
    d.name = ts[1];
    d.n = std::stoi(ts[3]);
    d.one = std::stoi(ts[4].substr(4));
    sym.unique(no, "object", d.name, sym.object_order.count(d.name) != 0);
    ++pos;
    for (int r = 0; r < d.n; ++r) {
      auto row = read_row(d.n, "ring addition");
      d.add.insert(d.add.end(), row.begin(), row.end());
    }
    if (done() || toks() != std::vector<std::string>{"mul"})
      perr(done() ? no : line(), Errc::Syntax, "expected 'mul' separator in ring declaration");
    ++pos;
    for (int r = 0; r < d.n; ++r) {
      auto row = read_row(d.n, "ring multiplication");
      d.mul.insert(d.mul.end(), row.begin(), row.end());
    }
    sym.object_order[d.name] = d.n;
    out.statements.push_back({no, std::move(d)});
  }

  void parse_hom(int no, const std::vector<std::string>& ts) {
    // hom NAME : A -> B map i...
    if (ts.size() < 7 || !is_name(ts[1]) || ts[2] != ":" || ts[4] != "->" || ts[6] != "map")
      perr(no, Errc::Syntax, "usage: hom NAME : DOM -> COD map i0 i1 ...");
    HomDecl d;
    d.name = ts[1];
    d.dom = ts[3];
    d.cod = ts[5];
    sym.unique(no, "hom", d.name, sym.homs.count(d.name) != 0);
    need_object(no, d.dom);
    need_object(no, d.cod);
    for (size_t i = 7; i < ts.size(); ++i) {
      if (!is_int(ts[i])) perr(no, Errc::Syntax, "map entries must be integers");
      d.map.push_back(std::stoi(ts[i]));
    }
    if (static_cast<int>(d.map.size()) != sym.object_order[d.dom])
      perr(no, Errc::Arity, "map needs " + std::to_string(sym.object_order[d.dom]) +
                                " entries for domain " + d.dom + ", got " +
                                std::to_string(d.map.size()));
    sym.homs.insert(d.name);
    ++pos;
    out.statements.push_back({no, std::move(d)});
  }

  void parse_sub(int no, const std::vector<std::string>& ts) {
    // sub NAME of G = {i,j}
    if (ts.size() != 6 || !is_name(ts[1]) || ts[2] != "of" || ts[4] != "=")
      perr(no, Errc::Syntax, "usage: sub NAME of OBJECT = {i,j,...}");
    SubDecl d;
    d.name = ts[1];
    d.parent = ts[3];
    sym.unique(no, "sub", d.name, sym.subs.count(d.name) != 0);
    need_object(no, d.parent);
    if (!parse_set(ts[5], d.elems)) perr(no, Errc::Syntax, "malformed set literal '" + ts[5] + "'");
    sym.subs.insert(d.name);
    ++pos;
    out.statements.push_back({no, std::move(d)});
  }

  void parse_zigzag(int no, const std::vector<std::string>& ts) {
    // zigzag NAME = f fwd, g bwd, ...
    if (ts.size() < 5 || !is_name(ts[1]) || ts[2] != "=")
      perr(no, Errc::Syntax, "usage: zigzag NAME = HOM fwd|bwd, ...");
    ZigzagDecl d;
    d.name = ts[1];
    sym.unique(no, "zigzag", d.name, sym.zigzags.count(d.name) != 0);
    size_t i = 3;
    while (i < ts.size()) {
      std::string h = ts[i];
      if (i + 1 >= ts.size()) perr(no, Errc::Syntax, "zigzag step missing direction");
      std::string dir = ts[i + 1];
      while (!dir.empty() && dir.back() == ',') dir.pop_back();
      need_hom(no, h);
      if (dir != "fwd" && dir != "bwd")
        perr(no, Errc::Syntax, "zigzag direction must be fwd or bwd, got '" + dir + "'");
      d.steps.emplace_back(h, dir == "fwd" ? Dir::Fwd : Dir::Bwd);
      i += 2;
    }
    sym.zigzags.insert(d.name);
    ++pos;
    out.statements.push_back({no, std::move(d)});
  }

  void parse_scope(int no, const std::vector<std::string>& ts) {
    // scope NAME = A B C [homs f g]
    if (ts.size() < 4 || !is_name(ts[1]) || ts[2] != "=")
      perr(no, Errc::Syntax, "usage: scope NAME = OBJ... [homs HOM...]");
    ScopeDecl d;
    d.name = ts[1];
    sym.unique(no, "scope", d.name, sym.scopes.count(d.name) != 0);
    size_t i = 3;
    for (; i < ts.size() && ts[i] != "homs"; ++i) {
      need_object(no, ts[i]);
      d.objects.push_back(ts[i]);
    }
    if (d.objects.empty()) perr(no, Errc::Syntax, "scope needs at least one object");
    if (i < ts.size()) {  // homs ...
      d.homs.emplace();
      for (++i; i < ts.size(); ++i) {
        need_hom(no, ts[i]);
        d.homs->push_back(ts[i]);
      }
    }
    sym.scopes.insert(d.name);
    ++pos;
    out.statements.push_back({no, std::move(d)});
  }

  void parse_verify(int no, const std::vector<std::string>& ts) {
    if (ts.size() < 2) perr(no, Errc::Syntax, "usage: verify VERB ...");
    const std::string& verb = ts[1];
    if (verb == "axioms") {
      if (ts.size() != 3) perr(no, Errc::Syntax, "usage: verify axioms SCOPE");
      if (!sym.scopes.count(ts[2])) perr(no, Errc::UndefinedName, "scope '" + ts[2] + "' not declared");
      ++pos;
      out.statements.push_back({no, VerifyAxiomsCmd{ts[2]}});
      return;
    }
    static const std::map<std::string, int> arity{{"diamond", 2},
                                                  {"doublequotient", 2},
                                                  {"imagetheorem", 2},
                                                  {"butterfly", 4},
                                                  {"modularlaw", 3}};
    auto it = arity.find(verb);
    if (it == arity.end()) perr(no, Errc::Syntax, "unknown verify verb '" + verb + "'");
    if (static_cast<int>(ts.size()) != 3 + it->second)
      perr(no, Errc::Arity, "verify " + verb + " needs " + std::to_string(1 + it->second) +
                                " arguments");
    VerifyCmd d;
    d.verb = verb;
    d.subject = ts[2];
    if (verb == "imagetheorem")
      need_hom(no, d.subject);
    else
      need_object(no, d.subject);
    for (size_t i = 3; i < ts.size(); ++i) d.args.push_back(read_subarg(no, ts[i]));
    ++pos;
    out.statements.push_back({no, std::move(d)});
  }

  void parse_one() {
    int no = line();
    const auto ts = toks();
    const std::string& head = ts[0];
    if (head == "group") return parse_group(no, ts);
    if (head == "ring") return parse_ring(no, ts);
    if (head == "hom") return parse_hom(no, ts);
    if (head == "sub") return parse_sub(no, ts);
    if (head == "zigzag") return parse_zigzag(no, ts);
    if (head == "scope") return parse_scope(no, ts);
    if (head == "verify") return parse_verify(no, ts);
    if (head == "chase") {
      if (ts.size() != 4 || (ts[2] != "fwd" && ts[2] != "bwd"))
        perr(no, Errc::Syntax, "usage: chase ZIGZAG fwd|bwd START");
      if (!sym.zigzags.count(ts[1]))
        perr(no, Errc::UndefinedName, "zigzag '" + ts[1] + "' not declared");
      ChaseCmd d{ts[1], ts[2] == "fwd" ? Dir::Fwd : Dir::Bwd, read_subarg(no, ts[3])};
      ++pos;
      out.statements.push_back({no, std::move(d)});
      return;
    }
    if (head == "induce" || head == "oracle" || head == "pyramid") {
      if (ts.size() != 2) perr(no, Errc::Syntax, "usage: " + head + " ZIGZAG");
      if (!sym.zigzags.count(ts[1]))
        perr(no, Errc::UndefinedName, "zigzag '" + ts[1] + "' not declared");
      ++pos;
      out.statements.push_back({no, ZigzagCmd{head, ts[1]}});
      return;
    }
    if (head == "dualize") {
      if (ts.size() != 2 || (ts[1] != "on" && ts[1] != "off"))
        perr(no, Errc::Syntax, "usage: dualize on|off");
      ++pos;
      out.statements.push_back({no, DualizeCmd{ts[1] == "on"}});
      return;
    }
    perr(no, Errc::Syntax, "unknown statement '" + head + "'");
  }
};

}  // namespace

Script parse_script(const std::string& text) {
  Parser p{.in = tokenize(text)};
  while (!p.done()) p.parse_one();
  return p.out;
}

namespace {

std::string row_text(const std::vector<int>& flat, int n, int row) {
  std::ostringstream os;
  for (int j = 0; j < n; ++j) {
    if (j) os << ' ';
    os << flat[row * n + j];
  }
  return os.str();
}

std::string subarg_text(const SubArg& a) { return a.is_literal ? set_repr(a.lit) : a.name; }

struct StatementPrinter {
  std::ostringstream os;

  void operator()(const GroupDecl& d) {
    os << "group " << d.name << ' ' << d.kind;
    if (d.kind != "klein" && d.kind != "quaternion") os << ' ' << d.param;
    if (d.kind == "table")
      for (int r = 0; r < d.param; ++r) os << '\n' << row_text(d.table, d.param, r);
  }
  void operator()(const RingDecl& d) {
    os << "ring " << d.name << " table " << d.n << " one=" << d.one;
    for (int r = 0; r < d.n; ++r) os << '\n' << row_text(d.add, d.n, r);
    os << "\nmul";
    for (int r = 0; r < d.n; ++r) os << '\n' << row_text(d.mul, d.n, r);
  }
  void operator()(const HomDecl& d) {
    os << "hom " << d.name << " : " << d.dom << " -> " << d.cod << " map";
    for (int v : d.map) os << ' ' << v;
  }
  void operator()(const SubDecl& d) {
    os << "sub " << d.name << " of " << d.parent << " = " << set_repr(d.elems);
  }
  void operator()(const ZigzagDecl& d) {
    os << "zigzag " << d.name << " =";
    for (size_t i = 0; i < d.steps.size(); ++i)
      os << (i ? ", " : " ") << d.steps[i].first << ' ' << dir_name(d.steps[i].second);
  }
  void operator()(const ScopeDecl& d) {
    os << "scope " << d.name << " =";
    for (const auto& o : d.objects) os << ' ' << o;
    if (d.homs) {
      os << " homs";
      for (const auto& h : *d.homs) os << ' ' << h;
    }
  }
  void operator()(const ChaseCmd& d) {
    os << "chase " << d.zigzag << ' ' << dir_name(d.dir) << ' ' << subarg_text(d.start);
  }
  void operator()(const ZigzagCmd& d) { os << d.verb << ' ' << d.zigzag; }
  void operator()(const VerifyAxiomsCmd& d) { os << "verify axioms " << d.scope; }
  void operator()(const VerifyCmd& d) {
    os << "verify " << d.verb << ' ' << d.subject;
    for (const SubArg& a : d.args) os << ' ' << subarg_text(a);
  }
  void operator()(const DualizeCmd& d) { os << "dualize " << (d.on ? "on" : "off"); }
};

}  // namespace

std::string print_statement(const StatementData& data) {
  StatementPrinter p;
  std::visit(p, data);
  return p.os.str();
}

std::string print_script(const Script& s) {
  std::ostringstream os;
  for (const Statement& st : s.statements) os << print_statement(st.data) << '\n';
  return os.str();
}

bool script_equal(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (size_t i = 0; i < a.statements.size(); ++i)
    if (a.statements[i].data != b.statements[i].data) return false;
  return true;
}

// -- execution ---------------------------------------------------------------

namespace {

struct Workspace {
  GroupModel gm{24};
  RingModel rm{16};
  DualModel gdual{gm};
  DualModel rdual{rm};
  bool dual = false;

  std::map<std::string, std::pair<char, ObjectId>> objects;  // 'g' or 'r'
  std::map<std::string, std::pair<char, MorphId>> homs;
  std::map<std::string, std::pair<char, SubObject>> subs;
  std::map<std::string, ZigzagDecl> zigzags;
  std::map<std::string, ScopeDecl> scopes;

  const Model& active(char which) const {
    if (which == 'g') return dual ? static_cast<const Model&>(gdual) : gm;
    return dual ? static_cast<const Model&>(rdual) : rm;
  }
};

struct Executor {
  const ExecOptions& opt;
  std::ostream& out;
  Workspace ws = {};
  bool any_fail = false;
  int line = 0;

  void emit_json(const njson& j) {
    njson rec;
    rec["line"] = line;
    rec.update(j);
    out << rec.dump() << '\n';
  }

  void text_echo(const StatementData& d) {
    if (!opt.json) out << print_statement(d) << '\n';
  }

  void ok_line() {
    if (!opt.json) out << "OK\n";
  }

  void fail_line(const StatementData& d, const Error& e, const char* stmt_kind) {
    any_fail = true;
    if (opt.json) {
      njson j;
      j["stmt"] = stmt_kind;
      j["status"] = "fail";
      j["error"] = errc_name(e.code());
      j["detail"] = e.detail();
      emit_json(std::move(j));
    } else {
      if (stmt_kind != std::string("command")) out << "line " << line << ": ";
      out << "FAIL " << e.what() << '\n';
    }
    (void)d;
  }

  char model_of_object(const std::string& name) {
    auto it = ws.objects.find(name);
    if (it == ws.objects.end())
      fail(Errc::UndefinedName, "object '" + name + "' was not created (declaration failed?)");
    return it->second.first;
  }

  SubObject resolve_arg(const SubArg& a, char model, ObjectId parent) {
    if (a.is_literal) return SubObject(parent, a.lit);
    auto it = ws.subs.find(a.name);
    if (it == ws.subs.end())
      fail(Errc::UndefinedName, "subobject '" + a.name + "' was not created");
    if (it->second.first != model || it->second.second.parent != parent)
      fail(Errc::ParentMismatch, "subobject '" + a.name + "' does not live in the expected object");
    return it->second.second;
  }

  Zigzag build_zigzag(const std::string& name, const Model& m, char model) {
    const ZigzagDecl& d = ws.zigzags.at(name);
    std::vector<Step> steps;
    for (const auto& [h, dir] : d.steps) {
      auto it = ws.homs.find(h);
      if (it == ws.homs.end()) fail(Errc::UndefinedName, "hom '" + h + "' was not created");
      if (it->second.first != model)
        fail(Errc::ParentMismatch, "zigzag '" + name + "' mixes group and ring morphisms");
      steps.push_back({it->second.second, dir});
    }
    return Zigzag(m, std::move(steps));
  }

  char zigzag_model(const std::string& name) {
    const ZigzagDecl& d = ws.zigzags.at(name);
    auto it = ws.homs.find(d.steps.front().first);
    if (it == ws.homs.end())
      fail(Errc::UndefinedName, "hom '" + d.steps.front().first + "' was not created");
    return it->second.first;
  }

  // -- declarations -------------------------------------------------------

  void exec(const GroupDecl& d) {
    ObjectId id;
    if (d.kind == "cyclic") id = ws.gm.add_cyclic(d.name, d.param);
    else if (d.kind == "dihedral") id = ws.gm.add_dihedral(d.name, d.param);
    else if (d.kind == "symmetric") id = ws.gm.add_symmetric(d.name, d.param);
    else if (d.kind == "klein") id = ws.gm.add_klein(d.name);
    else if (d.kind == "quaternion") id = ws.gm.add_quaternion(d.name);
    else id = ws.gm.add_table(d.name, d.param, d.table);
    ws.objects[d.name] = {'g', id};
  }

  void exec(const RingDecl& d) {
    ObjectId id = ws.rm.add_ring(d.name, d.n, d.add, d.mul, d.one);
    ws.objects[d.name] = {'r', id};
  }

  void exec(const HomDecl& d) {
    char md = model_of_object(d.dom);
    char mc = model_of_object(d.cod);
    if (md != mc) fail(Errc::InvalidHom, "hom endpoints mix group and ring objects");
    ObjectId dom = ws.objects[d.dom].second, cod = ws.objects[d.cod].second;
    MorphId id = md == 'g' ? ws.gm.register_morphism(dom, cod, d.map)
                           : ws.rm.register_morphism(dom, cod, d.map);
    ws.homs[d.name] = {md, id};
  }

  void exec(const SubDecl& d) {
    char md = model_of_object(d.parent);
    SubObject s(ws.objects[d.parent].second, d.elems);
    const Model& m = md == 'g' ? static_cast<const Model&>(ws.gm) : ws.rm;
    if (!m.is_subobject(s)) {
      Errc code = md == 'r' ? Errc::NotAdditiveSubgroup : Errc::InvalidSubobject;
      fail(code, set_repr(d.elems) + " is not a subobject of " + d.parent);
    }
    ws.subs[d.name] = {md, s};
  }

  void exec(const ZigzagDecl& d) {
    char md = 0;
    for (const auto& [h, dir] : d.steps) {
      auto it = ws.homs.find(h);
      if (it == ws.homs.end()) fail(Errc::UndefinedName, "hom '" + h + "' was not created");
      if (md == 0) md = it->second.first;
      if (it->second.first != md)
        fail(Errc::InvalidHom, "zigzag mixes group and ring morphisms");
    }
    // chaining is validated against the primal model at declaration
    const Model& m = md == 'g' ? static_cast<const Model&>(ws.gm) : ws.rm;
    std::vector<Step> steps;
    for (const auto& [h, dir] : d.steps) steps.push_back({ws.homs[h].second, dir});
    Zigzag check(m, std::move(steps));
    (void)check;
    ws.zigzags[d.name] = d;
  }

  void exec(const ScopeDecl& d) {
    char md = 0;
    for (const std::string& o : d.objects) {
      char mo = model_of_object(o);
      if (md == 0) md = mo;
      if (mo != md) fail(Errc::ParentMismatch, "scope mixes group and ring objects");
    }
    if (d.homs)
      for (const std::string& h : *d.homs) {
        auto it = ws.homs.find(h);
        if (it == ws.homs.end()) fail(Errc::UndefinedName, "hom '" + h + "' was not created");
        if (it->second.first != md) fail(Errc::ParentMismatch, "scope homs mix models");
      }
    ws.scopes[d.name] = d;
  }

  // -- commands -----------------------------------------------------------

  void exec(const ChaseCmd& d) {
    char md = zigzag_model(d.zigzag);
    const Model& m = ws.active(md);
    Zigzag z = build_zigzag(d.zigzag, m, md);
    ObjectId start_node = d.dir == Dir::Fwd ? z.initial() : z.final();
    SubObject s = resolve_arg(d.start, md, start_node);
    ChaseTrace tr = chase(m, z, s, d.dir);
    if (opt.json) {
      njson j;
      j["cmd"] = "chase";
      j["zigzag"] = d.zigzag;
      j["dir"] = dir_name(d.dir);
      j["start"] = s.repr();
      njson trace = njson::array();
      for (const SubObject& t : tr.at) trace.push_back(t.repr());
      j["trace"] = std::move(trace);
      j["status"] = "ok";
      emit_json(std::move(j));
    } else {
      for (size_t i = 0; i < tr.at.size(); ++i)
        out << "  [" << i << "] " << m.object_name(z.nodes()[i]) << " " << tr.at[i].repr() << '\n';
      ok_line();
    }
  }

  void exec(const ZigzagCmd& d) {
    char md = zigzag_model(d.zigzag);
    const Model& m = ws.active(md);
    Zigzag z = build_zigzag(d.zigzag, m, md);
    if (d.verb == "induce") {
      MorphId f = induced_homomorphism(m, z);
      if (opt.json) {
        njson j;
        j["cmd"] = "induce";
        j["zigzag"] = d.zigzag;
        j["induced"] = m.morph_repr(f);
        j["status"] = "ok";
        emit_json(std::move(j));
      } else {
        out << "  induced " << m.morph_repr(f) << '\n';
        ok_line();
      }
    } else if (d.verb == "oracle") {
      Relation r = relation_oracle(m, z);
      bool hom = relation_is_hom(m, r);
      if (opt.json) {
        njson j;
        j["cmd"] = "oracle";
        j["zigzag"] = d.zigzag;
        j["relation"] = r.repr();
        j["total"] = r.is_total();
        j["single"] = r.is_single_valued();
        j["function"] = r.is_function();
        if (r.is_function()) j["hom"] = hom;
        j["status"] = "ok";
        emit_json(std::move(j));
      } else {
        out << "  relation " << r.repr() << '\n';
        out << "  total " << (r.is_total() ? "yes" : "no") << " single "
            << (r.is_single_valued() ? "yes" : "no") << " function "
            << (r.is_function() ? "yes" : "no");
        if (r.is_function()) out << " hom " << (hom ? "yes" : "no");
        out << '\n';
        ok_line();
      }
    } else {  // pyramid
      Pyramid pyr = build_pyramid(m, z);
      pyr.validate(m, z);
      std::string text = pyramid_text(m, pyr);
      if (opt.json) {
        njson j;
        j["cmd"] = "pyramid";
        j["zigzag"] = d.zigzag;
        j["nodes"] = pyr.node_count();
        j["text"] = text;
        j["status"] = "ok";
        emit_json(std::move(j));
      } else {
        out << text;
        ok_line();
      }
    }
  }

  void exec(const VerifyAxiomsCmd& d) {
    const ScopeDecl& sd = ws.scopes.at(d.scope);
    char md = model_of_object(sd.objects.front());
    const Model& m = ws.active(md);
    Scope sc;
    for (const std::string& o : sd.objects) sc.objects.push_back(ws.objects[o].second);
    if (sd.homs) {
      sc.morphisms.emplace();
      for (const std::string& h : *sd.homs) sc.morphisms->push_back(ws.homs[h].second);
    }
    AxiomReport rep = check_axioms(m, sc);
    if (opt.json) {
      njson j;
      j["cmd"] = "verify";
      j["verb"] = "axioms";
      j["scope"] = d.scope;
      njson verdicts = njson::object();
      for (auto& [k, v] : rep.verdicts) verdicts[k] = v;
      j["verdicts"] = std::move(verdicts);
      j["instances"] = rep.instances;
      njson viols = njson::array();
      for (const Violation& v : rep.violations) viols.push_back({{"check", v.check}, {"witness", v.witness}});
      j["violations"] = std::move(viols);
      j["status"] = rep.passed() ? "ok" : "fail";
      emit_json(std::move(j));
      if (!rep.passed()) any_fail = true;
    } else {
      out << rep.to_text();
      if (rep.passed()) {
        ok_line();
      } else {
        any_fail = true;
        out << "FAIL axiom violations: " << rep.violations.size() << '\n';
      }
    }
  }

  void exec(const VerifyCmd& d) {
    char md;
    ObjectId subject = -1;
    MorphId hom = -1;
    if (d.verb == "imagetheorem") {
      auto it = ws.homs.find(d.subject);
      if (it == ws.homs.end()) fail(Errc::UndefinedName, "hom '" + d.subject + "' was not created");
      md = it->second.first;
      hom = it->second.second;
    } else {
      md = model_of_object(d.subject);
      subject = ws.objects[d.subject].second;
    }
    const Model& m = ws.active(md);
    TheoremReport rep;
    if (d.verb == "diamond") {
      rep = diamond_iso(m, resolve_arg(d.args[0], md, subject), resolve_arg(d.args[1], md, subject));
    } else if (d.verb == "doublequotient") {
      if (!d.args[1].is_literal)
        fail(Errc::Arity, "doublequotient S argument must be a set literal in the quotient");
      rep = double_quotient(m, resolve_arg(d.args[0], md, subject), d.args[1].lit);
    } else if (d.verb == "imagetheorem") {
      ObjectId dom = m.dom(hom);
      rep = image_theorem(m, hom, resolve_arg(d.args[0], md, dom), resolve_arg(d.args[1], md, dom));
    } else if (d.verb == "butterfly") {
      rep = butterfly(m, resolve_arg(d.args[0], md, subject), resolve_arg(d.args[1], md, subject),
                      resolve_arg(d.args[2], md, subject), resolve_arg(d.args[3], md, subject));
    } else {  // modularlaw
      rep = restricted_modular_law(m, resolve_arg(d.args[0], md, subject),
                                   resolve_arg(d.args[1], md, subject),
                                   resolve_arg(d.args[2], md, subject));
    }
    if (opt.json) {
      njson j;
      j["cmd"] = "verify";
      j["verb"] = d.verb;
      j["subject"] = d.subject;
      njson args = njson::array();
      for (const SubArg& a : d.args) args.push_back(subarg_text(a));
      j["args"] = std::move(args);
      auto items = [](const std::vector<CheckItem>& v) {
        njson arr = njson::array();
        for (const CheckItem& c : v)
          arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        return arr;
      };
      j["hypotheses"] = items(rep.hypotheses);
      j["checks"] = items(rep.checks);
      j["notes"] = rep.notes;
      njson ind = njson::array();
      for (MorphId f : rep.induced) ind.push_back(m.morph_repr(f));
      j["induced"] = std::move(ind);
      j["status"] = rep.passed() ? "ok" : "fail";
      emit_json(std::move(j));
      if (!rep.passed()) any_fail = true;
    } else {
      out << rep.to_text(m);
      if (rep.passed()) {
        ok_line();
      } else {
        any_fail = true;
        out << "FAIL theorem checks failed\n";
      }
    }
  }

  void exec(const DualizeCmd& d) {
    ws.dual = d.on;
    if (opt.json) {
      njson j;
      j["cmd"] = "dualize";
      j["on"] = d.on;
      j["status"] = "ok";
      emit_json(std::move(j));
    } else {
      ok_line();
    }
  }

  bool is_command(const StatementData& d) const {
    return std::holds_alternative<ChaseCmd>(d) || std::holds_alternative<ZigzagCmd>(d) ||
           std::holds_alternative<VerifyAxiomsCmd>(d) || std::holds_alternative<VerifyCmd>(d) ||
           std::holds_alternative<DualizeCmd>(d);
  }

  const char* kind_name(const StatementData& d) const {
    if (std::holds_alternative<GroupDecl>(d)) return "group";
    if (std::holds_alternative<RingDecl>(d)) return "ring";
    if (std::holds_alternative<HomDecl>(d)) return "hom";
    if (std::holds_alternative<SubDecl>(d)) return "sub";
    if (std::holds_alternative<ZigzagDecl>(d)) return "zigzag";
    if (std::holds_alternative<ScopeDecl>(d)) return "scope";
    return "command";
  }

  int run(const Script& s) {
    for (const Statement& st : s.statements) {
      line = st.line;
      bool command = is_command(st.data);
      try {
        if (command) text_echo(st.data);
        std::visit([this](const auto& d) { this->exec(d); }, st.data);
      } catch (const Error& e) {
        fail_line(st.data, e, kind_name(st.data));
        if (opt.fail_fast) return 1;
      }
    }
    return any_fail ? 1 : 0;
  }
};

}  // namespace

int execute_script(const Script& s, std::ostream& out, const ExecOptions& opt) {
  Executor ex{.opt = opt, .out = out};
  return ex.run(s);
}

int run_script_text(const std::string& text, std::ostream& out, const ExecOptions& opt) {
  Script s;
  try {
    s = parse_script(text);
  } catch (const Error& e) {
    if (opt.json) {
      njson j;
      j["stmt"] = "parse";
      j["status"] = "fail";
      j["error"] = errc_name(e.code());
      j["detail"] = e.detail();
      out << j.dump() << '\n';
    } else {
      out << "FAIL " << e.what() << '\n';
    }
    return 1;
  }
  return execute_script(s, out, opt);
}

}  // namespace forms::dsl
