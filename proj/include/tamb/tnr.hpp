#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tamb/bispan.hpp"
#include "tamb/error.hpp"

namespace tamb {

// Named G-sets and maps; one namespace for both. T names the generator.
struct NamedMap {
  std::string source, target;  // set names
  GMap map;
};

struct MapContext {
  std::string T;
  std::map<std::string, GSet> sets;
  std::map<std::string, NamedMap> maps;

  const GSet& set(const std::string& name) const;  // InputError(UnknownName)
  void add_set(const std::string& name, GSet s);   // InputError(DuplicateName)
  void add_map(const std::string& name, const std::string& source, const std::string& target, std::vector<int> values);
};

struct TnrNode {
  enum class Kind { theta, transfer, norm, restriction, sum, product };
  Kind kind;
  std::string name;  // map name for unary nodes
  std::size_t pos;   // byte offset in the source text
  std::vector<std::shared_ptr<const TnrNode>> children;
};
using TnrExpr = std::shared_ptr<const TnrNode>;

class TnrSyntaxError : public InputError {
 public:
  TnrSyntaxError(std::size_t pos, const std::string& message)
      : InputError("SyntaxError", "at " + std::to_string(pos) + ": " + message), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

// expr := term (('+' | '*') term)*, '*' tighter than '+', both left
// associative; term := 'theta' | ('t'|'n'|'r') '[' ident ']' term | '(' expr ')'.
TnrExpr parse_tnr(const std::string& text);
// Minimal parentheses, single spaces around binary operators.
std::string pretty_print(const TnrExpr& e);

// Port (set name) of every node; the root's port is `root`.
struct PortAssignment {
  std::string root;
  std::map<const TnrNode*, std::string> ports;
};
// InputError(UnknownName) or InputError(PortMismatch) naming the node.
PortAssignment typecheck(const TnrExpr& e, const MapContext& ctx);

EffectiveElement evaluate(const TnrExpr& e, const MapContext& ctx);

// Adds maps a_i, b_i, c_i (and sets U_i, V_i) realizing each basis term of
// e to ctx and returns a sum of t[c] n[b] r[a] theta words evaluating to e.
// e must have generator ctx.set(ctx.T) and X = ctx.set(x_name).
std::string normal_form_expression(const EffectiveElement& e, MapContext& ctx, const std::string& x_name);

}  // namespace tamb
