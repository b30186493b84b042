#include "tamb/tnr.hpp"

#include <cctype>

namespace tamb {

const GSet& MapContext::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw InputError("UnknownName", "no G-set named '" + name + "'");
  return it->second;
}

void MapContext::add_set(const std::string& name, GSet s) {
  if (sets.count(name) || maps.count(name)) throw InputError("DuplicateName", "name '" + name + "' already used");
  sets.emplace(name, std::move(s));
}

void MapContext::add_map(const std::string& name, const std::string& source, const std::string& target,
                         std::vector<int> values) {
  if (sets.count(name) || maps.count(name)) throw InputError("DuplicateName", "name '" + name + "' already used");
  maps.emplace(name, NamedMap{source, target, make_map(set(source), set(target), std::move(values))});
}

namespace {

using Kind = TnrNode::Kind;

TnrExpr node(Kind k, std::size_t pos, std::string name = {}, std::vector<TnrExpr> children = {}) {
  return std::make_shared<const TnrNode>(TnrNode{k, std::move(name), pos, std::move(children)});
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  TnrExpr run() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) throw TnrSyntaxError(i_, "unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw TnrSyntaxError(i_, std::string("expected '") + c + "'");
    ++i_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    skip();
    std::size_t b = i_;
    if (i_ >= s_.size() || !ident_start(s_[i_])) throw TnrSyntaxError(i_, "expected a name");
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    return s_.substr(b, i_ - b);
  }

  TnrExpr expr() {
    auto lhs = product();
    while (peek('+')) {
      std::size_t at = i_++;
      lhs = node(Kind::sum, at, {}, {lhs, product()});
    }
    return lhs;
  }
  TnrExpr product() {
    auto lhs = term();
    while (peek('*')) {
      std::size_t at = i_++;
      lhs = node(Kind::product, at, {}, {lhs, term()});
    }
    return lhs;
  }
  TnrExpr term() {
    skip();
    std::size_t at = i_;
    if (i_ >= s_.size()) throw TnrSyntaxError(i_, "unexpected end of input");
    if (s_[i_] == '(') {
      ++i_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (!ident_start(s_[i_])) throw TnrSyntaxError(i_, "unexpected '" + std::string(1, s_[i_]) + "'");
    std::string word = ident();
    if (word == "theta") return node(Kind::theta, at);
    if (word == "t" || word == "n" || word == "r") {
      expect('[');
      std::string name = ident();
      expect(']');
      Kind k = word == "t" ? Kind::transfer : word == "n" ? Kind::norm : Kind::restriction;
      return node(k, at, name, {term()});
    }
    throw TnrSyntaxError(at, "unknown word '" + word + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

std::string print(const TnrNode& e) {
  switch (e.kind) {
    case Kind::theta:
      return "theta";
    case Kind::transfer:
    case Kind::norm:
    case Kind::restriction: {
      const char* op = e.kind == Kind::transfer ? "t" : e.kind == Kind::norm ? "n" : "r";
      const auto& c = *e.children[0];
      std::string arg = print(c);
      if (c.kind == Kind::sum || c.kind == Kind::product) arg = "(" + arg + ")";
      return std::string(op) + "[" + e.name + "] " + arg;
    }
    case Kind::sum:
    case Kind::product: {
      const auto& l = *e.children[0];
      const auto& r = *e.children[1];
      std::string ls = print(l), rs = print(r);
      if (e.kind == Kind::product && l.kind == Kind::sum) ls = "(" + ls + ")";
      // left associative: a right operand of the same or looser kind needs parentheses
      if (r.kind == Kind::sum || (e.kind == Kind::product && r.kind == Kind::product)) rs = "(" + rs + ")";
      return ls + (e.kind == Kind::sum ? " + " : " * ") + rs;
    }
  }
  return {};
}

std::string describe(const TnrNode& e) { return "'" + print(e) + "' at " + std::to_string(e.pos); }

std::string check(const TnrNode& e, const MapContext& ctx, PortAssignment& out) {
  std::string port;
  switch (e.kind) {
    case Kind::theta:
      ctx.set(ctx.T);
      port = ctx.T;
      break;
    case Kind::transfer:
    case Kind::norm:
    case Kind::restriction: {
      auto it = ctx.maps.find(e.name);
      if (it == ctx.maps.end()) throw InputError("UnknownName", "no map named '" + e.name + "' in " + describe(e));
      std::string in = check(*e.children[0], ctx, out);
      const auto& m = it->second;
      const std::string& want = e.kind == Kind::restriction ? m.target : m.source;
      if (in != want)
        throw InputError("PortMismatch", describe(e) + ": argument lives at '" + in + "' but map '" + e.name +
                                             "' needs '" + want + "'");
      port = e.kind == Kind::restriction ? m.source : m.target;
      break;
    }
    case Kind::sum:
    case Kind::product: {
      std::string a = check(*e.children[0], ctx, out), b = check(*e.children[1], ctx, out);
      if (a != b) throw InputError("PortMismatch", describe(e) + ": operands live at '" + a + "' and '" + b + "'");
      port = a;
      break;
    }
  }
  out.ports[&e] = port;
  return port;
}

EffectiveElement eval(const TnrNode& e, const MapContext& ctx) {
  switch (e.kind) {
    case Kind::theta:
      return theta_element(ctx.set(ctx.T));
    case Kind::transfer:
      return transfer(eval(*e.children[0], ctx), ctx.maps.at(e.name).map);
    case Kind::norm:
      return norm(eval(*e.children[0], ctx), ctx.maps.at(e.name).map);
    case Kind::restriction:
      return restrict(eval(*e.children[0], ctx), ctx.maps.at(e.name).map);
    case Kind::sum:
      return bispan_add(eval(*e.children[0], ctx), eval(*e.children[1], ctx));
    case Kind::product:
      return bispan_mul(eval(*e.children[0], ctx), eval(*e.children[1], ctx));
  }
  throw InternalError("unknown node");
}

}  // namespace

TnrExpr parse_tnr(const std::string& text) { return Parser(text).run(); }

std::string pretty_print(const TnrExpr& e) { return print(*e); }

PortAssignment typecheck(const TnrExpr& e, const MapContext& ctx) {
  PortAssignment out;
  out.root = check(*e, ctx, out);
  return out;
}

EffectiveElement evaluate(const TnrExpr& e, const MapContext& ctx) {
  typecheck(e, ctx);
  return eval(*e, ctx);
}

std::string normal_form_expression(const EffectiveElement& e, MapContext& ctx, const std::string& x_name) {
  if (!(e.T() == ctx.set(ctx.T)) || !(e.X() == ctx.set(x_name)))
    throw InputError("PortMismatch", "element ports differ from the context");
  std::string out;
  int idx = 0;
  while (ctx.sets.count("U" + std::to_string(idx)) || ctx.maps.count("a" + std::to_string(idx))) ++idx;
  for (const auto& [key, count] : e.terms()) {
    auto b = realize_key(e.T(), e.X(), key);
    std::string s = std::to_string(idx++);
    ctx.add_set("U" + s, b.U);
    ctx.add_set("V" + s, b.V);
    ctx.add_map("a" + s, "U" + s, ctx.T, b.a);
    ctx.add_map("b" + s, "U" + s, "V" + s, b.b);
    ctx.add_map("c" + s, "V" + s, x_name, b.c);
    std::string word = "t[c" + s + "] n[b" + s + "] r[a" + s + "] theta";
    for (std::uint64_t i = 0; i < count; ++i) out += (out.empty() ? "" : " + ") + word;
  }
  if (out.empty()) {
    // zero: transfer from the empty set
    std::string s = std::to_string(idx);
    ctx.add_set("E" + s, GSet::empty(e.X().group()));
    ctx.add_map("z" + s, "E" + s, x_name, {});
    ctx.add_map("ze" + s, "E" + s, ctx.T, {});
    out = "t[z" + s + "] r[ze" + s + "] theta";
  }
  return out;
}

}  // namespace tamb
