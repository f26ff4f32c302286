#include "qlpf/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "qlpf/error.hpp"
#include "qlpf/table1.hpp"

namespace qlpf {

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { ident, integer, sym, option, sep, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
  bool space_before = false;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  int depth = 0;  // newlines inside brackets do not end a statement
  bool space = true;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  static const char* const kSymbols[] = {"(+)", "(*)", "<<", ">>", "<", ">", "(", ")", "{", "}",
                                         ",",   "+",   "-",  "*",  "/", "^", "="};
  while (i < src.size()) {
    const char c = src[i];
    Token t;
    t.line = line;
    t.col = col;
    t.space_before = space;
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n' && depth > 0) {
      advance(1);
      space = true;
      continue;
    }
    if (c == ';' || c == '\n') {
      t.kind = Tok::sep;
      t.text = std::string(1, c);
      out.push_back(t);
      advance(1);
      space = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      space = true;
      continue;
    }
    space = false;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::ident;
      t.text = std::string(src.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::integer;
      t.text = std::string(src.substr(i, j - i));
      if (t.text.size() > 18) throw ParseError("integer literal too large", line, col);
      t.value = std::stoll(t.text);
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (t.space_before && src.substr(i, 2) == "--" && i + 2 < src.size() &&
        std::isalpha(static_cast<unsigned char>(src[i + 2]))) {
      std::size_t j = i + 2;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '-')) ++j;
      t.kind = Tok::option;
      t.text = std::string(src.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const char* s : kSymbols) {
      const std::string_view sv(s);
      if (src.substr(i, sv.size()) == sv) {
        t.kind = Tok::sym;
        t.text = std::string(sv);
        if (sv == "(" || sv == "<" || sv == "<<" || sv == "{") ++depth;
        if ((sv == ")" || sv == ">" || sv == ">>" || sv == "}") && depth > 0) --depth;
        out.push_back(t);
        advance(sv.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }
  Token end;
  end.kind = Tok::end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

const std::set<std::string> kCommands = {"aniso", "defect", "norm",     "pindep",      "pbasis",       "minimal",
                                         "tower", "pisp",   "fsp-min", "fsp-pfister", "fsp-neighbor", "verify-table1"};

}  // namespace

// ---------------------------------------------------------------------------
// Parser and evaluator

class Parser {
 public:
  Parser(Session& s, std::vector<Token> toks) : s_(s), t_(std::move(toks)) {}

  void run(const Session::Sink& sink) {
    for (;;) {
      while (peek().kind == Tok::sep) ++pos_;
      if (peek().kind == Tok::end) return;
      statement(sink);
      if (peek().kind != Tok::sep && peek().kind != Tok::end) fail("expected ';' or end of line");
    }
  }

  Value value_only() {
    Value v = value();
    if (peek().kind != Tok::end) fail("unexpected trailing input");
    return v;
  }

 private:
  // -- token helpers
  const Token& peek(std::size_t ahead = 0) const { return t_[std::min(pos_ + ahead, t_.size() - 1)]; }
  bool is_sym(const char* s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::sym && peek(ahead).text == s;
  }
  bool is_ident(const char* s) const { return peek().kind == Tok::ident && peek().text == s; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw ParseError(msg + (t.kind == Tok::end ? " at end of input" : " near '" + t.text + "'"), t.line, t.col);
  }
  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }
  long long expect_int() {
    if (peek().kind != Tok::integer) fail("expected an integer");
    return t_[pos_++].value;
  }
  std::string expect_ident() {
    if (peek().kind != Tok::ident) fail("expected a name");
    return t_[pos_++].text;
  }
  const Field& field() const {
    if (!s_.field_) fail("no field declared; start with `field GF(p)(x,...)`");
    return s_.field_;
  }
  const Value* bound(const std::string& name) const {
    auto it = s_.bindings_.find(name);
    return it == s_.bindings_.end() ? nullptr : &it->second;
  }
  template <typename T>
  bool ident_bound_to(std::size_t ahead = 0) const {
    if (peek(ahead).kind != Tok::ident) return false;
    const Value* v = bound(peek(ahead).text);
    return v && std::holds_alternative<T>(*v);
  }

  // Runs f; on ParseError restores the position and returns false.
  template <typename F>
  bool attempt(F f, std::optional<ParseError>* err = nullptr) {
    const std::size_t save = pos_;
    try {
      f();
      return true;
    } catch (const ParseError& e) {
      if (err && (!*err || pos_ > furthest_)) {
        *err = e;
        furthest_ = pos_;
      }
      pos_ = save;
      return false;
    }
  }

  // -- statements
  std::string command_word() {
    if (peek().kind != Tok::ident) return "";
    std::string word = peek().text;
    std::size_t n = 1;
    while (is_sym("-", n) && !peek(n).space_before && peek(n + 1).kind == Tok::ident && !peek(n + 1).space_before) {
      word += "-" + peek(n + 1).text;
      n += 2;
    }
    if (word == "field" || word == "let" || kCommands.count(word)) {
      pos_ += n;
      return word;
    }
    return "";
  }

  void statement(const Session::Sink& sink) {
    const Token start = peek();
    const std::string cmd = command_word();
    if (cmd == "field") return declare_field();
    if (!s_.field_ && cmd != "verify-table1") fail_at(start, "no field declared; start with `field GF(p)(x,...)`");
    if (cmd == "let") return let();
    if (cmd.empty()) {
      Value v = value();
      sink(Json{{"command", "value"}, {"kind", value_kind(v)}, {"value", to_script(v)}});
      return;
    }
    try {
      sink(command(cmd));
    } catch (const ArithmeticError& e) {
      fail_at(start, e.what());
    }
  }

  void declare_field() {
    if (!is_ident("GF")) fail("expected GF(p)");
    ++pos_;
    expect_sym("(");
    const Token pt = peek();
    const long long p = expect_int();
    expect_sym(")");
    expect_sym("(");
    std::vector<std::string> vars;
    if (!is_sym(")")) {
      vars.push_back(expect_ident());
      while (is_sym(",")) {
        ++pos_;
        vars.push_back(expect_ident());
      }
    }
    expect_sym(")");
    if (p < 2 || p > 1000000 || !is_prime(static_cast<std::uint32_t>(p))) fail_at(pt, "p is not prime");
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (!seen.insert(v).second) fail_at(pt, "variable '" + v + "' declared twice");
      if (kCommands.count(v) || v == "over" || v == "extend" || v == "field" || v == "let")
        fail_at(pt, "'" + v + "' is reserved");
    }
    FieldOptions opts;
    opts.max_degree = s_.options_.max_degree;
    try {
      s_.field_ = make_field(static_cast<std::uint32_t>(p), vars, opts);
    } catch (const UsageError& e) {
      fail_at(pt, e.what());
    }
    s_.bindings_.clear();
  }

  void let() {
    const Token nt = peek();
    const std::string name = expect_ident();
    if (s_.field_ && s_.field_->index_of(name) >= 0) fail_at(nt, "cannot rebind the field variable '" + name + "'");
    if (name == "extend" || name == "over") fail_at(nt, "'" + name + "' is reserved");
    expect_sym("=");
    Value v = value();
    s_.bindings_.insert_or_assign(name, std::move(v));
  }

  Json command(const std::string& cmd) {
    const Exec exec = s_.options_.exec;
    Json rec{{"command", cmd}};
    if (cmd == "aniso") {
      QuasiPForm phi = form_value();
      Decomposition d = decompose(phi, exec);
      Json wit = Json::array();
      for (const auto& w : d.isotropy_witnesses) wit.push_back(string_array(w));
      rec["form"] = to_string(phi);
      rec["defect"] = d.defect;
      rec["anisotropic_dim"] = d.anisotropic_part.dim();
      rec["anisotropic"] = to_string(d.anisotropic_part);
      rec["isotropy_witnesses"] = wit;
    } else if (cmd == "defect") {
      QuasiPForm phi = form_value();
      if (!is_ident("over")) fail("expected 'over'");
      ++pos_;
      ExtensionSpec spec = extension_value();
      RelativeDecomposition r = extended_core(phi, spec, exec);
      rec["form"] = to_string(phi);
      rec["field"] = to_display(spec);
      rec["extension"] = to_json(spec);
      rec["defect"] = r.defect;
      rec["anisotropic_dim"] = r.anisotropic_dim;
      rec["representatives"] = string_array(r.representatives);
    } else if (cmd == "norm") {
      QuasiPForm phi = form_value();
      NormData nd = norm_data(phi);
      rec["form"] = to_string(phi);
      rec["base"] = to_string(nd.base);
      rec["generators"] = string_array(nd.generators);
      rec["norm_degree_exponent"] = nd.norm_degree_exponent;
      rec["norm_degree"] = degree_over_fp(nd.generators).str();
      rec["norm_form"] = to_string(nd.norm_form);
    } else if (cmd == "pindep" || cmd == "pbasis") {
      std::vector<RatFunc> set = set_value();
      rec["set"] = to_string(set);
      rec["independent"] = is_p_independent(set);
      rec["p_basis"] = string_array(extract_p_basis(set));
      rec["degree_over_fp"] = degree_over_fp(set).str();
    } else if (cmd == "minimal") {
      QuasiPForm phi = form_value();
      const bool m = is_minimal(phi);
      rec["form"] = to_string(phi);
      rec["minimal"] = m;
      rec["norm_degree_exponent"] = norm_data(phi).norm_degree_exponent;
    } else if (cmd == "tower") {
      QuasiPForm phi = form_value();
      TowerReport t = insep_tower(phi, exec);
      Json stages = Json::array();
      for (const auto& st : t.stages)
        stages.push_back(Json{{"field", to_display(st.spec)},
                              {"extension", to_json(st.spec)},
                              {"defect", st.defect},
                              {"anisotropic_dim", st.anisotropic_dim},
                              {"representatives", string_array(st.representatives)}});
      rec["form"] = to_string(phi);
      rec["generators"] = string_array(t.generators);
      rec["stages"] = stages;
    } else if (cmd == "pisp") {
      QuasiPForm phi = form_value();
      SearchBudget b;
      b.max_generators = s_.options_.max_gens;
      while (peek().kind == Tok::option) {
        const Token opt = t_[pos_++];
        if (opt.text == "--max-gens") {
          const long long n = expect_int();
          if (n < 1) fail_at(opt, "--max-gens must be positive");
          b.max_generators = static_cast<std::size_t>(n);
        } else if (opt.text == "--extra") {
          b.extra.push_back(element());
          while (is_sym(",")) {
            ++pos_;
            b.extra.push_back(element());
          }
        } else {
          fail_at(opt, "unknown option");
        }
      }
      for (const auto& e : b.extra)
        if (e.is_zero()) fail("extra generators must be nonzero");
      rec["form"] = to_string(phi);
      rec.update(to_json(pisp_search(phi, b, exec)));
    } else if (cmd == "fsp-min") {
      QuasiPForm phi = form_value();
      rec["form"] = to_string(phi);
      rec.update(to_json(fsp_minimal(phi, exec)));
    } else if (cmd == "fsp-pfister") {
      std::vector<RatFunc> gens = set_value();
      rec["form"] = to_string(quasi_pfister(field(), gens));
      rec.update(to_json(fsp_quasi_pfister(gens, exec)));
    } else if (cmd == "fsp-neighbor") {
      const Token nt = peek();
      const long long n = expect_int();
      const long long s = expect_int();
      RatFunc d = element();
      if (n < 1 || static_cast<std::size_t>(n) > field()->nvars()) fail_at(nt, "n exceeds the number of variables");
      std::vector<RatFunc> a;
      for (long long i = 0; i < n; ++i) a.push_back(RatFunc::variable(field(), static_cast<std::size_t>(i)));
      NeighborInput in(std::move(a), static_cast<std::size_t>(std::max(0LL, s)), d);
      rec["form"] = to_string(in.phi());
      rec.update(to_json(fsp_neighbor(in, exec)));
    } else if (cmd == "verify-table1") {
      const Token pt = peek();
      const long long p = expect_int();
      if (p < 2 || p > 31 || !is_prime(static_cast<std::uint32_t>(p))) fail_at(pt, "p must be a prime up to 31");
      return to_json(emit_table1(static_cast<std::uint32_t>(p), exec));
    }
    return rec;
  }

  // -- values
 public:
  Value value() {
    const Token start = peek();
    try {
      if (is_ident("extend")) return extension_value();
      if (is_sym("{")) return set_value();
      if (ident_bound_to<ExtensionSpec>() || ident_bound_to<std::vector<RatFunc>>()) {
        Value v = *bound(t_[pos_++].text);
        return v;
      }
      std::optional<ParseError> err;
      QuasiPForm phi(field());
      if (attempt([&] { phi = form_expr(); }, &err) && at_value_end()) return phi;
      const std::size_t after_form = furthest_;
      RatFunc e;
      if (attempt([&] { e = expr(); }, &err) && at_value_end()) return e;
      (void)after_form;
      if (err) throw *err;
      fail("malformed value");
    } catch (const ArithmeticError& e) {
      fail_at(start, e.what());
    }
  }

 private:
  bool at_value_end() const {
    return peek().kind == Tok::sep || peek().kind == Tok::end || peek().kind == Tok::option || is_sym(",") ||
           is_sym(")") || is_ident("over");
  }

  QuasiPForm form_value() {
    const Token start = peek();
    try {
      return form_expr();
    } catch (const ArithmeticError& e) {
      fail_at(start, e.what());
    }
  }

  std::vector<RatFunc> set_value() {
    if (ident_bound_to<std::vector<RatFunc>>()) return std::get<std::vector<RatFunc>>(*bound(t_[pos_++].text));
    expect_sym("{");
    std::vector<RatFunc> out;
    if (!is_sym("}")) {
      out.push_back(element());
      while (is_sym(",")) {
        ++pos_;
        out.push_back(element());
      }
    }
    expect_sym("}");
    return out;
  }

  ExtensionSpec extension_value() {
    if (ident_bound_to<ExtensionSpec>()) return std::get<ExtensionSpec>(*bound(t_[pos_++].text));
    if (!is_ident("extend")) fail("expected an extension `extend e^(1/q), ...`");
    ++pos_;
    std::vector<ExtensionSpec::Generator> gens;
    if (!at_value_end()) {
      gens.push_back(root_generator());
      while (is_sym(",")) {
        ++pos_;
        gens.push_back(root_generator());
      }
    }
    try {
      return ExtensionSpec(field(), std::move(gens));
    } catch (const UsageError& e) {
      fail(e.what());
    }
  }

  ExtensionSpec::Generator root_generator() {
    const Token start = peek();
    RatFunc a = element();
    if (a.is_zero()) fail_at(start, "cannot adjoin a root of zero");
    expect_sym("^");
    expect_sym("(");
    if (peek().kind != Tok::integer || peek().value != 1) fail("expected 1/q in a root exponent");
    ++pos_;
    expect_sym("/");
    const Token qt = peek();
    long long q = expect_int();
    if (is_sym("^")) {
      ++pos_;
      const long long e = expect_int();
      if (e < 0 || e > 62) fail_at(qt, "root index out of range");
      long long base = q;
      q = 1;
      for (long long i = 0; i < e; ++i) {
        if (q > (1LL << 40)) fail_at(qt, "root index out of range");
        q *= base;
      }
    }
    expect_sym(")");
    const long long p = field()->p();
    std::uint32_t n = 0;
    long long r = q;
    while (r > 1 && r % p == 0) {
      r /= p;
      ++n;
    }
    if (r != 1 || n == 0)
      fail_at(qt, "root index " + std::to_string(q) + " is not a positive power of p = " + std::to_string(p));
    return {a, n};
  }

  // form_expr := term { (+) term };  term := factor { (*) factor }
  QuasiPForm form_expr() {
    QuasiPForm out = form_term();
    while (is_sym("(+)")) {
      ++pos_;
      out = orthogonal_sum(out, form_term());
    }
    return out;
  }

  QuasiPForm form_term() {
    QuasiPForm out = form_factor();
    while (is_sym("(*)")) {
      ++pos_;
      out = tensor(out, form_factor());
    }
    return out;
  }

  bool form_start(std::size_t ahead = 0) const {
    return is_sym("<", ahead) || is_sym("<<", ahead) || ident_bound_to<QuasiPForm>(ahead);
  }

  QuasiPForm form_factor() {
    if (is_sym("<") || is_sym("<<")) {
      const bool pfister = is_sym("<<");
      ++pos_;
      std::vector<RatFunc> c;
      const char* close = pfister ? ">>" : ">";
      if (!is_sym(close)) {
        c.push_back(element());
        while (is_sym(",")) {
          ++pos_;
          c.push_back(element());
        }
      }
      expect_sym(close);
      if (!pfister) return QuasiPForm(field(), std::move(c));
      for (const auto& g : c)
        if (g.is_zero()) fail("quasi-Pfister generators must be nonzero");
      return quasi_pfister(field(), c);
    }
    if (ident_bound_to<QuasiPForm>()) return std::get<QuasiPForm>(*bound(t_[pos_++].text));
    if (is_sym("(")) {
      QuasiPForm inner(field());
      if (attempt([&] {
            ++pos_;
            inner = form_expr();
            expect_sym(")");
          }))
        return inner;
    }
    // scalar * form
    const Token st = peek();
    RatFunc c = term();
    expect_sym("*");
    QuasiPForm rest = form_factor();
    if (c.is_zero()) fail_at(st, "scaling by zero");
    return scale(c, rest);
  }

  // element := expr, evaluated in the field
  RatFunc element() {
    const Token start = peek();
    try {
      return expr();
    } catch (const ArithmeticError& e) {
      fail_at(start, e.what());
    }
  }

  RatFunc expr() {
    RatFunc out = term();
    while (is_sym("+") || is_sym("-")) {
      const bool plus = is_sym("+");
      ++pos_;
      RatFunc r = term();
      out = plus ? out + r : out - r;
    }
    return out;
  }

  RatFunc term() {
    RatFunc out = unary();
    for (;;) {
      if (!is_sym("*") && !is_sym("/")) break;
      if (form_start(1)) break;  // `e * <...>` scales a form
      const bool mul = is_sym("*");
      if (is_sym("(", 1)) {
        RatFunc r;
        if (!attempt([&] {
              ++pos_;
              r = unary();
            }))
          break;
        out = mul ? out * r : out / r;
        continue;
      }
      ++pos_;
      RatFunc r = unary();
      out = mul ? out * r : out / r;
    }
    return out;
  }

  RatFunc unary() {
    if (is_sym("-")) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!is_sym("^")) return base;
    // `^(1/q)` belongs to an extension generator
    if (is_sym("(", 1) && peek(2).kind == Tok::integer && peek(2).value == 1 && is_sym("/", 3)) return base;
    ++pos_;
    const bool paren = is_sym("(");
    if (paren) ++pos_;
    bool neg = false;
    if (is_sym("-")) {
      neg = true;
      ++pos_;
    }
    const Token et = peek();
    long long e = expect_int();
    if (paren) expect_sym(")");
    if (e > 100000) fail_at(et, "exponent too large");
    return base.pow(neg ? -e : e);
  }

  RatFunc primary() {
    const Token t = peek();
    if (t.kind == Tok::integer) {
      ++pos_;
      return RatFunc::constant(field(), t.value % static_cast<long long>(field()->p()));
    }
    if (t.kind == Tok::ident) {
      const int idx = field()->index_of(t.text);
      if (idx >= 0) {
        ++pos_;
        return RatFunc::variable(field(), static_cast<std::size_t>(idx));
      }
      if (const Value* v = bound(t.text)) {
        if (!std::holds_alternative<RatFunc>(*v)) fail_at(t, "'" + t.text + "' is a " + value_kind(*v) + ", not an element");
        ++pos_;
        return std::get<RatFunc>(*v);
      }
      fail_at(t, "unknown identifier '" + t.text + "'");
    }
    if (is_sym("(")) {
      ++pos_;
      RatFunc inner = expr();
      expect_sym(")");
      return inner;
    }
    fail("expected an element");
  }

  Session& s_;
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::size_t furthest_ = 0;
};

// ---------------------------------------------------------------------------
// Session

Session::Session(SessionOptions options) : options_(options) {}

void Session::run(std::string_view source, const Sink& sink) { Parser(*this, lex(source)).run(sink); }

std::vector<Json> Session::run(std::string_view source) {
  std::vector<Json> out;
  run(source, [&](const Json& j) { out.push_back(j); });
  return out;
}

Value Session::evaluate(std::string_view expr) { return Parser(*this, lex(expr)).value_only(); }

std::string value_kind(const Value& v) {
  switch (v.index()) {
    case 0:
      return "element";
    case 1:
      return "form";
    case 2:
      return "extension";
    default:
      return "set";
  }
}

std::string to_script(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ExtensionSpec>)
          return qlpf::to_script(x);
        else if constexpr (std::is_same_v<T, std::vector<RatFunc>>)
          return to_string(std::span<const RatFunc>(x));
        else
          return to_string(x);
      },
      v);
}

bool same_value(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b);
      },
      a);
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ", ";
      out += e.is_array() ? e.dump() : scalar_text(e);
    }
    return out;
  }
  return v.dump();
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string csv_rows(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += csv_field(r[i]);
    }
    out += "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> table1_rows(const Json& rec) {
  std::vector<std::vector<std::string>> rows{{"k", "l", "dim", "witness", "field", "anisotropic_part"}};
  for (const auto& c : rec["cells"]) {
    std::vector<std::string> r{std::to_string(c["k"].get<int>()), std::to_string(c["l"].get<int>())};
    if (c["live"].get<bool>())
      for (const char* key : {"dim", "witness", "field", "anisotropic_part"}) r.push_back(scalar_text(c[key]));
    else
      r.insert(r.end(), {"", "X", "", ""});
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<std::string>> tower_rows(const Json& rec) {
  std::vector<std::vector<std::string>> rows{{"stage", "field", "defect", "anisotropic_dim", "representatives"}};
  std::size_t i = 0;
  for (const auto& s : rec["stages"])
    rows.push_back({std::to_string(i++), scalar_text(s["field"]), scalar_text(s["defect"]),
                    scalar_text(s["anisotropic_dim"]), scalar_text(s["representatives"])});
  return rows;
}

bool is_report(const Json& rec) { return rec.contains("dims") && rec.contains("witnesses"); }

std::vector<std::vector<std::string>> report_rows(const Json& rec) {
  std::vector<std::vector<std::string>> rows{{"dim", "witness"}};
  for (const auto& [dim, spec] : rec["witnesses"].items()) {
    std::string field = "F";
    if (!spec["adjoined"].empty()) {
      field = "F(";
      bool first = true;
      for (const auto& g : spec["adjoined"]) {
        if (!first) field += ", ";
        first = false;
        field += "[" + g[0].get<std::string>() + "; " + std::to_string(g[1].get<int>()) + "]";
      }
      field += ")";
    }
    rows.push_back({dim, field});
  }
  return rows;
}

}  // namespace

std::string render_text(const Json& rec) {
  const std::string cmd = rec.value("command", "");
  if (cmd == "value") return rec["value"].get<std::string>() + "\n";
  if (cmd == "verify-table1") {
    auto rows = table1_rows(rec);
    return "p = " + rec["p"].dump() + ", all live cells verified\n" + aligned(rows);
  }
  std::string out;
  for (const auto& [key, v] : rec.items()) {
    if (key == "command" || key == "stages" || key == "witnesses" || key == "extension") continue;
    out += key + ": " + scalar_text(v) + "\n";
  }
  if (cmd == "tower") out += aligned(tower_rows(rec));
  if (is_report(rec)) out += aligned(report_rows(rec));
  return out;
}

std::string render_csv(const Json& rec) {
  const std::string cmd = rec.value("command", "");
  if (cmd == "verify-table1") return csv_rows(table1_rows(rec));
  if (cmd == "tower") return csv_rows(tower_rows(rec));
  if (is_report(rec)) return csv_rows(report_rows(rec));
  std::vector<std::vector<std::string>> rows{{"key", "value"}};
  for (const auto& [key, v] : rec.items()) rows.push_back({key, scalar_text(v)});
  return csv_rows(rows);
}

}  // namespace qlpf
