#include "qlpf/format.hpp"

namespace qlpf {

namespace {

std::string monomial_string(const FieldDescriptor& f, const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    if (!m.exp[v]) continue;
    if (!out.empty()) out += '*';
    out += f.variables()[v];
    if (m.exp[v] > 1) out += '^' + std::to_string(m.exp[v]);
  }
  return out;
}

bool is_bare_power(const MultiPoly& a) {
  if (!a.is_monomial() || a.leading_coeff() != 1) return false;
  std::size_t vars = 0;
  for (auto e : a.leading().mono.exp) vars += e != 0;
  return vars == 1;
}

bool is_atom(const RatFunc& a) {
  return a.is_polynomial() && a.num().is_monomial() && a.num().leading_coeff() == 1 &&
         a.num().leading().mono.degree <= 1;
}

std::string root_string(const RatFunc& a, std::uint32_t n, std::uint32_t p) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  const std::string base = is_atom(a) ? to_string(a) : "(" + to_string(a) + ")";
  return base + "^(1/" + std::to_string(q) + ")";
}

std::string join(std::span<const RatFunc> elems, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += sep;
    out += to_string(elems[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const MultiPoly& a) {
  if (a.is_zero()) return "0";
  const FieldDescriptor& f = *a.field();
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    const std::string m = monomial_string(f, t.mono);
    if (m.empty())
      out += std::to_string(t.coeff);
    else if (t.coeff == 1)
      out += m;
    else
      out += std::to_string(t.coeff) + "*" + m;
  }
  return out;
}

std::string to_string(const RatFunc& a) {
  if (a.is_polynomial()) return to_string(a.num());
  std::string num = to_string(a.num());
  if (a.num().size() > 1) num = "(" + num + ")";
  std::string den = to_string(a.den());
  if (!is_bare_power(a.den())) den = "(" + den + ")";
  return num + "/" + den;
}

std::string to_string(const QuasiPForm& phi) { return "<" + join(phi.coefficients(), ",") + ">"; }

std::string to_string(std::span<const RatFunc> set) { return "{" + join(set, ",") + "}"; }

std::string to_script(const ExtensionSpec& spec) {
  std::string out = "extend";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    out += i ? ", " : " ";
    out += root_string(spec.adjoined()[i].first, spec.adjoined()[i].second, spec.field()->p());
  }
  return out;
}

std::string to_display(const ExtensionSpec& spec) {
  if (spec.empty()) return "F";
  std::string out = "F(";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i) out += ", ";
    out += root_string(spec.adjoined()[i].first, spec.adjoined()[i].second, spec.field()->p());
  }
  return out + ")";
}

std::string neighbor_form_string(const NeighborCell& cell, const RatFunc& d) {
  std::string out = cell.pfister_part.empty() ? "<1>" : "<<" + join(cell.pfister_part, ",") + ">>";
  if (!cell.d_part.empty()) out += " (+) " + to_string(d) + " * <" + join(cell.d_part, ",") + ">";
  return out;
}

Json to_json(const ExtensionSpec& spec) {
  Json adj = Json::array();
  for (const auto& [a, n] : spec.adjoined()) adj.push_back(Json::array({to_string(a), n}));
  return Json{{"adjoined", adj}};
}

Json string_array(std::span<const RatFunc> elems) {
  Json out = Json::array();
  for (const auto& e : elems) out.push_back(to_string(e));
  return out;
}

Json to_json(const SplittingReport& r) {
  Json dims = Json::array();
  for (auto d : r.dims) dims.push_back(d);
  Json wit = Json::object();
  for (const auto& [d, spec] : r.witnesses) wit[std::to_string(d)] = to_json(spec);
  const char* method = r.method == SplitMethod::closed_form ? "closed-form"
                       : r.method == SplitMethod::search    ? "search"
                                                            : "both";
  return Json{{"dims", dims},
              {"witnesses", wit},
              {"method", method},
              {"label", r.is_fsp ? "fsp" : "pisp"},
              {"complete", r.complete}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace qlpf
