#include "qlpf/field.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qlpf/error.hpp"

namespace qlpf {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor::FieldDescriptor(std::uint32_t p, std::vector<std::string> variables, FieldOptions options)
    : p_(p), vars_(std::move(variables)), opts_(options) {
  if (!is_prime(p_)) throw UsageError("characteristic " + std::to_string(p_) + " is not prime");
  if (p_ > opts_.max_prime)
    throw UsageError("characteristic " + std::to_string(p_) + " exceeds the configured limit " +
                     std::to_string(opts_.max_prime));
  if (vars_.size() > kMaxVars) throw UsageError("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (opts_.max_degree == 0 || opts_.max_degree > 30000) throw UsageError("degree cap must lie in [1, 30000]");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!is_identifier(v)) throw UsageError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw UsageError("duplicate variable name '" + v + "'");
  }
  inverses_.assign(p_, 0);
  for (std::uint32_t a = 1; a < p_; ++a) {
    // a^(p-2) by square-and-multiply
    std::uint64_t result = 1, base = a;
    for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
    }
    inverses_[a] = static_cast<std::uint32_t>(result);
  }
}

int FieldDescriptor::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

std::uint32_t FieldDescriptor::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw ArithmeticError("division by zero in F_" + std::to_string(p_));
  return inverses_[a % p_];
}

Field make_field(std::uint32_t p, std::vector<std::string> variables, FieldOptions options) {
  return std::make_shared<const FieldDescriptor>(p, std::move(variables), options);
}

void require_same_field(const Field& a, const Field& b) {
  if (!a || !b) throw UsageError("value has no field");
  if (!a->same_as(*b)) throw UsageError("operands live over different fields");
}

}  // namespace qlpf
