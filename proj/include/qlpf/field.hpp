#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qlpf {

/// Hard limit on the number of variables of the rational function field.
inline constexpr std::size_t kMaxVars = 12;

struct FieldOptions {
  /// Largest total degree any intermediate polynomial may reach.
  std::uint32_t max_degree = 512;
  /// Largest admissible characteristic.
  std::uint32_t max_prime = 31;
};

/// The ground field F = F_p(x_1, ..., x_m). Shared by every value built over it.
class FieldDescriptor {
 public:
  FieldDescriptor(std::uint32_t p, std::vector<std::string> variables, FieldOptions options = {});

  std::uint32_t p() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_.at(i); }
  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;
  std::uint32_t max_degree() const noexcept { return opts_.max_degree; }
  const FieldOptions& options() const noexcept { return opts_; }

  // Prime-field arithmetic on residues in [0, p).
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  bool same_as(const FieldDescriptor& other) const noexcept {
    return this == &other || (p_ == other.p_ && vars_ == other.vars_);
  }

 private:
  std::uint32_t p_;
  std::vector<std::string> vars_;
  FieldOptions opts_;
  std::vector<std::uint32_t> inverses_;
};

using Field = std::shared_ptr<const FieldDescriptor>;

Field make_field(std::uint32_t p, std::vector<std::string> variables, FieldOptions options = {});

bool is_prime(std::uint32_t n) noexcept;

/// Throws UsageError unless both fields describe the same F_p(x_1..x_m).
void require_same_field(const Field& a, const Field& b);

}  // namespace qlpf
