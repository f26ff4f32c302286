#pragma once

#include <functional>
#include <map>
#include <string_view>
#include <variant>

#include "qlpf/format.hpp"

namespace qlpf {

struct SessionOptions {
  std::uint32_t max_degree = 512;
  /// Default pisp search width; 0 means m + 1.
  std::size_t max_gens = 0;
  Exec exec = Exec::parallel;
};

/// A bound value: element, form, extension or element set.
using Value = std::variant<RatFunc, QuasiPForm, ExtensionSpec, std::vector<RatFunc>>;

std::string value_kind(const Value& v);
/// Script text of a value; parses back to an equal value.
std::string to_script(const Value& v);
bool same_value(const Value& a, const Value& b);

/// Interpreter for the script language:
///   field GF(p)(x,y,...)          let name = value
///   aniso F | defect F over E | norm F | pindep S | pbasis S | minimal F
///   tower F | pisp F [--max-gens N] [--extra e,...] | fsp-min F
///   fsp-pfister S | fsp-neighbor n s d | verify-table1 p | <value>
/// Statements are separated by ';' or newlines; '#' starts a comment.
class Session {
 public:
  using Sink = std::function<void(const Json&)>;

  explicit Session(SessionOptions options = {});

  /// Executes every statement, passing each output record to sink as it is
  /// produced. Syntax errors raise ParseError with line and column.
  void run(std::string_view source, const Sink& sink);
  std::vector<Json> run(std::string_view source);

  /// Parses and evaluates one value expression in the current field.
  Value evaluate(std::string_view expr);

  const Field& field() const noexcept { return field_; }
  const std::map<std::string, Value>& bindings() const noexcept { return bindings_; }
  const SessionOptions& options() const noexcept { return options_; }

 private:
  friend class Parser;

  SessionOptions options_;
  Field field_;
  std::map<std::string, Value> bindings_;
};

/// Text rendering of an output record: aligned tables where the record is
/// tabular, `key: value` lines otherwise.
std::string render_text(const Json& record);
/// CSV rendering with a header row.
std::string render_csv(const Json& record);

}  // namespace qlpf
