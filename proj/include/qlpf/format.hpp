#pragma once

// Text forms of values in the script grammar. Everything printed here parses
// back to an equal value.

#include <string>

#include "json.hpp"
#include "qlpf/splitting.hpp"

namespace qlpf {

using Json = nlohmann::ordered_json;

std::string to_string(const MultiPoly& a);
std::string to_string(const RatFunc& a);
/// `<c1,c2,...>`.
std::string to_string(const QuasiPForm& phi);
/// `extend x^(1/4), y^(1/2)`; the empty spec prints as `extend`.
std::string to_script(const ExtensionSpec& spec);
/// `F(x^(1/4), y^(1/2))`, or `F` for the empty spec.
std::string to_display(const ExtensionSpec& spec);
/// `{x,y}`.
std::string to_string(std::span<const RatFunc> set);

/// `<<a1,a2>> (+) d * <1,a1>`; `<1>` for an empty quasi-Pfister part.
std::string neighbor_form_string(const NeighborCell& cell, const RatFunc& d);

Json to_json(const ExtensionSpec& spec);
Json to_json(const SplittingReport& r);
Json string_array(std::span<const RatFunc> elems);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace qlpf
