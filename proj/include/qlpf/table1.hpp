#pragma once

#include "qlpf/format.hpp"

namespace qlpf {

struct Table1Cell {
  std::size_t k = 0;
  std::size_t l = 0;
  bool live = false;
  std::size_t dim = 0;
  std::string witness;  // D_k, E_{k,l} or G_{k,l}
  ExtensionSpec spec;
  std::string form;
};

/// Witness table of <<a1,a2,a3,a4>> (+) d<1,a1,a2,a3> over F_p(a1,a2,a3,a4,d):
/// rows p^0..p^4, columns l = 0..4, row-major. Cells outside the theorem's
/// constraints are not live. Every live cell is verified through extended_core.
struct Table1 {
  std::uint32_t p = 0;
  std::vector<Table1Cell> cells;
};

Table1 emit_table1(std::uint32_t p, Exec exec = Exec::parallel);

Json to_json(const Table1& t);

}  // namespace qlpf
