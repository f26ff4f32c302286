#include "qlpf/table1.hpp"

#include "qlpf/error.hpp"

namespace qlpf {

Table1 emit_table1(std::uint32_t p, Exec exec) {
  const NeighborInput input = table1_input(p);
  const std::vector<NeighborCell> cells = neighbor_cells(input, exec);
  Table1 out;
  out.p = p;
  for (std::size_t k = 0; k <= 4; ++k) {
    for (std::size_t l = 0; l <= 4; ++l) {
      Table1Cell cell{k, l, false, 0, "X", ExtensionSpec(input.field()), ""};
      for (const auto& c : cells) {
        if (c.k != k || c.l != l) continue;
        cell.live = true;
        cell.dim = c.dim;
        cell.witness = c.family == 'D' ? "D_" + std::to_string(k)
                                       : std::string(1, c.family) + "_{" + std::to_string(k) + "," +
                                             std::to_string(l) + "}";
        cell.spec = c.spec;
        cell.form = neighbor_form_string(c, input.d());
      }
      verify(cell.live == neighbor_pair_live(p, 4, 3, k, l), "table cell liveness disagrees with the theorem");
      out.cells.push_back(std::move(cell));
    }
  }
  return out;
}

Json to_json(const Table1& t) {
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    Json j{{"k", c.k}, {"l", c.l}, {"live", c.live}};
    if (c.live) {
      j["dim"] = c.dim;
      j["witness"] = c.witness;
      j["field"] = to_display(c.spec);
      j["extension"] = to_json(c.spec);
      j["anisotropic_part"] = c.form;
    }
    cells.push_back(std::move(j));
  }
  return Json{{"command", "verify-table1"}, {"p", t.p}, {"verified", true}, {"cells", cells}};
}

}  // namespace qlpf
