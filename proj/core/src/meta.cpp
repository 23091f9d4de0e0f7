#include <map>
#include <numeric>

#include "cfcolor/colouring.hpp"
#include "cfcolor/errors.hpp"

namespace cfc {

VertexColouring meta_colour_subsets(int n, const SubsetAuxFn& aux, std::vector<MetaStep>* trace) {
  if (n < 0) throw ArgumentError("negative vertex count");
  std::vector<Colour> out(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> surviving(static_cast<std::size_t>(n));
  std::iota(surviving.begin(), surviving.end(), 0);
  Colour round = 0;
  while (!surviving.empty()) {
    ++round;
    VertexColouring phi = aux(std::span<const Vertex>(surviving));
    if (phi.size() != surviving.size()) {
      throw ContractError("aux colouring does not cover the surviving vertices");
    }
    std::map<Colour, std::size_t> class_size;
    for (Colour c : phi.colours()) ++class_size[c];
    Colour largest = class_size.begin()->first;
    for (const auto& [c, size] : class_size) {
      if (size > class_size[largest]) largest = c;
    }
    std::vector<Vertex> next;
    for (std::size_t i = 0; i < surviving.size(); ++i) {
      if (phi.colours()[i] == largest) out[static_cast<std::size_t>(surviving[i])] = round;
      else next.push_back(surviving[i]);
    }
    if (trace != nullptr) trace->push_back({surviving, std::move(phi)});
    surviving = std::move(next);
  }
  return VertexColouring(std::move(out));
}

VertexColouring meta_colour(const Hypergraph& h, const AuxColouringFn& aux,
                            std::vector<MetaStep>* trace) {
  return meta_colour_subsets(
      h.num_vertices(),
      [&](std::span<const Vertex> surviving) {
        return aux(induced_subhypergraph(h, surviving).hypergraph);
      },
      trace);
}

}  // namespace cfc
