#ifndef KAPPALAT_LATTICE_IO_HPP_
#define KAPPALAT_LATTICE_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kappalat/algebra.hpp"
#include "kappalat/lattice.hpp"

namespace kappalat {

/*
  lattice-v1 text format (UTF-8, line-oriented, '#' comments):

    lattice-v1
    n=<count>
    name <i> <string>     (optional)
    cover <a> <b>         (0-based, a ⋖ b)

  Canonical serialization sorts covers lexicographically, so
  serialize ∘ parse is the identity on canonicalized input.
*/
FiniteLattice parse_lattice(const std::string& text);
std::string serialize_lattice(const FiniteLattice& L);

// Sidecar metadata emitted with generated torsion-class lattices:
//   # meta algebra n=<n> forbid=<a..b,c..d|none>
//   # meta brick <element-index> <comma-list|->
struct TorsFileMeta {
  bool present = false;
  int n = 0;
  std::vector<ModInterval> forbidden;
  std::vector<std::vector<std::string>> element_bricks;  // per element index
};

TorsFileMeta parse_tors_meta(const std::string& text);
std::string serialize_tors_lattice(const TorsLattice& t);

}  // namespace kappalat

#endif
