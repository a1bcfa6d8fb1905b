#pragma once

#include <string>
#include <vector>

#include "burnside/bisets.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/filtration.hpp"
#include "burnside/lattice.hpp"

namespace burnside::format {

// One label per subgroup class: "H(order=o,idx=i)". Used as table headers
// everywhere a coefficient vector over A(G) is printed.
std::vector<std::string> class_labels(const GroupPtr& g);

std::string pretty_marks(const TableOfMarks& t);
std::string csv_marks(const TableOfMarks& t);

std::string pretty_element(const BurnsideElement& x);
std::string csv_element(const BurnsideElement& x);

std::string pretty_lattice(const IntegerLattice& l, const std::vector<std::string>& col_labels);
std::string csv_lattice(const IntegerLattice& l, const std::vector<std::string>& col_labels);

std::string pretty_biset(const BisetElement& x);
std::string csv_biset(const BisetElement& x);

std::string pretty_character(const CharacterVector& chi);

}  // namespace burnside::format
