#include "burnside/format.hpp"

#include <algorithm>
#include <sstream>

namespace burnside::format {

namespace {

std::string group_title(const GroupPtr& g) {
  if (g->name) return *g->name;
  return "group of order " + std::to_string(g->order);
}

// Pad-left to width.
std::string pad(const std::string& s, std::size_t w) {
  if (s.size() >= w) return s;
  return std::string(w - s.size(), ' ') + s;
}

std::string table(const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& col_labels,
                  const std::vector<std::vector<std::string>>& cells) {
  std::size_t label_w = 0;
  for (const auto& r : row_labels) label_w = std::max(label_w, r.size());
  std::vector<std::size_t> col_w(col_labels.size());
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    col_w[j] = col_labels[j].size();
    for (const auto& row : cells) col_w[j] = std::max(col_w[j], row[j].size());
  }
  std::ostringstream out;
  out << pad("", label_w);
  for (std::size_t j = 0; j < col_labels.size(); ++j) out << "  " << pad(col_labels[j], col_w[j]);
  out << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << pad(row_labels[i], label_w);
    for (std::size_t j = 0; j < col_labels.size(); ++j) out << "  " << pad(cells[i][j], col_w[j]);
    out << "\n";
  }
  return out.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::string csv_table(const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels,
                      const std::vector<std::vector<std::string>>& cells) {
  std::ostringstream out;
  for (const auto& c : col_labels) out << "," << csv_quote(c);
  out << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << csv_quote(row_labels[i]);
    for (const auto& cell : cells[i]) out << "," << cell;
    out << "\n";
  }
  return out.str();
}

std::vector<std::vector<std::string>> matrix_cells(const IntMat& m) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(int_to_string(v));
    cells.push_back(std::move(r));
  }
  return cells;
}

}  // namespace

std::vector<std::string> class_labels(const GroupPtr& g) {
  const GroupData& data = group_data(g);
  std::vector<std::string> labels;
  for (int i = 0; i < data.num_classes(); ++i) {
    const SubgroupClass& c = data.classes().classes[i];
    labels.push_back("H(order=" + std::to_string(c.representative.order()) +
                     ",idx=" + std::to_string(i) + ")");
  }
  return labels;
}

std::string pretty_marks(const TableOfMarks& t) {
  std::vector<std::string> labels = class_labels(t.group);
  std::ostringstream out;
  out << "table of marks, " << group_title(t.group) << " (" << labels.size()
      << " subgroup classes)\n";
  out << table(labels, labels, matrix_cells(t.marks));
  return out.str();
}

std::string csv_marks(const TableOfMarks& t) {
  std::vector<std::string> labels = class_labels(t.group);
  return csv_table(labels, labels, matrix_cells(t.marks));
}

std::string pretty_element(const BurnsideElement& x) {
  std::vector<std::string> labels = class_labels(x.group);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << int_to_string(x.coeffs[i]) << "*[G/" << labels[i] << "]";
  }
  if (first) out << "0";
  return out.str();
}

std::string csv_element(const BurnsideElement& x) {
  std::vector<std::string> labels = class_labels(x.group);
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ",";
    out << csv_quote(labels[i]);
  }
  out << "\n";
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (i) out << ",";
    out << int_to_string(x.coeffs[i]);
  }
  out << "\n";
  return out.str();
}

std::string pretty_lattice(const IntegerLattice& l, const std::vector<std::string>& col_labels) {
  std::ostringstream out;
  out << "lattice of rank " << l.rank() << " in Z^" << l.ambient_rank << "\n";
  if (l.is_zero()) return out.str();
  std::vector<std::string> row_labels;
  for (int i = 0; i < l.rank(); ++i) row_labels.push_back("b" + std::to_string(i));
  out << table(row_labels, col_labels, matrix_cells(l.basis));
  return out.str();
}

std::string csv_lattice(const IntegerLattice& l, const std::vector<std::string>& col_labels) {
  std::vector<std::string> row_labels;
  for (int i = 0; i < l.rank(); ++i) row_labels.push_back("b" + std::to_string(i));
  return csv_table(row_labels, col_labels, matrix_cells(l.basis));
}

std::string pretty_biset(const BisetElement& x) {
  const BisetSpace& sp = biset_space(x.left, x.right);
  std::ostringstream out;
  out << "element of A(" << group_title(x.left) << ", " << group_title(x.right) << ")\n";
  bool any = false;
  for (int i = 0; i < sp.num_basis(); ++i) {
    if (x.coeffs[i] == 0) continue;
    any = true;
    out << "  " << pad(int_to_string(x.coeffs[i]), 4) << " * " << sp.basis_labels[i] << "\n";
  }
  if (!any) out << "  0\n";
  return out.str();
}

std::string csv_biset(const BisetElement& x) {
  const BisetSpace& sp = biset_space(x.left, x.right);
  std::ostringstream out;
  out << "basis,coefficient\n";
  for (int i = 0; i < sp.num_basis(); ++i) {
    out << csv_quote(sp.basis_labels[i]) << "," << int_to_string(x.coeffs[i]) << "\n";
  }
  return out.str();
}

std::string pretty_character(const CharacterVector& chi) {
  const GroupData& data = group_data(chi.group);
  const ElementClasses& ec = data.element_classes();
  std::vector<std::string> col_labels;
  for (const auto& cls : ec.classes) col_labels.push_back(chi.group->label(cls[0]));
  std::vector<std::string> vals;
  for (const auto& v : chi.values) vals.push_back(int_to_string(v));
  return table({"chi"}, col_labels, {vals});
}

}  // namespace burnside::format
