#include "burnside/json_io.hpp"

#include <fstream>
#include <sstream>

#include "burnside/errors.hpp"
#include "burnside/format.hpp"

namespace burnside::json_io {

namespace {

// nlohmann exceptions become our ParseError so callers see one error family.
template <class F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON structure: ") + e.what());
  }
}

std::vector<std::vector<int>> int_matrix(const json& j) {
  return j.get<std::vector<std::vector<int>>>();
}

}  // namespace

json int_to_json(const Int& v) {
  try {
    return json(to_int64(v));
  } catch (const std::overflow_error&) {
    throw ParseError("coefficient " + int_to_string(v) + " does not fit in a 64-bit JSON integer");
  }
}

Int int_from_json(const json& j) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw ParseError("expected an integer, got " + j.dump());
  }
  return Int(j.get<std::int64_t>());
}

namespace {

IntVec int_vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
  IntVec out;
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

json int_vec_to_json(const IntVec& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(int_to_json(e));
  return out;
}

json int_mat_to_json(const IntMat& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(int_vec_to_json(row));
  return out;
}

}  // namespace

json group_to_json(const GroupPtr& g) {
  if (g->name) return json{{"name", *g->name}};
  json j;
  j["order"] = g->order;
  j["cayley"] = g->mul;
  return j;
}

GroupPtr group_from_json(const json& j) {
  return wrap([&]() -> GroupPtr {
    if (!j.is_object()) throw ParseError("group JSON must be an object, got " + j.dump());
    if (j.contains("cayley")) {
      std::optional<std::string> name;
      if (j.contains("name")) name = j.at("name").get<std::string>();
      return group_from_cayley(int_matrix(j.at("cayley")), name);
    }
    if (j.contains("generators")) {
      return group_from_permutations(j.at("degree").get<int>(), int_matrix(j.at("generators")));
    }
    if (j.contains("name")) return catalog_group(j.at("name").get<std::string>());
    throw ParseError("group JSON needs \"name\", \"cayley\", or \"degree\"+\"generators\"");
  });
}

GroupPtr parse_group_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return group_from_json(load_file(spec.substr(1)));
  if (!spec.empty() && spec[0] == '{') return group_from_json(parse_text(spec));
  return catalog_group(spec);
}

json element_to_json(const BurnsideElement& x) {
  json j;
  j["group"] = group_to_json(x.group);
  j["coeffs"] = int_vec_to_json(x.coeffs);
  j["class_labels"] = format::class_labels(x.group);
  return j;
}

BurnsideElement element_from_json(const json& j) {
  return wrap([&]() -> BurnsideElement {
    GroupPtr g = group_from_json(j.at("group"));
    IntVec coeffs = int_vec_from_json(j.at("coeffs"));
    const GroupData& data = group_data(g);
    if (static_cast<int>(coeffs.size()) != data.num_classes()) {
      throw ParseError("coefficient count " + std::to_string(coeffs.size()) +
                       " does not match the " + std::to_string(data.num_classes()) +
                       " subgroup classes");
    }
    return element_from_coeffs(g, std::move(coeffs));
  });
}

json marks_to_json(const TableOfMarks& t) {
  json j;
  j["group"] = group_to_json(t.group);
  j["class_labels"] = format::class_labels(t.group);
  json orders = json::array();
  const GroupData& data = group_data(t.group);
  for (const auto& c : data.classes().classes) orders.push_back(c.representative.order());
  j["class_orders"] = orders;
  j["marks"] = int_mat_to_json(t.marks);
  return j;
}

json mark_vector_to_json(const MarkVector& v) {
  json j;
  j["group"] = group_to_json(v.group);
  j["class_labels"] = format::class_labels(v.group);
  j["values"] = int_vec_to_json(v.values);
  return j;
}

json lattice_to_json(const IntegerLattice& l) {
  json j;
  j["ambient_rank"] = l.ambient_rank;
  j["rank"] = l.rank();
  j["hnf_basis"] = int_mat_to_json(l.basis);
  return j;
}

IntegerLattice lattice_from_json(const json& j) {
  return wrap([&]() -> IntegerLattice {
    int ambient = j.at("ambient_rank").get<int>();
    IntMat rows;
    for (const auto& r : j.at("hnf_basis")) rows.push_back(int_vec_from_json(r));
    return lattice_from_rows(ambient, std::move(rows));  // re-canonicalized, not trusted
  });
}

json biset_to_json(const BisetElement& x) {
  const BisetSpace& sp = biset_space(x.left, x.right);
  json j;
  j["source"] = group_to_json(x.left);
  j["target"] = group_to_json(x.right);
  j["coeffs"] = int_vec_to_json(x.coeffs);
  j["basis_labels"] = sp.basis_labels;
  return j;
}

BisetElement biset_from_json(const json& j) {
  return wrap([&]() -> BisetElement {
    GroupPtr left = group_from_json(j.at("source"));
    GroupPtr right = group_from_json(j.at("target"));
    IntVec coeffs = int_vec_from_json(j.at("coeffs"));
    const BisetSpace& sp = biset_space(left, right);
    if (static_cast<int>(coeffs.size()) != sp.num_basis()) {
      throw ParseError("coefficient count " + std::to_string(coeffs.size()) +
                       " does not match the " + std::to_string(sp.num_basis()) +
                       " basis classes of A(source, target)");
    }
    return BisetElement{left, right, std::move(coeffs)};
  });
}

json character_to_json(const CharacterVector& chi) {
  const GroupData& data = group_data(chi.group);
  json reps = json::array();
  for (const auto& cls : data.element_classes().classes) reps.push_back(chi.group->label(cls[0]));
  json j;
  j["group"] = group_to_json(chi.group);
  j["class_representatives"] = reps;
  j["values"] = int_vec_to_json(chi.values);
  return j;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

}  // namespace burnside::json_io
