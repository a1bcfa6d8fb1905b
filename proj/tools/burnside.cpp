#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burnside/bisets.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/config.hpp"
#include "burnside/errors.hpp"
#include "burnside/filtration.hpp"
#include "burnside/format.hpp"
#include "burnside/json_io.hpp"
#include "burnside/parallel.hpp"
#include "burnside/verification.hpp"

namespace {

using namespace burnside;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

IntVec parse_coeff_list(const std::string& text) {
  IntVec out;
  for (int v : parse_int_list(text)) out.push_back(v);
  return out;
}

std::vector<std::string> split_colons(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  return parts;
}

// id:G | hom:SRC:DST[:i0,i1,...] | transfer:GROUP:e0,e1,... | inline/file JSON.
BisetElement parse_biset_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '{') return json_io::biset_from_json(json_io::parse_text(spec));
  if (!spec.empty() && spec[0] == '@') {
    return json_io::biset_from_json(json_io::load_file(spec.substr(1)));
  }
  if (spec.rfind("id:", 0) == 0) {
    return identity_biset(json_io::parse_group_spec(spec.substr(3)));
  }
  if (spec.rfind("hom:", 0) == 0) {
    std::vector<std::string> parts = split_colons(spec);
    if (parts.size() != 3 && parts.size() != 4) {
      throw ParseError("hom spec needs hom:SRC:DST or hom:SRC:DST:i0,i1,...");
    }
    GroupPtr src = catalog_group(parts[1]);
    GroupPtr dst = catalog_group(parts[2]);
    if (parts.size() == 4) return hom_biset(make_hom(src, dst, parse_int_list(parts[3])));
    if (!same_group(src, dst)) {
      throw ParseError("hom spec without images needs structurally equal groups");
    }
    return hom_biset(make_hom(src, dst, identity_hom(src).images));
  }
  if (spec.rfind("transfer:", 0) == 0) {
    std::vector<std::string> parts = split_colons(spec);
    if (parts.size() != 3) throw ParseError("transfer spec needs transfer:GROUP:e0,e1,...");
    GroupPtr g = catalog_group(parts[1]);
    Subgroup s = subgroup_generated(g, parse_int_list(parts[2]));
    return transfer_biset(subgroup_as_group(s).embedding);
  }
  throw ParseError("bad biset spec '" + spec +
                   "' (want id:G, hom:SRC:DST[:images], transfer:GROUP:elements, or JSON)");
}

int run_marks(const std::string& group_spec, const std::string& fmt) {
  GroupPtr g = json_io::parse_group_spec(group_spec);
  TableOfMarks t = table_of_marks(g);
  if (fmt == "json") {
    std::cout << json_io::marks_to_json(t).dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << format::csv_marks(t);
  } else {
    std::cout << format::pretty_marks(t);
  }
  return 0;
}

int run_jn(const std::string& group_spec, int level, const std::string& bivariant_spec,
           const std::string& membership, const std::string& fmt) {
  GroupPtr g = json_io::parse_group_spec(group_spec);
  if (!membership.empty()) {
    BurnsideElement x = element_from_coeffs(g, parse_coeff_list(membership));
    bool in = jn_membership(x, level);
    if (fmt == "json") {
      json_io::json j;
      j["level"] = level;
      j["element"] = json_io::element_to_json(x);
      j["member"] = in;
      std::cout << j.dump(2) << "\n";
    } else if (fmt == "csv") {
      std::cout << "member\n" << (in ? "true" : "false") << "\n";
    } else {
      std::cout << format::pretty_element(x) << (in ? " is " : " is not ") << "in J_" << level
                << "\n";
    }
    return 0;
  }
  IntegerLattice l;
  std::vector<std::string> cols;
  if (!bivariant_spec.empty()) {
    GroupPtr h = json_io::parse_group_spec(bivariant_spec);
    l = jn_bivariant(g, h, level);
    cols = biset_space(g, h).basis_labels;
  } else {
    l = jn_ideal(g, level);
    cols = format::class_labels(g);
  }
  if (fmt == "json") {
    json_io::json j = json_io::lattice_to_json(l);
    j["level"] = level;
    j["column_labels"] = cols;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << format::csv_lattice(l, cols);
  } else {
    std::cout << "J_" << level << ": " << format::pretty_lattice(l, cols);
  }
  return 0;
}

int run_compose(const std::string& spec_a, const std::string& spec_b, const std::string& route,
                const std::string& fmt) {
  BisetElement a = parse_biset_spec(spec_a);
  BisetElement b = parse_biset_spec(spec_b);
  BisetElement c = route == "explicit" ? compose(a, b) : compose_double_coset(a, b);
  if (fmt == "json") {
    std::cout << json_io::biset_to_json(c).dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << format::csv_biset(c);
  } else {
    std::cout << format::pretty_biset(c);
  }
  return 0;
}

int run_verify(bool as_json) {
  verification::VerificationReport report = verification::run_verification();
  if (as_json) {
    json_io::json checks = json_io::json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"claim", c.claim},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass},
                        {"ms", c.ms},
                        {"limit_ms", c.limit_ms}});
    }
    json_io::json j;
    j["checks"] = checks;
    j["all_pass"] = report.all_pass();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.ms << "ms of "
                << c.limit_ms << "ms)\n";
      if (!c.pass) {
        std::cout << "      claim:    " << c.claim << "\n";
        std::cout << "      expected: " << c.expected << "\n";
        std::cout << "      actual:   " << c.actual << "\n";
      }
    }
    std::cout << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burnside ring and biset calculator for finite groups"};
  app.require_subcommand(1);

  std::string fmt = "pretty";
  int cap = 0;
  bool serial = false;
  app.add_option("--format", fmt, "output format")
      ->check(CLI::IsMember({"pretty", "csv", "json"}));
  app.add_option("--cap", cap, "largest group order to accept");
  app.add_flag("--serial", serial, "disable the parallel kernels");

  std::string group_spec, bivariant_spec, membership, spec_a, spec_b;
  std::string route = "fast";
  int level = 0;
  bool verify_json = false;

  CLI::App* marks = app.add_subcommand("marks", "print the table of marks");
  marks->fallthrough();
  marks->add_option("group", group_spec, "catalog name, inline JSON, or @file.json")->required();

  CLI::App* jn = app.add_subcommand("jn", "print a filtration ideal (or test membership)");
  jn->fallthrough();
  jn->add_option("group", group_spec, "catalog name, inline JSON, or @file.json")->required();
  jn->add_option("level", level, "filtration level n")->required();
  jn->add_option("--bivariant", bivariant_spec, "second group H: work in A(G,H)");
  jn->add_option("--membership", membership, "comma-separated coefficients to test");

  CLI::App* comp = app.add_subcommand("compose", "compose two bisets over a shared middle group");
  comp->fallthrough();
  comp->add_option("first", spec_a, "id:G | hom:SRC:DST[:imgs] | transfer:G:elems | JSON")
      ->required();
  comp->add_option("second", spec_b, "same syntax as first")->required();
  comp->add_option("--route", route, "composition route")
      ->check(CLI::IsMember({"fast", "explicit"}));

  CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suite");
  verify->fallthrough();
  verify->add_flag("--json", verify_json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env_cap = std::getenv("BURNSIDE_CAP")) {
    try {
      burnside::config::set_order_cap(std::stoi(env_cap));
    } catch (const std::exception&) {
      std::cerr << "bad BURNSIDE_CAP value '" << env_cap << "'\n";
      return 2;
    }
  }
  if (cap > 0) burnside::config::set_order_cap(cap);
  if (serial) burnside::parallel::set_enabled(false);

  try {
    if (app.got_subcommand(marks)) return run_marks(group_spec, fmt);
    if (app.got_subcommand(jn)) {
      return run_jn(group_spec, level, bivariant_spec, membership, fmt);
    }
    if (app.got_subcommand(comp)) return run_compose(spec_a, spec_b, route, fmt);
    if (app.got_subcommand(verify)) return run_verify(verify_json);
  } catch (const burnside::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const burnside::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const burnside::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const burnside::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}
