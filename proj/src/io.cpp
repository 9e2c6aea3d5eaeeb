#include "edp/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "edp/error.hpp"

namespace edp {

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ValidationError("not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

std::size_t size_from_json(const Json& j, const char* what) {
  const Integer v = integer_from_json(j);
  if (v < 0 || !v.fits_ulong_p()) throw ValidationError(std::string(what) + " must be a non-negative integer");
  return v.get_ui();
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

IntMatrix matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ValidationError("action matrix must have " + std::to_string(n) + " rows");
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw ValidationError("action matrix must have " + std::to_string(n) + " columns");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

GroupPtr group_from_json(const Json& j) {
  const std::string type = field(j, "type").is_string() ? j.at("type").get<std::string>() : "";
  if (type == "cyclic") {
    const std::size_t n = size_from_json(field(j, "order"), "order");
    if (n == 0) throw ValidationError("cyclic group order must be positive");
    return make_cyclic(n);
  }
  if (type == "product") {
    const Json& factors = field(j, "factors");
    if (!factors.is_array() || factors.empty()) throw ValidationError("product needs a nonempty factor list");
    GroupPtr g = group_from_json(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(*g, *group_from_json(factors[i]));
    return g;
  }
  if (type == "table") {
    const Json& t = field(j, "cayley");
    if (!t.is_array()) throw ValidationError("cayley must be an array of rows");
    std::vector<std::vector<Element>> table;
    for (const auto& row : t) {
      if (!row.is_array()) throw ValidationError("cayley must be an array of rows");
      std::vector<Element> r;
      for (const auto& x : row) r.push_back(static_cast<Element>(size_from_json(x, "cayley entry")));
      table.push_back(std::move(r));
    }
    return std::make_shared<const FiniteGroup>(std::move(table));
  }
  throw ValidationError("unknown group type \"" + type + "\"");
}

Json group_to_json(const FiniteGroup& g) {
  if (g == *make_cyclic(g.order())) return Json{{"type", "cyclic"}, {"order", g.order()}};
  Json rows = Json::array();
  for (const auto& row : g.cayley()) rows.push_back(row);
  return Json{{"type", "table"}, {"cayley", rows}};
}

GaloisModule module_from_json(const Json& j) {
  const GroupPtr group = group_from_json(field(j, "group"));
  const std::size_t free_rank = size_from_json(field(j, "free_rank"), "free_rank");
  std::vector<Integer> torsion;
  if (j.contains("torsion")) {
    if (!j.at("torsion").is_array()) throw ValidationError("torsion must be an array");
    for (const auto& q : j.at("torsion")) torsion.push_back(integer_from_json(q));
  }
  const std::size_t n = free_rank + torsion.size();

  // Sort torsion into nondecreasing order and move coordinates along with it.
  std::vector<std::size_t> order(torsion.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return torsion[a] < torsion[b]; });
  std::vector<std::size_t> perm(n);  // new coordinate -> old coordinate
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(free_rank), 0);
  std::vector<Integer> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    perm[free_rank + i] = free_rank + order[i];
    sorted.push_back(torsion[order[i]]);
  }

  std::map<Element, IntMatrix> gens;
  if (j.contains("action")) {
    const Json& action = j.at("action");
    if (!action.is_object()) throw ValidationError("action must map element indices to matrices");
    for (const auto& [key, mat] : action.items()) {
      std::size_t e = 0;
      try {
        std::size_t used = 0;
        e = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ValidationError("action key \"" + key + "\" is not an element index");
      }
      if (e >= group->order()) throw ValidationError("action key " + key + " is not a group element");
      gens[static_cast<Element>(e)] = matrix_from_json(mat, n).select(perm, perm);
    }
  }
  return GaloisModule::from_generators(group, free_rank, std::move(sorted), gens);
}

Json module_to_json(const GaloisModule& m) {
  Json torsion = Json::array();
  for (const auto& q : m.torsion()) torsion.push_back(q.get_str());
  Json action = Json::object();
  for (Element g : m.group().generators()) {
    Json rows = Json::array();
    const IntMatrix& a = m.action(g);
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(vector_to_json(a.row(r)));
    action[std::to_string(g)] = rows;
  }
  return Json{{"group", group_to_json(m.group())},
              {"free_rank", m.free_rank()},
              {"torsion", torsion},
              {"action", action}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation out;
  out.group = group_from_json(field(j, "group"));
  const Json& orbits = field(j, "orbits");
  if (!orbits.is_array() || orbits.empty()) throw ValidationError("orbits must be a nonempty array of subgroups");
  for (const auto& o : orbits) {
    if (!o.is_array()) throw ValidationError("each orbit is given by its stabilizer's elements");
    std::vector<Element> elems;
    for (const auto& x : o) {
      const std::size_t e = size_from_json(x, "subgroup element");
      if (e >= out.group->order()) throw ValidationError("subgroup element out of range");
      elems.push_back(static_cast<Element>(e));
    }
    out.orbits.push_back(subgroup_of(*out.group, elems));
  }
  for (const auto& x : field(j, "m")) out.m.push_back(integer_from_json(x));
  return out;
}

Json subgroup_to_json(const SubgroupClass& h) {
  return Json{{"elements", h.representative}, {"index", h.index}};
}

Json result_to_json(const EdResult& r) {
  Json summands = Json::array();
  for (const auto& s : r.certificate.summands)
    summands.push_back(Json{{"subgroup", subgroup_to_json(s.subgroup)}, {"generator", vector_to_json(s.generator)}});
  return Json{{"min_rank", r.min_rank},
              {"ed", r.ed},
              {"certificate", Json{{"summands", summands}}},
              {"verified", r.verified},
              {"diagnostics", r.diagnostics}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace edp
