#include "sl2dirac/module_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

namespace {

using nlohmann::json;

Rational parse_coefficient(const json& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (j.is_string()) {
    const auto r = Rational::parse(j.get<std::string>());
    if (r) return *r;
  }
  throw Error(ErrorKind::ParseFailure,
              "coefficient must be an integer or a rational string \"p/q\"");
}

Matrix action_from_triplets(const json& triplets, std::size_t dim,
                            const char* which) {
  Matrix m(dim, dim);
  if (!triplets.is_array()) {
    throw Error(ErrorKind::ParseFailure,
                std::string("action \"") + which + "\" must be an array");
  }
  for (const auto& t : triplets) {
    if (!t.is_array() || t.size() != 3) {
      throw Error(ErrorKind::ParseFailure,
                  "action entries must be [src, dst, coefficient]");
    }
    const std::size_t src = t[0].get<std::size_t>();
    const std::size_t dst = t[1].get<std::size_t>();
    if (src >= dim || dst >= dim) {
      throw Error(ErrorKind::ParseFailure, "action index out of range");
    }
    m.at(dst, src) = parse_coefficient(t[2]);
  }
  return m;
}

json module_to_json(const Sl2Module& m) {
  json j;
  j["basis"] = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    j["basis"].push_back({{"label", m.label(i)}, {"weight", m.weight(i)}});
  }
  j["interior_min_weight"] = m.interior_min_weight();
  j["complete"] = m.is_complete();
  json e = json::array();
  json f = json::array();
  for (std::size_t src = 0; src < m.dim(); ++src) {
    for (std::size_t dst = 0; dst < m.dim(); ++dst) {
      if (!m.action_e().at(dst, src).is_zero()) {
        e.push_back({src, dst, m.action_e().at(dst, src).str()});
      }
      if (!m.action_f().at(dst, src).is_zero()) {
        f.push_back({src, dst, m.action_f().at(dst, src).str()});
      }
    }
  }
  j["actions"] = {{"e", std::move(e)}, {"f", std::move(f)}};
  return j;
}

Sl2Module module_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("actions") ||
      !j.contains("interior_min_weight")) {
    throw Error(ErrorKind::ParseFailure,
                "module spec needs basis, actions and interior_min_weight");
  }
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (const auto& b : j.at("basis")) {
    labels.push_back(b.at("label").get<std::string>());
    weights.push_back(b.at("weight").get<Weight>());
  }
  const std::size_t dim = labels.size();
  const json& actions = j.at("actions");
  Matrix e = action_from_triplets(actions.at("e"), dim, "e");
  Matrix f = action_from_triplets(actions.at("f"), dim, "f");
  if (actions.contains("h")) {
    const Matrix h = action_from_triplets(actions.at("h"), dim, "h");
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Rational expected = i == k ? Rational(weights[i]) : Rational(0);
        if (h.at(i, k) != expected) {
          throw Error(ErrorKind::ParseFailure,
                      "h action must be diagonal with the basis weights");
        }
      }
    }
  }
  Sl2Module m(std::move(labels), std::move(weights), std::move(e), std::move(f),
              j.at("interior_min_weight").get<Weight>(),
              j.value("complete", false));
  const RelationReport rel = check_relations(m);
  if (!rel.ok) {
    std::ostringstream os;
    os << "loaded module violates the relations at basis vector \""
       << rel.defects.front().label << "\" (" << rel.defects.front().relation
       << ")";
    throw Error(ErrorKind::RelationViolation, os.str());
  }
  return m;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw Error(ErrorKind::ParseFailure, "invalid JSON");
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseFailure, "cannot open file: " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Matrix dense_matrix_from_json(const json& j, const char* which) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorKind::ParseFailure,
                std::string(which) + " must be a non-empty row array");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) {
      throw Error(ErrorKind::ParseFailure,
                  std::string(which) + " rows have uneven lengths");
    }
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = parse_coefficient(j[i][k]);
  }
  return m;
}

Sl2Module module_from_selector_or_json(const json& j, std::size_t depth) {
  if (j.is_string()) return resolve_module_selector(j.get<std::string>(), depth);
  return module_from_json(j);
}

}  // namespace

Sl2Module load_module_spec(const std::string& json_text) {
  return module_from_json(parse_text(json_text));
}

Sl2Module load_module_file(const std::string& path) {
  return load_module_spec(read_file(path));
}

std::string save_module_spec(const Sl2Module& m) {
  return module_to_json(m).dump(2);
}

ShortExactSequence load_sequence_spec(const std::string& json_text,
                                      std::size_t depth) {
  const json j = parse_text(json_text);
  if (!j.contains("sub") || !j.contains("total") || !j.contains("quot") ||
      !j.contains("inclusion") || !j.contains("projection")) {
    throw Error(ErrorKind::ParseFailure,
                "sequence spec needs sub, total, quot, inclusion, projection");
  }
  Sl2Module sub = module_from_selector_or_json(j.at("sub"), depth);
  Sl2Module total = module_from_selector_or_json(j.at("total"), depth);
  Sl2Module quot = module_from_selector_or_json(j.at("quot"), depth);
  Matrix incl = dense_matrix_from_json(j.at("inclusion"), "inclusion");
  Matrix proj = dense_matrix_from_json(j.at("projection"), "projection");
  if (incl.rows() != total.dim() || incl.cols() != sub.dim() ||
      proj.rows() != quot.dim() || proj.cols() != total.dim()) {
    throw Error(ErrorKind::ParseFailure, "sequence matrices have wrong shapes");
  }
  ShortExactSequence s{ModuleMap{std::move(sub), total, std::move(incl)},
                       ModuleMap{total, std::move(quot), std::move(proj)}};
  const SequenceReport rep = check_sequence(s);
  if (!rep.ok) {
    throw Error(ErrorKind::ExactnessViolation,
                "loaded sequence fails exactness: " + rep.failures.front());
  }
  return s;
}

ShortExactSequence load_sequence_file(const std::string& path,
                                      std::size_t depth) {
  return load_sequence_spec(read_file(path), depth);
}

Sl2Module resolve_module_selector(const std::string& selector,
                                  std::size_t depth) {
  if (selector == "P") return build_module_p(depth).module;
  if (selector == "trivial") return build_finite_dim(1);
  if (selector.rfind("verma:", 0) == 0) {
    try {
      return build_verma(std::stoi(selector.substr(6)), depth);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseFailure,
                  "verma selector needs an integer highest weight");
    }
  }
  if (selector.rfind("finite:", 0) == 0) {
    try {
      const long n = std::stol(selector.substr(7));
      if (n < 1) throw std::invalid_argument("n");
      return build_finite_dim(static_cast<std::size_t>(n));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseFailure,
                  "finite selector needs a positive dimension");
    }
  }
  if (selector.rfind("sum:(", 0) == 0 && selector.back() == ')') {
    const std::string inner = selector.substr(5, selector.size() - 6);
    std::vector<Sl2Module> parts;
    std::size_t start = 0;
    while (start <= inner.size()) {
      const std::size_t comma = inner.find(',', start);
      const std::string part =
          inner.substr(start, comma == std::string::npos ? std::string::npos
                                                         : comma - start);
      if (part.empty()) {
        throw Error(ErrorKind::ParseFailure, "empty summand in sum selector");
      }
      if (part.rfind("sum:", 0) == 0) {
        throw Error(ErrorKind::ParseFailure, "nested sums are not supported");
      }
      parts.push_back(resolve_module_selector(part, depth));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return direct_sum(parts);
  }
  if (selector.find('.') != std::string::npos ||
      selector.find('/') != std::string::npos) {
    return load_module_file(selector);
  }
  throw Error(ErrorKind::ParseFailure, "unknown module selector: " + selector);
}

}  // namespace sl2dirac
