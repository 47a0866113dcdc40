#include "qcfd/problem_json.hpp"

#include <istream>
#include <iterator>
#include <json.hpp>

namespace qcfd {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) throw ConfigurationError(where + ": unknown key '" + item.key() + "'");
  }
}

double number_or(const json& obj, const char* key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigurationError(where + ": '" + key + "' must be a number");
  return v.get<double>();
}

MonomialTerm parse_term(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigurationError(where + ": term must be an object");
  reject_unknown_keys(obj, {"coeff", "power", "power_alpha", "anchor", "derivative", "time_rate"},
                      where);
  MonomialTerm t;
  t.coeff = number_or(obj, "coeff", t.coeff, where);
  t.power = number_or(obj, "power", t.power, where);
  t.power_alpha = number_or(obj, "power_alpha", t.power_alpha, where);
  t.time_rate = number_or(obj, "time_rate", t.time_rate, where);
  if (obj.contains("anchor")) {
    const json& a = obj.at("anchor");
    if (a == "left") {
      t.anchor = Side::Left;
    } else if (a == "right") {
      t.anchor = Side::Right;
    } else {
      throw ConfigurationError(where + ": anchor must be \"left\" or \"right\"");
    }
  }
  if (obj.contains("derivative")) {
    if (!obj.at("derivative").is_boolean()) {
      throw ConfigurationError(where + ": 'derivative' must be true or false");
    }
    t.derivative = obj.at("derivative").get<bool>();
  }
  return t;
}

TermList parse_terms(const json& root, const char* key, bool required) {
  if (!root.contains(key)) {
    if (required) throw ConfigurationError(std::string("problem: missing '") + key + "'");
    return {};
  }
  const json& arr = root.at(key);
  if (!arr.is_array()) throw ConfigurationError(std::string("problem: '") + key + "' must be a list");
  TermList out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(parse_term(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

}  // namespace

ProblemFile parse_problem_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigurationError(std::string("problem: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigurationError("problem: top level must be an object");
  reject_unknown_keys(root,
                      {"alpha", "K1", "K2", "t_final", "source", "initial", "left_bc",
                       "right_bc", "exact", "correction"},
                      "problem");
  ProblemFile out;
  TermProblem1D& p = out.problem;
  if (!root.contains("alpha")) throw ConfigurationError("problem: missing 'alpha'");
  p.alpha = number_or(root, "alpha", p.alpha, "problem");
  require_fractional_order(p.alpha, "problem");
  p.K1 = number_or(root, "K1", p.K1, "problem");
  p.K2 = number_or(root, "K2", p.K2, "problem");
  p.t_final = number_or(root, "t_final", p.t_final, "problem");
  p.source = parse_terms(root, "source", true);
  p.initial = parse_terms(root, "initial", true);
  p.left_bc = parse_terms(root, "left_bc", false);
  p.right_bc = parse_terms(root, "right_bc", false);
  p.exact = parse_terms(root, "exact", false);
  if (root.contains("correction")) {
    const json& c = root.at("correction");
    if (!c.is_number_integer() || c.get<int>() < 0) {
      throw ConfigurationError("problem: 'correction' must be a nonnegative integer");
    }
    out.correction = c.get<int>();
  }
  return out;
}

ProblemFile load_problem_json(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_problem_json(text);
}

}  // namespace qcfd
