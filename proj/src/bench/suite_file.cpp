#include "revroot/bench/suite_file.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>

#include "revroot/expr/evaluate.hpp"

namespace revroot::bench {

namespace {

namespace pt = boost::property_tree;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> items;
  if (trim(s).empty()) return items;
  for (;;) {
    const auto comma = s.find(',');
    items.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return items;
}

class CaseReader {
 public:
  CaseReader(std::string source, std::string section, const pt::ptree& tree)
      : source_(std::move(source)), section_(std::move(section)), tree_(tree) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw SuiteFileError(source_ + ": [" + section_ + "] " + key + ": " + what);
  }

  std::optional<std::string> text(const std::string& key) {
    seen_.insert(key);
    const auto it = tree_.find(key);
    if (it == tree_.not_found()) return std::nullopt;
    return it->second.data();
  }

  std::string required(const std::string& key) {
    auto v = text(key);
    if (!v) fail(key, "missing required key");
    return *v;
  }

  double parse_real(const std::string& key, std::string_view s) const {
    s = trim(s);
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
      fail(key, "'" + std::string(s) + "' is not a number");
    }
    return v;
  }

  std::optional<double> real(const std::string& key) {
    auto v = text(key);
    if (!v) return std::nullopt;
    return parse_real(key, *v);
  }

  std::optional<std::int64_t> integer(const std::string& key) {
    auto v = text(key);
    if (!v) return std::nullopt;
    const std::string_view s = trim(*v);
    std::int64_t out = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
      fail(key, "'" + std::string(s) + "' is not an integer");
    }
    return out;
  }

  void reject_unknown_keys() const {
    for (const auto& [key, _] : tree_) {
      if (!seen_.contains(key)) fail(key, "unknown key");
    }
  }

  const std::string& section() const noexcept { return section_; }

 private:
  std::string source_;
  std::string section_;
  const pt::ptree& tree_;
  std::set<std::string> seen_;
};

SuiteCase read_case(const std::string& source, const std::string& name, const pt::ptree& tree) {
  CaseReader r(source, name, tree);

  const std::string expr_text = r.required("expr");
  std::optional<expr::Expression> g;
  try {
    g = expr::parse(expr_text);
  } catch (const expr::ParseError& e) {
    r.fail("expr", e.what());
  }

  const double x0 = r.parse_real("x0", r.required("x0"));
  const std::optional<double> root = r.real("root");

  std::vector<double> derivs;
  if (auto d = r.text("derivs")) {
    for (auto item : split_list(*d)) derivs.push_back(r.parse_real("derivs", item));
    if (derivs.empty()) r.fail("derivs", "empty derivative list");
    if (!root) r.fail("derivs", "explicit derivatives need a root");
  }

  std::vector<MethodRequest> methods;
  const std::string method_list = r.required("methods");
  for (auto id : split_list(method_list)) {
    try {
      methods.push_back(parse_method_request(id));
    } catch (const std::invalid_argument& e) {
      r.fail("methods", e.what());
    }
  }

  IterationConfig cfg;
  if (auto v = r.real("atol")) cfg.atol = *v;
  if (auto v = r.real("rtol")) cfg.rtol = *v;
  if (auto v = r.real("ftol")) cfg.ftol = *v;
  if (auto v = r.integer("max_steps")) cfg.max_steps = *v;
  if (auto v = r.real("x_max")) cfg.x_max = *v;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    r.fail("tolerances", e.what());
  }

  std::string title = r.text("title").value_or("");
  r.reject_unknown_keys();

  auto problem = [&]() -> expr::ProblemSpec {
    try {
      if (!derivs.empty()) return expr::ProblemSpec(*g, *root, derivs);
      if (root) return expr::ProblemSpec(*g, *root);
      return expr::ProblemSpec(*g);
    } catch (const std::invalid_argument& e) {
      r.fail("root", e.what());
    }
  }();
  return SuiteCase{name, std::move(title), std::move(problem), x0, std::move(methods), cfg};
}

}  // namespace

SuiteSpec parse_suite(std::istream& in, const std::string& source_name) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw SuiteFileError(source_name + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  SuiteSpec spec;
  for (const auto& [key, node] : tree) {
    if (!node.empty()) {
      spec.cases.push_back(read_case(source_name, key, node));
      continue;
    }
    const std::string value(trim(node.data()));
    if (key == "repetitions") {
      int reps = 0;
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), reps);
      if (ec != std::errc() || end != value.data() + value.size() || reps < 1) {
        throw SuiteFileError(source_name + ": repetitions must be a positive integer, got '" + value + "'");
      }
      spec.repetitions = reps;
    } else if (key == "format") {
      const auto f = report_format_from_name(value);
      if (!f) throw SuiteFileError(source_name + ": format must be csv or markdown, got '" + value + "'");
      spec.format = *f;
    } else {
      throw SuiteFileError(source_name + ": unknown top-level key '" + key + "'");
    }
  }
  if (spec.cases.empty()) throw SuiteFileError(source_name + ": suite defines no cases");
  return spec;
}

SuiteSpec load_suite_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SuiteFileError("cannot open suite file '" + path.string() + "': file not found or unreadable");
  return parse_suite(in, path.string());
}

}  // namespace revroot::bench
