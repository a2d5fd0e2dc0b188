#include "tb/policy.hpp"

#include "tb/error.hpp"
#include "tb/text.hpp"

namespace tb {

PolicyDescriptor PolicyDescriptor::parse(const std::string& text, TaskKind tag) {
  PolicyDescriptor d;
  d.tag = tag;
  const std::vector<std::string> tokens = split_ws(text);
  if (tokens.empty()) throw ValidationError("empty policy spec");
  d.name = tokens.front();
  for (size_t i = 1; i < tokens.size(); ++i) {
    const size_t eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ValidationError("bad policy parameter '" + tokens[i] + "' (expected key=value)");
    }
    d.params[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
  }
  return d;
}

std::string PolicyDescriptor::param_or(const std::string& key, const std::string& fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double PolicyDescriptor::param_double(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : parse_double(it->second);
}

int PolicyDescriptor::param_int(const std::string& key, int fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : static_cast<int>(parse_int(it->second));
}

}  // namespace tb
