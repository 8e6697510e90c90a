#include "apf/model.hpp"

#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace apf {

using json = nlohmann::ordered_json;

Model mkPaperModel(const Int& i) {
  if (i < 0) throw std::invalid_argument("paper model index must be >= 0");
  Model m;
  m.ints["k"] = i;
  m.ints["l"] = i;
  std::vector<Int> wa, wb;
  for (Int j = 1; j <= i; ++j) {
    wa.push_back((j + 1) / 2);  // ceil(j/2), j > 0
    wb.push_back(j / 2 + 1);    // floor(j/2) + 1
  }
  m.arrays["a"] = FinArray::make(0, 1, std::move(wa), (i + 1) / 2);
  m.arrays["b"] = FinArray::make(1, 1, std::move(wb), i / 2 + 1);
  return m;
}

static long long asInt64(const Int& v, const char* what) {
  if (v < std::numeric_limits<long long>::min() ||
      v > std::numeric_limits<long long>::max())
    throw std::range_error(std::string(what) +
                           " exceeds the interchange format's integer range");
  return static_cast<long long>(v);
}

static json arrayToJson(const FinArray& a) {
  json w = json::array();
  for (auto& v : a.window()) w.push_back(asInt64(v, "window value"));
  return json{{"leftTail", asInt64(a.leftTail(), "leftTail")},
              {"lo", asInt64(a.lo(), "lo")},
              {"window", std::move(w)},
              {"rightTail", asInt64(a.rightTail(), "rightTail")}};
}

static FinArray arrayFromJson(const json& j) {
  std::vector<Int> w;
  for (auto& v : j.at("window")) w.emplace_back(v.get<long long>());
  return FinArray::make(Int(j.at("leftTail").get<long long>()),
                        Int(j.at("lo").get<long long>()), std::move(w),
                        Int(j.at("rightTail").get<long long>()));
}

std::string writeModel(const Model& m) {
  json ints = json::object();
  for (auto& [name, v] : m.ints) ints[name] = asInt64(v, "integer constant");
  json arrays = json::object();
  for (auto& [name, a] : m.arrays) arrays[name] = arrayToJson(a);
  json doc{{"ints", std::move(ints)}, {"arrays", std::move(arrays)}};
  return doc.dump(2) + "\n";
}

Model readModel(const std::string& text) {
  json doc = json::parse(text);
  Model m;
  for (auto& [name, v] : doc.at("ints").items())
    m.ints[name] = Int(v.get<long long>());
  for (auto& [name, a] : doc.at("arrays").items())
    m.arrays[name] = arrayFromJson(a);
  return m;
}

ModelFamily::ModelFamily(long long maxIndex) {
  if (maxIndex < 0) throw std::invalid_argument("negative family size");
  models_.reserve(static_cast<size_t>(maxIndex) + 1);
  for (long long i = 0; i <= maxIndex; ++i) models_.push_back(mkPaperModel(i));
}

const Model& ModelFamily::at(long long i) const {
  if (i < 0 || i >= static_cast<long long>(models_.size()))
    throw std::out_of_range("model index outside the prebuilt family");
  return models_[static_cast<size_t>(i)];
}

}  // namespace apf
