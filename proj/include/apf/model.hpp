#ifndef APF_MODEL_HPP
#define APF_MODEL_HPP

#include <map>
#include <string>

#include "apf/finarray.hpp"

namespace apf {

/// Interpretation of the free symbols. diff is not assignable: its
/// meaning is fixed by diffIndex.
struct Model {
  std::map<std::string, Int> ints;
  std::map<std::string, FinArray> arrays;

  bool operator==(const Model& o) const {
    return ints == o.ints && arrays == o.arrays;
  }
};

/// The model M_i: k = l = i, a(j) = 0 / ceil(j/2) / ceil(i/2) and
/// b(j) = 1 / floor(j/2) + 1 / floor(i/2) + 1 on the three regions
/// j <= 0, 0 < j <= i, i < j.
Model mkPaperModel(const Int& i);

/// Model interchange format, e.g.
///   {"ints": {"k": 4}, "arrays": {"a": {"leftTail": 0, "lo": 1,
///    "window": [1, 1], "rightTail": 2}}}
/// Round-trips bit-exactly through writeModel/readModel.
std::string writeModel(const Model& m);
Model readModel(const std::string& text);

/// Caches M_0..M_n so sweeps do not rebuild windows; read-only after
/// construction, safe to share across threads.
class ModelFamily {
 public:
  explicit ModelFamily(long long maxIndex);
  const Model& at(long long i) const;
  long long maxIndex() const { return static_cast<long long>(models_.size()) - 1; }

 private:
  std::vector<Model> models_;
};

}  // namespace apf

#endif
