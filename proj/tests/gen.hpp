#ifndef APF_TESTS_GEN_HPP
#define APF_TESTS_GEN_HPP

// Randomized generators shared by the unit and acceptance suites.
// Deterministic: every suite passes its own fixed seed.

#include <random>
#include <string>
#include <vector>

#include "apf/ast.hpp"
#include "apf/model.hpp"

namespace testgen {

using apf::FinArray;
using apf::FormulaPtr;
using apf::Int;
using apf::Model;
using apf::TermPtr;

class Gen {
 public:
  explicit Gen(uint64_t seed, bool sharedOnly = false)
      : rng_(seed), sharedOnly_(sharedOnly) {}

  int ri(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  TermPtr arrTerm(int depth) {
    using namespace apf;
    if (depth <= 0 || ri(0, 2) == 0)
      return mkConst(sym::arrayConst(ri(0, 1) ? "a" : "b"));
    return buildTerm(sym::store(),
                     {arrTerm(depth - 1), intTerm(depth - 1), intTerm(depth - 1)});
  }

  TermPtr intTerm(int depth) {
    using namespace apf;
    int leaf = sharedOnly_ ? 1 : 2;
    if (depth <= 0 || ri(0, 2) == 0) {
      if (ri(0, leaf) == 0) return mkIntLit(ri(-3, 3));
      if (!sharedOnly_ && ri(0, 1)) return mkConst(sym::intConst(ri(0, 1) ? "k" : "l"));
      return mkIntLit(ri(-3, 3));
    }
    switch (ri(0, 3)) {
      case 0:
        return buildTerm(sym::select(), {arrTerm(depth - 1), intTerm(depth - 1)});
      case 1:
        return buildTerm(sym::diff(), {arrTerm(depth - 1), arrTerm(depth - 1)});
      case 2:
        return buildTerm(sym::add(), {intTerm(depth - 1), intTerm(depth - 1)});
      default:
        return buildTerm(sym::sub(), {intTerm(depth - 1), intTerm(depth - 1)});
    }
  }

  FormulaPtr guard(const std::vector<std::string>& vars, int depth = 2) {
    using namespace apf;
    if (depth <= 0 || ri(0, 2) == 0) {
      const std::string& v = vars[static_cast<size_t>(ri(0, int(vars.size()) - 1))];
      switch (ri(0, 4)) {
        case 0:
          return mkAtom(buildTerm(sym::le(), {mkVar(v), intTerm(1)}));
        case 1:
          return mkAtom(buildTerm(sym::le(), {intTerm(1), mkVar(v)}));
        case 2:
          return mkAtom(buildTerm(sym::eq(), {mkVar(v), intTerm(1)}));
        case 3:
          if (vars.size() == 2)
            return mkAtom(buildTerm(sym::le(), {mkVar(vars[0]), mkVar(vars[1])}));
          return mkAtom(buildTerm(sym::le(), {mkVar(v), intTerm(1)}));
        default:
          // ground literal, arbitrary shape
          return mkAtom(buildTerm(sym::lt(), {intTerm(1), intTerm(1)}));
      }
    }
    auto x = guard(vars, depth - 1);
    auto y = guard(vars, depth - 1);
    return ri(0, 1) ? mkAnd(x, y) : mkOr(x, y);
  }

  FormulaPtr valueConstraint(const std::vector<std::string>& vars,
                             int depth = 2) {
    using namespace apf;
    if (depth <= 0 || ri(0, 2) == 0) {
      auto side = [&]() -> TermPtr {
        if (ri(0, 1)) {
          const std::string& v =
              vars[static_cast<size_t>(ri(0, int(vars.size()) - 1))];
          TermPtr read = buildTerm(sym::select(), {arrTerm(1), mkVar(v)});
          if (ri(0, 2) == 0)
            return buildTerm(ri(0, 1) ? sym::add() : sym::sub(),
                             {read, intTerm(0)});
          return read;
        }
        return intTerm(1);
      };
      const apf::FuncSymbol* cmp =
          ri(0, 2) == 0 ? &sym::lt() : ri(0, 1) ? &sym::le() : &sym::eq();
      return mkAtom(buildTerm(*cmp, {side(), side()}));
    }
    auto x = valueConstraint(vars, depth - 1);
    switch (ri(0, 3)) {
      case 0: return mkNot(x);
      case 1: return mkAnd(x, valueConstraint(vars, depth - 1));
      case 2: return mkOr(x, valueConstraint(vars, depth - 1));
      default: return mkImplies(x, valueConstraint(vars, depth - 1));
    }
  }

  FormulaPtr property() {
    using namespace apf;
    std::vector<std::string> vars =
        ri(0, 2) == 0 ? std::vector<std::string>{"j", "jp"}
                      : std::vector<std::string>{"j"};
    FormulaPtr vc = valueConstraint(vars);
    if (ri(0, 1)) return mkForall(vars, vc);  // guard-true normal form
    return mkForall(vars, mkImplies(guard(vars), vc));
  }

  FormulaPtr fragmentFormula(int depth = 2) {
    using namespace apf;
    if (depth <= 0 || ri(0, 1) == 0) {
      if (ri(0, 1)) return property();
      return mkAtom(buildTerm(sym::le(), {intTerm(2), intTerm(2)}));  // QF atom
    }
    auto x = fragmentFormula(depth - 1);
    switch (ri(0, 3)) {
      case 0: return mkNot(x);
      case 1: return mkAnd(x, fragmentFormula(depth - 1));
      case 2: return mkOr(x, fragmentFormula(depth - 1));
      default: return mkImplies(x, fragmentFormula(depth - 1));
    }
  }

  FinArray finArray(int valLo = -8, int valHi = 8, int idxLo = -6,
                    int idxHi = 6, int maxLen = 6) {
    Int left(ri(valLo, valHi)), right(ri(valLo, valHi));
    int len = ri(0, maxLen);
    if (len == 0) right = left;
    std::vector<Int> w;
    for (int j = 0; j < len; ++j) w.emplace_back(ri(valLo, valHi));
    return FinArray::make(left, Int(ri(idxLo, idxHi)), std::move(w), right);
  }

  Model model() {
    Model m;
    m.ints["k"] = ri(-8, 8);
    m.ints["l"] = ri(-8, 8);
    m.arrays["a"] = finArray();
    m.arrays["b"] = finArray();
    return m;
  }

 private:
  std::mt19937_64 rng_;
  bool sharedOnly_;
};

}  // namespace testgen

#endif
