#ifndef APF_ENUMERATE_HPP
#define APF_ENUMERATE_HPP

#include <vector>

#include "apf/ast.hpp"

namespace apf {

/// Candidate enumeration over the shared signature of the example
/// problem: literals in [-2, 2], the arrays a and b, select/store/diff,
/// +/-, the comparisons </<=/=, Boolean connectives, and single-block
/// universal quantifiers with grammar-conforming guards.
///
/// `sizeBound` bounds the AST node count: every literal, constant,
/// variable, application, connective, and quantifier counts one node.
struct EnumOptions {
  int sizeBound = 7;
  bool includeDiff = true;
};

/// All fragment formulas within the size bound, duplicate-free modulo a
/// fixed canonicalization (commutative-argument ordering, and/or
/// flattening, constant folding, dead-binder elimination).
std::vector<FormulaPtr> enumerateCandidates(const EnumOptions& opt);

/// The canonicalization used for deduplication (exposed for tests).
FormulaPtr canonicalize(const FormulaPtr& f);

}  // namespace apf

#endif
