#ifndef NEK_VARS_HPP
#define NEK_VARS_HPP

#include <string>
#include <vector>

namespace nek::alg {

// Index into the ordered variable list of a computation context.
// The order is total and fixed for the lifetime of the context;
// every polynomial built under one context shares it.
using VarIndex = int;

struct VarTable {
  std::vector<std::string> names;

  int size() const { return static_cast<int>(names.size()); }
  const std::string& name(VarIndex v) const { return names.at(v); }
};

}  // namespace nek::alg

#endif
