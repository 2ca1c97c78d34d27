#pragma once

#include <string>

#include "sl2dirac/sl2_module.hpp"

namespace sl2dirac {

/// Parses a module description:
///   { "basis": [ { "label": str, "weight": int }, ... ],
///     "interior_min_weight": int,
///     "complete": bool (optional, default false),
///     "actions": { "e": [[src, dst, "p/q"], ...], "f": [...],
///                  "h": optional, derived from the weights when absent } }
/// Indices are 0-based; coefficients are exact rational strings. The loaded
/// module is rejected when the certified relations fail, naming the offending
/// basis vector.
Sl2Module load_module_spec(const std::string& json_text);
Sl2Module load_module_file(const std::string& path);

std::string save_module_spec(const Sl2Module& m);

/// Parses a sequence description:
///   { "sub": <module spec or builtin name>, "total": ..., "quot": ...,
///     "inclusion": [[rational...]...], "projection": [[...]...] }
/// Matrices are dense row arrays of rational strings (target rows by source
/// columns). Builtin names resolve at the given depth.
ShortExactSequence load_sequence_spec(const std::string& json_text,
                                      std::size_t depth);
ShortExactSequence load_sequence_file(const std::string& path,
                                      std::size_t depth);

/// Resolves "P", "verma:<hw>", "finite:<n>", "trivial",
/// "sum:(a,b,...)", or a path to a module spec file.
Sl2Module resolve_module_selector(const std::string& selector,
                                  std::size_t depth);

}  // namespace sl2dirac
