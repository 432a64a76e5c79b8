#pragma once

#include "expbasis/hilbert.hpp"
#include "expbasis/lattice.hpp"
#include "expbasis/scalar.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace expbasis::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitNotBasis = 1,
    kExitInput = 2,
    kExitNumerical = 3,
};

struct ProblemConfig {
    MultiRectangle cubes;
    std::optional<ShiftFamily> shifts;
};

/// {"dimension", "cubes", "shifts"?}. Shift components are "p/q" strings
/// (exact) or numbers (floating; any number makes the whole family floating).
/// Throws Parse and the MultiRectangle validation errors.
ProblemConfig parseConfigText(const std::string& text);

/// {"dimension", "entries": [{"index": [...], "re", "im"}]}
SparseSeq parseSequenceText(const std::string& text);

/// {"dimension", "rects": [[["lo", "hi"], ...], ...]} with rational strings.
RationalRectSet parseRectsText(const std::string& text);

/// Comma-separated components. Integers and "p/q" are exact; anything with a
/// decimal point or exponent is floating.
ShiftVector parseScalarList(const std::string& text);

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expbasis::cli
