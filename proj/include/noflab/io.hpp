#pragma once

#include <iosfwd>
#include <string>

#include "noflab/deck_solver.hpp"
#include "noflab/matrix.hpp"
#include "noflab/runtime.hpp"
#include "noflab/symfun.hpp"

namespace noflab {

// Text form: header "k n d", then k rows of n space-separated entries.
void write_matrix_text(std::ostream& os, const InputMatrix& m);
InputMatrix read_matrix_text(std::istream& is);

// JSON form: {"k":., "n":., "d":., "rows":[[..],..]}.
std::string matrix_to_json(const InputMatrix& m);
InputMatrix matrix_from_json(const std::string& text);

// {"protocol":., "k":., "n":., "d":., "messages":[{"player":., "counts":[..], "bits":.},..]}.
std::string transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const std::string& text);

// One line per tuple: comma-joined row values, a space, the coefficient.
void dump_coefficients(std::ostream& os, const std::vector<SortedTuple>& tuples,
                       const CoefficientVector& coeffs);

// One line per nonzero entry: the type's counts, " : ", the value.
void dump_sparse_vector(std::ostream& os, const TypeIndexer& idx,
                        std::span<const long long> values);

InputMatrix load_matrix_file(const std::string& path);  // .json by extension, else text

}  // namespace noflab
