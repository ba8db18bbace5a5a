#pragma once

#include <iosfwd>
#include <string>

#include "gmc/markov.hpp"

namespace gmc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix file format: {"n": int, "rows": [[...], ...]} with full rows.
/// Symmetry is validated within 1e-12 and the lower triangle is mirrored
/// so the stored matrix is exactly symmetric.
SymmetricMatrix read_matrix_json(std::istream& in);
SymmetricMatrix read_matrix_file(const std::string& path);
void write_matrix_json(std::ostream& out, const SymmetricMatrix& m);

/// Chain spec file format: {"sigma": [...], "rho": [...]} with
/// length(rho) = length(sigma) - 1.
ChainSpec read_spec_json(std::istream& in);
ChainSpec read_spec_file(const std::string& path);
void write_spec_json(std::ostream& out, const ChainSpec& spec);

/// True when the JSON document at path looks like a spec file (has a
/// "sigma" key) rather than a matrix file.
bool is_spec_file(const std::string& path);

}  // namespace gmc
