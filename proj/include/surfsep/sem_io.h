#pragma once

#include <iosfwd>
#include <string>

#include "surfsep/embedding.h"

namespace surfsep {

/// Parses the SEM1 text format:
///
///   SEM 1
///   n <vertex-count>
///   m <edge-count>
///   e <id> <u> <v> <+|->     (one line per edge)
///   r <v> <dart> <dart> ...  (one line per vertex, cyclic order)
///
/// `#` starts a comment. The header must come first; all other lines are
/// accepted in any order. Throws std::runtime_error on malformed input and
/// std::invalid_argument when the rotation system is inconsistent.
EmbeddedMultigraph read_sem1(std::istream& in);
EmbeddedMultigraph read_sem1_string(const std::string& text);
EmbeddedMultigraph read_sem1_file(const std::string& path);

/// Canonical writer: fixed line order, edges and rotations by increasing id,
/// each rotation listed starting at its smallest dart. Reading the output
/// back and writing again is byte-identical.
void write_sem1(std::ostream& out, const EmbeddedMultigraph& g);
std::string write_sem1_string(const EmbeddedMultigraph& g);
void write_sem1_file(const std::string& path, const EmbeddedMultigraph& g);

}  // namespace surfsep
