#pragma once

#include <iosfwd>
#include <string>

#include "coulomb/abelian.hpp"
#include "coulomb/higgs.hpp"
#include "coulomb/theory.hpp"

namespace coulomb {

// Line-oriented input files.  '#' starts a comment, blank lines are
// skipped, unknown directives are rejected with their line number.
//
//   theory:   gl <n> | torus <rank> | weight <c1> <c2> ...
//   quiver:   vertex <name> V=<int> W=<int> | edge <name> <name>
//   sequence: include <row of inclusion> | project <row of projection>
GaugeTheory parse_theory_file(std::istream& in);
QuiverSpec parse_quiver_file(std::istream& in);
TorusSequence parse_sequence_file(std::istream& in);

GaugeTheory load_theory_file(const std::string& path);
QuiverSpec load_quiver_file(const std::string& path);
TorusSequence load_sequence_file(const std::string& path);

// gl/torus/weight directives; parses back to an equal theory.
std::string theory_to_file(const GaugeTheory& th);

// Elements are sums of terms  coef*w1^a1*...*h^c*E[l1,...,lk]; the E factor
// (at most one per term) carries the lattice point, omitted when zero.
AbelianElement parse_element(const std::string& text, int rank);
std::string element_to_string(const AbelianElement& x);

std::string relation_to_string(const Presentation& pres, const PresentationRelation& rel);
std::string presentation_to_string(const Presentation& pres);

// Per-degree table plus the verdict line
// "MATCH through t^N" / "MISMATCH at t^k: coulomb=a higgs=b".
std::string duality_report_to_string(const DualityReport& rep);

}  // namespace coulomb
