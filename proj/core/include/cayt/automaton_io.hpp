#ifndef CAYT_AUTOMATON_IO_HPP
#define CAYT_AUTOMATON_IO_HPP

#include "cayt/automaton.hpp"

#include <iosfwd>
#include <string>

namespace cayt {

// Text format (.atm):
//   tapes k
//   alphabet s1 s2 ...
//   states N
//   initial i1 ...
//   accepting a1 ...
//   padding relaxed        (only present for relaxed automata)
//   src (x1,...,xk) dst    (one line per transition; pad renders as _)
// '#' starts a comment. Loading a saved automaton reproduces it bit-exactly.
void save_atm(const SyncAutomaton& a, std::ostream& os);
std::string save_atm_string(const SyncAutomaton& a);
SyncAutomaton load_atm(std::istream& is);
SyncAutomaton load_atm_string(const std::string& text);

void save_atm_file(const SyncAutomaton& a, const std::string& path);
SyncAutomaton load_atm_file(const std::string& path);

// Graphviz rendering for inspection.
std::string to_dot(const SyncAutomaton& a, const std::string& name = "automaton");

} // namespace cayt

#endif
