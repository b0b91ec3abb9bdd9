#ifndef STALLINGS_IO_HPP_
#define STALLINGS_IO_HPP_

// Text formats.
//
// Automaton (line based):
//     alphabet <size>
//     states <v>
//     base <id>
//     edge <p> <letter-index> <q>      one line per positive-letter edge
// Blank lines and lines starting with '#' are ignored when parsing.
//
// DOT: one directed edge per positive letter, labelled with the compact
// letter (numeric index for alphabets above 26), base drawn as a double
// circle. parse_dot() reads back what write_dot() emits.
//
// Witness: one line `identify <p> <q> adds <word>` per i-step, then
// `complement: <w1>,<w2>,...`.

#include <span>
#include <string>
#include <string_view>

#include "stallings/automaton.hpp"
#include "stallings/freefactor.hpp"

namespace stallings {

[[nodiscard]] std::string write_automaton(const InverseAutomaton& a);
// Throws ParseError, or InvalidArgument for non-deterministic or
// disconnected data.
[[nodiscard]] InverseAutomaton parse_automaton(std::string_view text);

[[nodiscard]] std::string write_dot(const InverseAutomaton& a);
[[nodiscard]] InverseAutomaton parse_dot(std::string_view text);

[[nodiscard]] std::string write_witness(const SearchWitness& witness,
                                        std::span<const Word> complement);

}  // namespace stallings

#endif  // STALLINGS_IO_HPP_
