#ifndef CRN_PARSE_HPP
#define CRN_PARSE_HPP

#include <stdexcept>
#include <string>

#include "crn/network.hpp"

namespace crn {

/// Network text format, one reaction statement per line:
///
///   reaction := complex ("->" | "<->") complex [";" "k=" rational ["," "k=" rational]]
///   complex  := "0" | term ("+" term)*
///   term     := [integer] species
///
/// "<->" expands to two reactions, forward rate first. "#" starts a comment.
/// Species names start with a letter, "_" or a non-ASCII (UTF-8) character and
/// may continue with those, digits, "*" or "^". Rates are exact positive
/// rationals: "3", "3/2" or "1.5".
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, int line, int column);
    struct Preformatted {};
    ParseError(Preformatted, std::string full_message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// Parses network text. Errors (with line/column): malformed syntax, zero or
/// negative rates, trivial reactions, duplicate reactions.
ReactionNetwork parse_network(const std::string& text);

/// Canonical text: one reaction per line, species in index order within each
/// complex, unit coefficients omitted. parse_network(format_network(n)) == n.
std::string format_network(const ReactionNetwork& net);

/// One reaction in the same canonical style ("2 X1 + X2 -> 3 X1").
std::string format_reaction(const ReactionNetwork& net, const Reaction& r);

/// Reads a file and parses it; file errors become std::runtime_error.
ReactionNetwork load_network(const std::string& path);

}  // namespace crn

#endif
