#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rdn/graph.hpp"
#include "rdn/vocab.hpp"

namespace rdn {

enum class ParseErrorKind { UnexpectedToken, UnknownPrefix, UnterminatedString, MalformedIri };

std::string_view to_string(ParseErrorKind kind);

// Positioned parse failure; line and column are 1-based and point at the
// first offending character. Parsing is all-or-nothing, so a thrown
// ParseError means no graph was produced.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, int column, const std::string& message);

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
    std::string message_;
};

struct ParseOptions {
    // Namespace the empty prefix ":" resolves to. rdf, rdfs, xsd and owl are
    // pre-bound as well; @prefix directives override any of these.
    std::string base = std::string(kDefaultBase);

    // Receives a note per @prefix that rebinds a prefix already declared in
    // the same document (last declaration wins).
    std::vector<std::string>* warnings = nullptr;
};

// Parses the Turtle subset: @prefix directives, <IRI> references, prefixed
// names, _:labels, "string" literals with optional ^^datatype, the keyword
// `a`, predicate lists (;) and object lists (,), and # comments. Anonymous
// blank nodes, collections, language tags and numeric/boolean shorthand are
// not part of the subset.
Graph parse_turtle(std::string_view text, const ParseOptions& options = {});

// One term in the same subset syntax (used for triple arguments on the
// command line). The whole input must be a single term.
Term parse_term(std::string_view text, const PrefixMap& prefixes);

// Deterministic Turtle: prefix directives for the fixed namespace set (the
// base plus owl/rdf/rdfs/xsd), subjects sorted by term order, predicates
// sorted within subject, objects sorted within predicate. Output depends
// only on the triple set and the base argument, so equal graphs serialize
// to identical bytes.
std::string serialize_turtle(const Graph& graph, const std::string& base = std::string(kDefaultBase));

// Compact one-term and one-triple renderings against the same fixed
// namespace set, used by reports, traces and derivation trees.
std::string term_to_turtle(const Term& term, const std::string& base = std::string(kDefaultBase));
std::string triple_to_turtle(const Triple& triple, const std::string& base = std::string(kDefaultBase));

}  // namespace rdn
