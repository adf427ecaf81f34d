#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rdn {

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

// An RDF term: an absolute IRI, a blank node label, or a typed literal.
// Terms are immutable values; ordering is (kind, value, datatype), so IRIs
// sort before blank nodes, which sort before literals.
class Term {
public:
    // Throws std::invalid_argument if `value` is empty, contains whitespace
    // or angle brackets, or has no scheme separator.
    static Term iri(std::string value);

    // Label must match [A-Za-z0-9_]+.
    static Term blank(std::string label);

    // Literals always carry a datatype IRI.
    static Term literal(std::string lexical, std::string datatype_iri);

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_blank() const { return kind_ == TermKind::BlankNode; }
    bool is_literal() const { return kind_ == TermKind::Literal; }

    // The IRI string, blank node label, or lexical form.
    const std::string& value() const { return value_; }

    // Datatype IRI for literals; empty for the other kinds.
    const std::string& datatype() const { return datatype_; }

    auto operator<=>(const Term&) const = default;
    bool operator==(const Term&) const = default;

private:
    Term(TermKind kind, std::string value, std::string datatype)
        : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)) {}

    TermKind kind_;
    std::string value_;
    std::string datatype_;
};

// A single statement. Construction enforces the RDF positional rules:
// the predicate must be an IRI and the subject must not be a literal.
class Triple {
public:
    Triple(Term subject, Term predicate, Term object);

    const Term& subject() const { return subject_; }
    const Term& predicate() const { return predicate_; }
    const Term& object() const { return object_; }

    auto operator<=>(const Triple&) const = default;
    bool operator==(const Triple&) const = default;

private:
    Term subject_;
    Term predicate_;
    Term object_;
};

// Wildcard match over a graph; an absent position matches anything.
struct TriplePattern {
    std::optional<Term> subject;
    std::optional<Term> predicate;
    std::optional<Term> object;

    bool matches(const Triple& t) const {
        return (!subject || *subject == t.subject()) &&
               (!predicate || *predicate == t.predicate()) &&
               (!object || *object == t.object());
    }
};

// N-Triples-style rendering: <iri>, _:label, "lexical"^^<datatype>.
// Used for diagnostics and reports, not for document output.
std::string to_string(const Term& term);
std::string to_string(const Triple& triple);

}  // namespace rdn
