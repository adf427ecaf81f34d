#include "rdn/term.hpp"

#include <cctype>
#include <stdexcept>

namespace rdn {

namespace {

bool has_whitespace(std::string_view s) {
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return true;
    }
    return false;
}

}  // namespace

Term Term::iri(std::string value) {
    if (value.empty()) {
        throw std::invalid_argument("malformed IRI: empty");
    }
    if (has_whitespace(value)) {
        throw std::invalid_argument("malformed IRI: contains whitespace: " + value);
    }
    if (value.find('<') != std::string::npos || value.find('>') != std::string::npos) {
        throw std::invalid_argument("malformed IRI: contains angle bracket: " + value);
    }
    if (value.find(':') == std::string::npos) {
        throw std::invalid_argument("malformed IRI: not absolute (no scheme): " + value);
    }
    return Term(TermKind::Iri, std::move(value), {});
}

Term Term::blank(std::string label) {
    if (label.empty()) {
        throw std::invalid_argument("malformed blank node label: empty");
    }
    for (char c : label) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            throw std::invalid_argument("malformed blank node label: " + label);
        }
    }
    return Term(TermKind::BlankNode, std::move(label), {});
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
    Term dt = iri(std::move(datatype_iri));  // reuse IRI validation
    return Term(TermKind::Literal, std::move(lexical), dt.value());
}

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      object_(std::move(object)) {
    if (!predicate_.is_iri()) {
        throw std::invalid_argument("triple predicate must be an IRI: " + to_string(predicate_));
    }
    if (subject_.is_literal()) {
        throw std::invalid_argument("triple subject must not be a literal: " + to_string(subject_));
    }
}

std::string to_string(const Term& term) {
    switch (term.kind()) {
        case TermKind::Iri:
            return "<" + term.value() + ">";
        case TermKind::BlankNode:
            return "_:" + term.value();
        case TermKind::Literal: {
            std::string out = "\"";
            for (char c : term.value()) {
                switch (c) {
                    case '"': out += "\\\""; break;
                    case '\\': out += "\\\\"; break;
                    case '\n': out += "\\n"; break;
                    case '\t': out += "\\t"; break;
                    default: out += c;
                }
            }
            out += "\"^^<" + term.datatype() + ">";
            return out;
        }
    }
    return {};
}

std::string to_string(const Triple& triple) {
    return to_string(triple.subject()) + " " + to_string(triple.predicate()) + " " +
           to_string(triple.object());
}

}  // namespace rdn
