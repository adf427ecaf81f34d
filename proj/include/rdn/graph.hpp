#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rdn/term.hpp"

namespace rdn {

class UnknownPrefixError : public std::runtime_error {
public:
    explicit UnknownPrefixError(std::string prefix)
        : std::runtime_error("unknown prefix: '" + prefix + "'"), prefix_(std::move(prefix)) {}

    const std::string& prefix() const { return prefix_; }

private:
    std::string prefix_;
};

// Prefix-to-namespace bindings, as declared by @prefix directives.
class PrefixMap {
public:
    // Rebinding an existing prefix replaces it (last wins).
    void bind(std::string prefix, std::string namespace_iri);

    const std::string* find(std::string_view prefix) const;

    // "prefix:local" -> namespace + local. Throws UnknownPrefixError when the
    // prefix is unbound, std::invalid_argument when there is no colon at all.
    std::string expand(std::string_view prefixed) const;

    // Longest-namespace match; (prefix, local) on success.
    std::optional<std::pair<std::string, std::string>> shrink(const std::string& iri) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

// An in-memory RDF graph: a finite set of triples plus the prefix bindings of
// the document it was read from. Graphs are ordinary values; copy freely.
// Equality compares triple sets only -- prefix bindings are presentation
// metadata, and blank node labels are compared literally (no isomorphism).
class Graph {
public:
    using const_iterator = std::set<Triple>::const_iterator;

    Graph() = default;

    // Returns true if the triple was new; re-inserting is a no-op.
    bool insert(Triple t) { return triples_.insert(std::move(t)).second; }

    bool erase(const Triple& t) { return triples_.erase(t) > 0; }

    // Copies triples (not prefixes) from another graph.
    void insert_all(const Graph& other);

    bool contains(const Triple& t) const { return triples_.count(t) > 0; }

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    // Exactly the triples the pattern unifies with, in sorted order.
    std::vector<Triple> match(const TriplePattern& pattern) const;

    const_iterator begin() const { return triples_.begin(); }
    const_iterator end() const { return triples_.end(); }

    PrefixMap& prefixes() { return prefixes_; }
    const PrefixMap& prefixes() const { return prefixes_; }

    bool operator==(const Graph& other) const { return triples_ == other.triples_; }

private:
    std::set<Triple> triples_;
    PrefixMap prefixes_;
};

}  // namespace rdn
