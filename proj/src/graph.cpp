#include "rdn/graph.hpp"

namespace rdn {

void PrefixMap::bind(std::string prefix, std::string namespace_iri) {
    entries_[std::move(prefix)] = std::move(namespace_iri);
}

const std::string* PrefixMap::find(std::string_view prefix) const {
    auto it = entries_.find(std::string(prefix));
    return it == entries_.end() ? nullptr : &it->second;
}

std::string PrefixMap::expand(std::string_view prefixed) const {
    auto colon = prefixed.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("not a prefixed name (missing ':'): " + std::string(prefixed));
    }
    std::string prefix(prefixed.substr(0, colon));
    const std::string* ns = find(prefix);
    if (!ns) {
        throw UnknownPrefixError(prefix);
    }
    return *ns + std::string(prefixed.substr(colon + 1));
}

std::optional<std::pair<std::string, std::string>> PrefixMap::shrink(const std::string& iri) const {
    const std::pair<const std::string, std::string>* best = nullptr;
    for (const auto& entry : entries_) {
        const std::string& ns = entry.second;
        if (ns.empty() || iri.size() < ns.size()) continue;
        if (iri.compare(0, ns.size(), ns) != 0) continue;
        if (!best || ns.size() > best->second.size() ||
            (ns.size() == best->second.size() && entry.first < best->first)) {
            best = &entry;
        }
    }
    if (!best) return std::nullopt;
    return std::make_pair(best->first, iri.substr(best->second.size()));
}

void Graph::insert_all(const Graph& other) {
    triples_.insert(other.triples_.begin(), other.triples_.end());
}

std::vector<Triple> Graph::match(const TriplePattern& pattern) const {
    std::vector<Triple> out;
    if (pattern.subject && pattern.predicate && pattern.object) {
        // Positions that violate the triple rules can never match anything.
        if (pattern.subject->is_literal() || !pattern.predicate->is_iri()) return out;
        Triple t(*pattern.subject, *pattern.predicate, *pattern.object);
        if (contains(t)) out.push_back(std::move(t));
        return out;
    }
    for (const Triple& t : triples_) {
        if (pattern.matches(t)) out.push_back(t);
    }
    return out;
}

}  // namespace rdn
