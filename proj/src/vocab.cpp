#include "rdn/vocab.hpp"

#include <sstream>
#include <stdexcept>

namespace rdn {

const Term& rdf_type() {
    static const Term t = Term::iri(std::string(kRdfNs) + "type");
    return t;
}

const Term& xsd_string() {
    static const Term t = Term::iri(std::string(kXsdNs) + "string");
    return t;
}

Vocabulary::Vocabulary(std::string base)
    : base_(std::move(base)),
      agent_(Term::iri(base_ + "Agent")),
      agent_role_(Term::iri(base_ + "AgentRole")),
      name_(Term::iri(base_ + "Name")),
      has_name_(Term::iri(base_ + "hasName")),
      assumes_agent_role_(Term::iri(base_ + "assumesAgentRole")),
      provides_agent_role_(Term::iri(base_ + "providesAgentRole")),
      has_role_under_name_(Term::iri(base_ + "hasRoleUnderName")),
      has_name_as_string_(Term::iri(base_ + "hasNameAsString")) {}

std::vector<Term> Vocabulary::all() const {
    return {agent_,      agent_role_,          name_,
            has_name_,   assumes_agent_role_,  provides_agent_role_,
            has_role_under_name_, has_name_as_string_};
}

Term Vocabulary::individual(std::string_view local) const {
    return Term::iri(base_ + std::string(local));
}

std::string_view to_string(AxiomKind kind) {
    switch (kind) {
        case AxiomKind::ExistentialConstraint: return "ExistentialConstraint";
        case AxiomKind::StructuralTautology: return "StructuralTautology";
        case AxiomKind::ScopedDomainRule: return "ScopedDomainRule";
        case AxiomKind::InverseFunctionalConstraint: return "InverseFunctionalConstraint";
        case AxiomKind::ScopedRangeRule: return "ScopedRangeRule";
        case AxiomKind::GlobalRangeRule: return "GlobalRangeRule";
        case AxiomKind::GlobalDomainRule: return "GlobalDomainRule";
        case AxiomKind::DisjointnessConstraint: return "DisjointnessConstraint";
        case AxiomKind::PropertyChainRule: return "PropertyChainRule";
    }
    return "?";
}

AxiomKind Axiom::kind() const {
    struct Visitor {
        AxiomKind operator()(const MustHaveSuccessor&) const { return AxiomKind::ExistentialConstraint; }
        AxiomKind operator()(const MayHaveSuccessor&) const { return AxiomKind::StructuralTautology; }
        AxiomKind operator()(const ScopedDomain&) const { return AxiomKind::ScopedDomainRule; }
        AxiomKind operator()(const AtMostOneSubject&) const { return AxiomKind::InverseFunctionalConstraint; }
        AxiomKind operator()(const ScopedRange&) const { return AxiomKind::ScopedRangeRule; }
        AxiomKind operator()(const GlobalRange&) const { return AxiomKind::GlobalRangeRule; }
        AxiomKind operator()(const GlobalDomain&) const { return AxiomKind::GlobalDomainRule; }
        AxiomKind operator()(const DisjointClasses&) const { return AxiomKind::DisjointnessConstraint; }
        AxiomKind operator()(const PropertyChain&) const { return AxiomKind::PropertyChainRule; }
    };
    return std::visit(Visitor{}, form);
}

std::vector<Term> Axiom::participants() const {
    struct Visitor {
        std::vector<Term> operator()(const MustHaveSuccessor& a) const { return {a.cls, a.property, a.filler}; }
        std::vector<Term> operator()(const MayHaveSuccessor& a) const { return {a.cls, a.property, a.filler}; }
        std::vector<Term> operator()(const ScopedDomain& a) const { return {a.property, a.scope, a.domain}; }
        std::vector<Term> operator()(const AtMostOneSubject& a) const { return {a.cls, a.property, a.subject_class}; }
        std::vector<Term> operator()(const ScopedRange& a) const { return {a.scope, a.property, a.range}; }
        std::vector<Term> operator()(const GlobalRange& a) const { return {a.property, a.range}; }
        std::vector<Term> operator()(const GlobalDomain& a) const { return {a.property, a.domain}; }
        std::vector<Term> operator()(const DisjointClasses& a) const { return {a.first, a.second}; }
        std::vector<Term> operator()(const PropertyChain& a) const { return {a.first, a.second, a.implied}; }
    };
    return std::visit(Visitor{}, form);
}

std::vector<Axiom> tbox(const Vocabulary& v) {
    const Term& agent = v.agent();
    const Term& role = v.agent_role();
    const Term& name = v.name();
    const Term& hasName = v.has_name();
    const Term& assumes = v.assumes_agent_role();
    const Term& provides = v.provides_agent_role();
    const Term& underName = v.has_role_under_name();
    const Term& asString = v.has_name_as_string();

    return {
        {1, MustHaveSuccessor{agent, hasName, name}},
        {2, MayHaveSuccessor{agent, assumes, role}},
        {3, ScopedDomain{assumes, role, agent}},
        {4, AtMostOneSubject{role, assumes, agent}},
        {5, ScopedRange{agent, assumes, role}},
        {6, MayHaveSuccessor{role, underName, name}},
        {7, GlobalRange{underName, name}},
        {8, GlobalRange{provides, role}},
        {9, AtMostOneSubject{name, hasName, agent}},
        {10, GlobalRange{hasName, name}},
        {11, GlobalDomain{asString, name}},
        {12, DisjointClasses{role, agent}},
        {13, DisjointClasses{agent, name}},
        {14, DisjointClasses{name, role}},
        {15, PropertyChain{assumes, underName, false, hasName}},
        {16, PropertyChain{hasName, underName, true, assumes}},
    };
}

const std::vector<Axiom>& tbox() {
    static const std::vector<Axiom> axioms = tbox(Vocabulary{});
    return axioms;
}

namespace {

// Prefixed-name rendering against the fixed namespaces of the TBox document.
std::string pname(const Term& iri, const std::string& base) {
    const std::string& s = iri.value();
    auto shorten = [&s](std::string_view ns, std::string_view prefix) -> std::string {
        if (s.size() > ns.size() && s.compare(0, ns.size(), ns) == 0) {
            return std::string(prefix) + ":" + s.substr(ns.size());
        }
        return {};
    };
    if (auto p = shorten(base, ""); !p.empty()) return p;
    if (auto p = shorten(kOwlNs, "owl"); !p.empty()) return p;
    if (auto p = shorten(kRdfsNs, "rdfs"); !p.empty()) return p;
    if (auto p = shorten(kRdfNs, "rdf"); !p.empty()) return p;
    if (auto p = shorten(kXsdNs, "xsd"); !p.empty()) return p;
    return "<" + s + ">";
}

}  // namespace

std::string tbox_turtle(const Vocabulary& v) {
    std::ostringstream out;
    const std::string& base = v.base();
    auto p = [&](const Term& t) { return pname(t, base); };

    out << "@prefix : <" << base << "> .\n"
        << "@prefix owl: <" << kOwlNs << "> .\n"
        << "@prefix rdf: <" << kRdfNs << "> .\n"
        << "@prefix rdfs: <" << kRdfsNs << "> .\n"
        << "@prefix xsd: <" << kXsdNs << "> .\n\n";

    out << p(v.agent()) << " a owl:Class .\n"
        << p(v.agent_role()) << " a owl:Class .\n"
        << p(v.name()) << " a owl:Class .\n"
        << p(v.assumes_agent_role()) << " a owl:ObjectProperty .\n"
        << p(v.has_name()) << " a owl:ObjectProperty .\n"
        << p(v.has_role_under_name()) << " a owl:ObjectProperty .\n"
        << p(v.provides_agent_role()) << " a owl:ObjectProperty .\n"
        << p(v.has_name_as_string()) << " a owl:DatatypeProperty .\n";

    for (const Axiom& axiom : tbox(v)) {
        out << "\n# axiom (" << axiom.index << ")\n";
        const std::string node = "_:ax" + std::to_string(axiom.index);

        if (const auto* a = std::get_if<MustHaveSuccessor>(&axiom.form)) {
            out << p(a->cls) << " rdfs:subClassOf " << node << " .\n"
                << node << " a owl:Restriction ;\n"
                << "    owl:onProperty " << p(a->property) << " ;\n"
                << "    owl:someValuesFrom " << p(a->filler) << " .\n";
        } else if (const auto* a = std::get_if<MayHaveSuccessor>(&axiom.form)) {
            out << p(a->cls) << " rdfs:subClassOf " << node << " .\n"
                << node << " a owl:Restriction ;\n"
                << "    owl:onProperty " << p(a->property) << " ;\n"
                << "    owl:minQualifiedCardinality \"0\"^^xsd:nonNegativeInteger ;\n"
                << "    owl:onClass " << p(a->filler) << " .\n";
        } else if (const auto* a = std::get_if<ScopedDomain>(&axiom.form)) {
            out << node << " rdfs:subClassOf " << p(a->domain) << " .\n"
                << node << " a owl:Restriction ;\n"
                << "    owl:onProperty " << p(a->property) << " ;\n"
                << "    owl:someValuesFrom " << p(a->scope) << " .\n";
        } else if (const auto* a = std::get_if<AtMostOneSubject>(&axiom.form)) {
            const std::string inv = node + "inv";
            out << p(a->cls) << " rdfs:subClassOf " << node << " .\n"
                << node << " a owl:Restriction ;\n"
                << "    owl:onProperty " << inv << " ;\n"
                << "    owl:maxQualifiedCardinality \"1\"^^xsd:nonNegativeInteger ;\n"
                << "    owl:onClass " << p(a->subject_class) << " .\n"
                << inv << " owl:inverseOf " << p(a->property) << " .\n";
        } else if (const auto* a = std::get_if<ScopedRange>(&axiom.form)) {
            out << p(a->scope) << " rdfs:subClassOf " << node << " .\n"
                << node << " a owl:Restriction ;\n"
                << "    owl:onProperty " << p(a->property) << " ;\n"
                << "    owl:allValuesFrom " << p(a->range) << " .\n";
        } else if (const auto* a = std::get_if<GlobalRange>(&axiom.form)) {
            out << p(a->property) << " rdfs:range " << p(a->range) << " .\n";
        } else if (const auto* a = std::get_if<GlobalDomain>(&axiom.form)) {
            out << p(a->property) << " rdfs:domain " << p(a->domain) << " .\n";
        } else if (const auto* a = std::get_if<DisjointClasses>(&axiom.form)) {
            out << p(a->first) << " owl:disjointWith " << p(a->second) << " .\n";
        } else if (const auto* a = std::get_if<PropertyChain>(&axiom.form)) {
            if (a->second_inverse) {
                const std::string inv = node + "inv";
                out << p(a->implied) << " owl:propertyChainAxiom ( " << p(a->first) << " " << inv
                    << " ) .\n"
                    << inv << " owl:inverseOf " << p(a->second) << " .\n";
            } else {
                out << p(a->implied) << " owl:propertyChainAxiom ( " << p(a->first) << " "
                    << p(a->second) << " ) .\n";
            }
        } else {
            throw std::logic_error("unhandled axiom form");
        }
    }
    return out.str();
}

}  // namespace rdn
