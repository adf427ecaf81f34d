#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rdn/term.hpp"

namespace rdn {

// Namespace of the pattern vocabulary when none is configured.
inline constexpr std::string_view kDefaultBase = "https://example.org/rdn#";

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";

const Term& rdf_type();
const Term& xsd_string();

// The three classes and five properties of the role-dependent-names
// vocabulary, bound to IRIs under a configurable namespace.
class Vocabulary {
public:
    explicit Vocabulary(std::string base = std::string(kDefaultBase));

    const std::string& base() const { return base_; }

    const Term& agent() const { return agent_; }
    const Term& agent_role() const { return agent_role_; }
    const Term& name() const { return name_; }

    const Term& has_name() const { return has_name_; }
    const Term& assumes_agent_role() const { return assumes_agent_role_; }
    const Term& provides_agent_role() const { return provides_agent_role_; }
    const Term& has_role_under_name() const { return has_role_under_name_; }

    // The one datatype property; its objects are xsd:string literals.
    const Term& has_name_as_string() const { return has_name_as_string_; }

    // All nine vocabulary IRIs (three classes, then the five properties).
    std::vector<Term> all() const;

    // Convenience for building IRIs of individuals under the same namespace.
    Term individual(std::string_view local) const;

private:
    std::string base_;
    Term agent_, agent_role_, name_;
    Term has_name_, assumes_agent_role_, provides_agent_role_, has_role_under_name_;
    Term has_name_as_string_;
};

enum class AxiomKind {
    ExistentialConstraint,
    StructuralTautology,
    ScopedDomainRule,
    InverseFunctionalConstraint,
    ScopedRangeRule,
    GlobalRangeRule,
    GlobalDomainRule,
    DisjointnessConstraint,
    PropertyChainRule,
};

std::string_view to_string(AxiomKind kind);

// cls must have at least one property-successor in filler.
struct MustHaveSuccessor {
    Term cls;
    Term property;
    Term filler;
};

// cls may (>= 0) have property-successors in filler. Documentation only:
// such axioms entail nothing and constrain nothing.
struct MayHaveSuccessor {
    Term cls;
    Term property;
    Term filler;
};

// Anything with a property-successor in scope belongs to domain.
struct ScopedDomain {
    Term property;
    Term scope;
    Term domain;
};

// Individuals of cls admit at most one property-predecessor (of subject_class).
struct AtMostOneSubject {
    Term cls;
    Term property;
    Term subject_class;
};

// property-successors of scope individuals belong to range.
struct ScopedRange {
    Term scope;
    Term property;
    Term range;
};

// Every property-successor belongs to range.
struct GlobalRange {
    Term property;
    Term range;
};

// Every property-subject belongs to domain.
struct GlobalDomain {
    Term property;
    Term domain;
};

// No individual belongs to both classes.
struct DisjointClasses {
    Term first;
    Term second;
};

// first composed with second (inverted when second_inverse) implies `implied`.
struct PropertyChain {
    Term first;
    Term second;
    bool second_inverse;
    Term implied;
};

using AxiomForm = std::variant<MustHaveSuccessor, MayHaveSuccessor, ScopedDomain,
                               AtMostOneSubject, ScopedRange, GlobalRange, GlobalDomain,
                               DisjointClasses, PropertyChain>;

// One of the sixteen statements of the pattern's terminology, tagged with its
// operational kind. Kinds by index: 1 existential, 2/6 tautology, 3 scoped
// domain, 4/9 inverse functional, 5 scoped range, 7/8/10 global range,
// 11 global domain, 12-14 disjointness, 15/16 property chain.
struct Axiom {
    int index;  // 1..16
    AxiomForm form;

    AxiomKind kind() const;

    // Every class/property mentioned by the axiom, in form order.
    std::vector<Term> participants() const;

    // True for the two structural tautologies: they generate neither an
    // inference rule nor a validation check.
    bool inert() const { return kind() == AxiomKind::StructuralTautology; }
};

// The full terminology, in index order. The default-vocabulary overload
// returns a shared constant.
std::vector<Axiom> tbox(const Vocabulary& vocab);
const std::vector<Axiom>& tbox();

// Turtle rendering in standard OWL vocabulary, for external reasoners.
// Restrictions use labelled blank nodes; the two property-chain axioms use
// collection syntax, which is outside this tool's own input subset.
std::string tbox_turtle(const Vocabulary& vocab = Vocabulary());

}  // namespace rdn
