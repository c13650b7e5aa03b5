"""Split preorders, split equivalences and binary relations.

Typed diagram term languages over three generator signatures, evaluation
into concrete relational models, a complete equality decision procedure,
canonical normal forms, and separation witnesses for non-derivable
equations.
"""
from splitrel.catalog import (
    Axiom,
    apply_axiom,
    axiom_catalog,
    axiom_named,
    catalog_json,
    check_axiom,
    instances,
    instantiate,
)
from splitrel.dsl import ParseError, parse, print_term
from splitrel.fuzz import fuzz_report, random_term, random_term_pair
from splitrel.maximality import (
    SeparationWitness,
    separate,
    separate_ef,
    separate_pf,
    separate_rb,
)
from splitrel.normalform import (
    EtaBarNF,
    EtaNF,
    IotaNF,
    eta_nf,
    eta_nf_term,
    etabar_nf,
    etabar_nf_term,
    iota_nf,
    iota_nf_term,
)
from splitrel.relations import (
    SRC,
    TGT,
    BinRel,
    Node,
    SplitEquivalence,
    SplitPreorder,
    SplitRelation,
    bar_union,
    compose_rel,
    compose_split,
    domain_of,
    embed_function,
    embed_relation,
    identity_split,
    restrict_away,
    semi_embed_M,
    src,
    strict_part,
    tgt,
    transitive_closure,
)
from splitrel.render import ascii_picture, dot_graph, text_listing
from splitrel.semantics import SemValue, equal, eval_term, resolve_category
from splitrel.terms import (
    ArrowTerm,
    Category,
    Comp,
    Counit,
    CounitK,
    DeltaK,
    H,
    HBar,
    Id,
    NablaK,
    Pad,
    Swap,
    TermType,
    TermTypeError,
    Unit,
    UnitK,
    category_of,
    compose_chain,
    pad,
    plus,
    type_of,
)

__all__ = [
    "ArrowTerm",
    "Axiom",
    "BinRel",
    "Category",
    "Comp",
    "Counit",
    "CounitK",
    "DeltaK",
    "EtaBarNF",
    "EtaNF",
    "H",
    "HBar",
    "Id",
    "IotaNF",
    "NablaK",
    "Node",
    "Pad",
    "ParseError",
    "SRC",
    "SemValue",
    "SeparationWitness",
    "SplitEquivalence",
    "SplitPreorder",
    "SplitRelation",
    "Swap",
    "TGT",
    "TermType",
    "TermTypeError",
    "Unit",
    "UnitK",
    "apply_axiom",
    "ascii_picture",
    "axiom_catalog",
    "axiom_named",
    "bar_union",
    "catalog_json",
    "category_of",
    "check_axiom",
    "compose_chain",
    "compose_rel",
    "compose_split",
    "domain_of",
    "dot_graph",
    "embed_function",
    "embed_relation",
    "equal",
    "eta_nf",
    "eta_nf_term",
    "etabar_nf",
    "etabar_nf_term",
    "eval_term",
    "fuzz_report",
    "identity_split",
    "instances",
    "instantiate",
    "iota_nf",
    "iota_nf_term",
    "pad",
    "parse",
    "plus",
    "print_term",
    "random_term",
    "random_term_pair",
    "resolve_category",
    "restrict_away",
    "semi_embed_M",
    "separate",
    "separate_ef",
    "separate_pf",
    "separate_rb",
    "src",
    "strict_part",
    "text_listing",
    "tgt",
    "transitive_closure",
    "type_of",
]
