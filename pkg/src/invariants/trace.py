"""
Derivation traces
Every determined invariant value is a Fact whose trace lists the rule
applications that produced it, premises first.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Tuple, Union

# Rule id -> citation. Citations name the result that licenses the rule.
RULES: Dict[str, str] = {
    # ends
    "R-FIN": "finite groups have 0 ends",
    "R-ENDS-Z": "the integers are 2-ended",
    "R-ENDS-FREE": "free groups of rank at least 2 have infinitely many ends",
    "R-ENDS-SURF": "closed aspherical surface groups are 1-ended (universal cover is the plane)",
    "R-ENDS-PROD": "products and extensions of infinite finitely presented groups are 1-ended and semistable",
    "R-ENDS-FINITE-PART": "a finite factor, kernel or quotient does not change the quasi-isometry type",
    "R-ENDS-FREEPROD": "free products of two nontrivial groups are infinite-ended except Z2*Z2",
    "R-ENDS-AMAL": "amalgams over finite groups: 2-ended iff both sides have index 2",
    "R-ENDS-HNN": "HNN extensions over finite groups are infinite-ended unless the base equals the edge group",
    "R-ENDS-GRAPH": "Stallings structure theorem for graphs of groups with finite edge groups",
    "R-ENDS-EULER": "graphs of finite groups are virtually free; the rational Euler characteristic decides the ends",
    "R-QI-INHERIT": "finite index subgroups and quotients by finite normal subgroups are quasi-isometric",
    "R-ANNOT": "user annotation from the named-group registry",
    # semistability
    "R-SS-BASE": "finite and 2-ended groups are semistable at infinity",
    "R-SS-SURF": "surface groups are semistable at infinity",
    "R-SS-FREE": "free groups act on trees; every end is semistable",
    "R-SS-PROD": "products and extensions of infinite finitely presented groups are 1-ended and semistable",
    "R-SS-VIRTUAL": "semistability is a virtual property",
    "AXIOM-SS-GRAPH": "finite-edge graphs of semistable vertex groups are semistable (quarantined)",
    # pro-type
    "R-PRO-SURF": "virtually surface groups have the constant Z tower as fundamental pro-group",
    "R-PRO-REP": "representatives of the trichotomy: ZxZxZ simply connected at infinity, ZxZ pro-Z, F2xZ telescopic",
    "R-PRO-TEL": "F2xZ type: an infinite-ended group times a 2-ended group has strictly telescopic pro-group",
    "R-SCI-STACK": "a simply connected or pro-Z 1-ended group times Z is simply connected at infinity (quarantined)",
    "R-PRO-CONSTRAINED": "short exact sequences of infinite groups realize one of the three telescopic types",
    "R-PRO-VIRTUAL": "the fundamental pro-group is a proper 2-equivalence invariant",
    "R-EXT": "an extension of infinite groups is proper 2-equivalent to the product of kernel and quotient",
    # P3R, boundary number and H2
    "R-P3R-BASE": "finite and 2-ended groups are properly 3-realizable",
    "R-P3R-TEL": "groups of telescopic type are properly 3-realizable",
    "R-P3R-VIRTUAL": "proper 3-realizability is a proper 2-equivalence invariant",
    "R-PNUM": "telescopic type with k generators per stage has boundary number k + 1",
    "R-PNUM-VIRTUAL": "the boundary number is invariant under finite index",
    "R-H2": "rank H2(G; ZG) = boundary number - 1 when the boundary number is nonzero",
    "R-PROSTABLE": "boundary number 0 or 2 means pro-stable; infinite means pro-epimorphic but not pro-stable",
    # classifier
    "R-QI1": "finite index: commensurable groups are proper 2-equivalent",
    "R-QI2": "quotients by finite normal subgroups are proper 2-equivalent to the group",
    "R-0E": "any two finite groups are proper 2-equivalent",
    "R-2E": "all 2-ended groups are proper 2-equivalent to the integers",
    "R-PRO": "1-ended semistable groups are equivalent iff their fundamental pro-groups are pro-isomorphic",
    "R-PROD": "the class of a direct product depends only on the classes of its factors",
    "R-POW": "G*G*...*G is proper 2-equivalent to G*G",
    "R-FREE": "free-factor substitution within a class preserves the class of a free product",
    "R-AMAL": "an infinite-ended amalgam over a finite group is equivalent to the free product of its sides",
    "R-HNN": "an infinite-ended HNN extension over a finite group is equivalent to G*Z",
    "R-GRAPH": "infinite-ended groups with the same set of vertex classes (without multiplicity) are equivalent",
    "R-MERGE": "simply connected at infinity vertex classes merge with finite vertices (Z2*Z2*Z2 ~ Z3*Z3 counterexample)",
    "R-TEL-VERTEX": "every semistable P3R vertex group is of one of the three telescopic types",
}

QUARANTINED = frozenset({"AXIOM-SS-GRAPH", "R-SCI-STACK"})


@dataclass(frozen=True)
class TraceEntry:
    """One rule application"""
    rule: str
    cite: str
    premises: Tuple[str, ...]
    conclusion: str

    def to_dict(self) -> Dict[str, Any]:
        return {"rule": self.rule, "cite": self.cite, "premises": list(self.premises),
                "conclusion": self.conclusion}


@dataclass(frozen=True)
class Fact:
    value: Any
    conclusion: str
    trace: Tuple[TraceEntry, ...] = field(default=(), repr=False)

    @property
    def grounded(self) -> bool:
        return bool(self.trace)


Premise = Union[Fact, str]


def constructor(text: str) -> str:
    return f"constructor {text}"


def annotation(name: str, key: str, value: Any) -> str:
    return f"annotation {name}.{key}={value}"


def merge(*traces: Iterable[TraceEntry]) -> Tuple[TraceEntry, ...]:
    """Concatenate traces keeping the first occurrence of each entry"""
    seen: Dict[TraceEntry, None] = {}
    for trace in traces:
        for entry in trace:
            seen.setdefault(entry, None)
    return tuple(seen)


def derive(rule: str, value: Any, conclusion: str, premises: Iterable[Premise] = ()) -> Fact:
    """Build a fact concluded by `rule` from fact or ground-string premises"""
    premises = list(premises)
    entry = TraceEntry(
        rule=rule,
        cite=RULES[rule],
        premises=tuple(p.conclusion if isinstance(p, Fact) else p for p in premises),
        conclusion=conclusion,
    )
    inherited = [p.trace for p in premises if isinstance(p, Fact)]
    return Fact(value, conclusion, merge(*inherited, [entry]))


def audit(trace: Iterable[TraceEntry]) -> Tuple[str, ...]:
    """Premises that are neither ground facts nor concluded earlier in the trace"""
    concluded = set()
    dangling = []
    for entry in trace:
        for premise in entry.premises:
            ground = premise.startswith("constructor ") or premise.startswith("annotation ")
            if not ground and premise not in concluded:
                dangling.append(premise)
        concluded.add(entry.conclusion)
    return tuple(dangling)
