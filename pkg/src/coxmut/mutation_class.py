"""Mutation-class enumeration and mutation-type classification."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .canonical import canonical_form
from .catalog import ComponentInfo, identify_component
from .exchange import Diagram, ExchangeMatrix, diagram_view, mutate
from .presentation import LabelError, coxeter_data

DEFAULT_MAX_SIZE = 100_000
DEFAULT_MAX_WEIGHT = 4


@dataclass(frozen=True)
class ClassMember:
    matrix: ExchangeMatrix
    diagram: Diagram
    key: bytes
    witness: tuple[int, ...]  # mutation sequence from the seed to this member


@dataclass(frozen=True)
class ExceededReport:
    cap: str  # "max_size" | "max_weight"
    witness: tuple[int, ...]
    matrix: ExchangeMatrix


@dataclass
class ClassEnumeration:
    members: list[ClassMember] = field(default_factory=list)
    exceeded: ExceededReport | None = None


def iter_mutation_class(m: ExchangeMatrix, max_size: int = DEFAULT_MAX_SIZE, max_weight: int | None = DEFAULT_MAX_WEIGHT):
    """Lazy breadth-first closure of ``m`` under all mutations, deduplicated
    by the canonical key of the diagram.  Yields ClassMember items; a cap hit
    yields a final ExceededReport instead of raising."""
    m.validate()
    seed = ClassMember(m, diagram_view(m), canonical_form(diagram_view(m)), ())
    seen = {seed.key}
    queue = deque([seed])
    while queue:
        member = queue.popleft()
        yield member
        if max_weight is not None and member.diagram.max_weight() > max_weight:
            yield ExceededReport("max_weight", member.witness, member.matrix)
            return
        for k in range(m.n):
            nxt = mutate(member.matrix, k)
            g = diagram_view(nxt)
            key = canonical_form(g)
            if key in seen:
                continue
            if len(seen) >= max_size:
                yield ExceededReport("max_size", member.witness + (k,), nxt)
                return
            seen.add(key)
            queue.append(ClassMember(nxt, g, key, member.witness + (k,)))


def mutation_class(
    m: ExchangeMatrix,
    max_size: int = DEFAULT_MAX_SIZE,
    max_weight: int | None = DEFAULT_MAX_WEIGHT,
    stop=None,
) -> ClassEnumeration:
    """Eager wrapper around iter_mutation_class.

    ``stop``: optional predicate on ClassMember; enumeration halts early when
    it returns true (used by the classifier).  Cap hits are reported, not
    raised.
    """
    result = ClassEnumeration()
    for item in iter_mutation_class(m, max_size=max_size, max_weight=max_weight):
        if isinstance(item, ExceededReport):
            result.exceeded = item
            return result
        result.members.append(item)
        if stop is not None and stop(item):
            return result
    return result


@dataclass(frozen=True)
class FiniteType:
    label: str
    witness: tuple[int, ...]  # mutation sequence from the input to a Dynkin orientation


@dataclass(frozen=True)
class AffineType:
    label: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class OtherMutationFinite:
    class_size: int


@dataclass(frozen=True)
class MutationInfinite:
    certificate: ExceededReport


MutationType = FiniteType | AffineType | OtherMutationFinite | MutationInfinite


def _component_of(g: Diagram) -> ComponentInfo | None:
    """Catalogue entry of the whole diagram, when its Coxeter diagram is
    connected and all labels are in range."""
    try:
        cm = coxeter_data(g)
    except LabelError:
        return None
    return identify_component(range(g.n), cm.entry)


def _is_oriented_cycle(g: Diagram) -> bool:
    return all(len(g.out_edges(i)) == 1 and len(g.in_edges(i)) == 1 for i in range(g.n))


def member_type(member: ClassMember) -> FiniteType | AffineType | None:
    """Dynkin / affine-Dynkin orientation test for one class member."""
    info = _component_of(member.diagram)
    if info is None or len(info.vertices) != member.diagram.n:
        return None
    if info.kind == "finite":
        return FiniteType(info.label, member.witness)
    if info.kind == "affine":
        # the oriented cycle is of finite type D_n, not affine type
        if info.label.startswith("~A") and member.diagram.n >= 3 and _is_oriented_cycle(member.diagram):
            return None
        return AffineType(info.label, member.witness)
    return None


def classify_mutation_type(
    m: ExchangeMatrix,
    max_size: int = DEFAULT_MAX_SIZE,
) -> MutationType:
    """Locate a Dynkin or affine-Dynkin orientation in the mutation class.

    Mutation-infiniteness is certified by an edge weight > 4 in the class
    (connected, rank >= 3); rank <= 2 is always mutation-finite.
    """
    g = diagram_view(m)
    if not g.is_connected():
        raise ValueError("classification requires a connected diagram")
    if m.n == 1:
        return FiniteType("A1", ())
    if m.n == 2:
        w = g.max_weight()
        if w in (1, 2, 3):
            return FiniteType({1: "A2", 2: "B2", 3: "G2"}[w], ())
        if w == 4:
            return AffineType("~A1", ())
        return OtherMutationFinite(1)

    hit: list = [None]

    def stop(member: ClassMember) -> bool:
        t = member_type(member)
        if t is not None:
            hit[0] = t
            return True
        return False

    enum = mutation_class(m, max_size=max_size, max_weight=4, stop=stop)
    if hit[0] is not None:
        return hit[0]
    if enum.exceeded is not None:
        return MutationInfinite(enum.exceeded)
    return OtherMutationFinite(len(enum.members))
