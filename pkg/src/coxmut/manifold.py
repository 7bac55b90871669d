"""Manifold-level invariants: torsion certificates, Euler characteristics,
cusp censuses, exact volumes, wall tracking and companion bases.

The pipeline: classify the mutation class, walk the witness sequence back
from the Dynkin (or affine Dynkin) member to express the diagram's
generators inside the fixed Weyl group, and then compare parabolic subgroup
orders between the abstract classification and the concrete representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .affine import (
    AffineRep,
    ClosureCapExceeded,
    aff_evaluate_word,
    affine_rep,
    bounded_closure_order,
    is_translation,
    lattice_rank,
)
from .catalog import coxeter_isomorphism, finite_order
from .coset import todd_coxeter
from .exchange import Diagram, ExchangeMatrix, apply_sequence, diagram_view, mutate, realize_matrix
from .gram import (
    GeometricType,
    elliptic_subsets,
    finite_subgroup_order,
    geometric_type,
    ideal_vertex_subsets,
)
from .mutation_class import AffineType, FiniteType, classify_mutation_type
from .permgroup import evaluate_word, subgroup_order
from .presentation import (
    CoxeterMatrix,
    Presentation,
    Word,
    build_presentation,
    coxeter_data,
    evolve_generators,
    free_reduce,
)
from .rootsystem import (
    is_positive_root,
    reflection_permutation,
    standard_coxeter_exponents,
    weyl_permutation_rep,
)


def _as_matrix(g) -> ExchangeMatrix:
    return g if isinstance(g, ExchangeMatrix) else realize_matrix(g)


# ---------------------------------------------------------------------------
# representation contexts


@dataclass(frozen=True)
class FiniteContext:
    label: str
    witness: tuple[int, ...]
    order: int
    degree: int
    images: tuple[tuple[int, ...], ...]  # permutation per diagram generator
    words: tuple[Word, ...]  # same generators as words in the Weyl generators
    weyl_generators: tuple[tuple[int, ...], ...]


def finite_context(m: ExchangeMatrix) -> FiniteContext:
    """Express the diagram's generators inside W via the Dynkin witness."""
    t = classify_mutation_type(m)
    if not isinstance(t, FiniteType):
        raise ValueError(f"diagram is not of finite mutation type with a Dynkin member: {t}")
    member = apply_sequence(m, t.witness)
    words = evolve_generators(member, tuple(reversed(t.witness)))
    cm = coxeter_data(diagram_view(member))
    std = standard_coxeter_exponents(t.label)
    iso = coxeter_isomorphism(m.n, cm.entry, m.n, lambda i, j: std[i][j])
    if iso is None:
        raise ValueError(f"Dynkin member does not match the standard {t.label} system")
    rep = weyl_permutation_rep(t.label)
    gens = tuple(rep.generators[iso[i]] for i in range(m.n))
    images = tuple(evaluate_word(gens, w) for w in words)
    return FiniteContext(t.label, t.witness, finite_order(t.label), rep.degree, images, words, gens)


@dataclass(frozen=True)
class AffineContext:
    label: str
    witness: tuple[int, ...]
    rep: AffineRep
    images: tuple  # affine element per diagram generator
    words: tuple[Word, ...]


def affine_context(m: ExchangeMatrix) -> AffineContext:
    t = classify_mutation_type(m)
    if not isinstance(t, AffineType):
        raise ValueError(f"diagram is not of affine mutation type: {t}")
    member = apply_sequence(m, t.witness)
    words = evolve_generators(member, tuple(reversed(t.witness)))
    cm = coxeter_data(diagram_view(member))
    rep = affine_rep(t.label)
    iso = coxeter_isomorphism(m.n, cm.entry, m.n, lambda i, j: rep.coxeter[i][j])
    if iso is None:
        raise ValueError(f"affine member does not match the standard {t.label} system")
    gens = tuple(rep.generators[iso[i]] for i in range(m.n))
    images = tuple(aff_evaluate_word(gens, w) for w in words)
    return AffineContext(t.label, t.witness, rep, images, words)


# ---------------------------------------------------------------------------
# torsion certificates


@dataclass(frozen=True)
class TorsionEntry:
    subset: tuple[int, ...]
    classified_order: int
    image_order: int | None  # None when a cap was hit
    equal: bool


@dataclass(frozen=True)
class TorsionCertificate:
    entries: tuple[TorsionEntry, ...]
    torsion_free: bool | None  # None = inconclusive (cap exceeded)
    note: str = ""


def _certificate_from_orders(cm: CoxeterMatrix, image_order) -> TorsionCertificate:
    entries = []
    inconclusive = False
    for subset, expected in elliptic_subsets(cm):
        got = image_order(subset)
        if got is None:
            inconclusive = True
        entries.append(TorsionEntry(subset, expected, got, got == expected))
    if inconclusive:
        return TorsionCertificate(tuple(entries), None, "cap exceeded during a subgroup closure")
    verdict = all(e.equal for e in entries)
    return TorsionCertificate(tuple(entries), verdict)


def verify_torsion_free(g, images=None, degree=None) -> TorsionCertificate:
    """Compare |(W_0)_I| with the order of the evolved images for every
    elliptic subset I; all equal certifies torsion-freeness of the kernel.

    ``images``/``degree`` let callers supply a custom representation (the
    complete-graph example); otherwise the Dynkin witness provides one.
    """
    m = _as_matrix(g)
    cm = coxeter_data(diagram_view(m))
    if images is None:
        ctx = finite_context(m)
        images, degree = ctx.images, ctx.degree
    return _certificate_from_orders(
        cm, lambda subset: subgroup_order([images[i] for i in subset], degree)
    )


def verify_torsion_free_affine(g, cap: int = 100_000) -> TorsionCertificate:
    m = _as_matrix(g)
    cm = coxeter_data(diagram_view(m))
    ctx = affine_context(m)

    def image_order(subset):
        try:
            return bounded_closure_order([ctx.images[i] for i in subset], cap)
        except ClosureCapExceeded:
            return None

    return _certificate_from_orders(cm, image_order)


# ---------------------------------------------------------------------------
# Euler characteristic and cusps


def orbifold_euler(cm: CoxeterMatrix) -> Fraction:
    """chi_orb = sum over elliptic subsets T (including the empty set) of
    (-1)^|T| / |W_T|."""
    total = Fraction(0)
    for subset, order in elliptic_subsets(cm):
        total += Fraction((-1) ** len(subset), order)
    return total


@dataclass(frozen=True)
class CuspClass:
    subset: tuple[int, ...]
    stabilizer_order: int
    count: int


@dataclass(frozen=True)
class CuspCensus:
    classes: tuple[CuspClass, ...]

    @property
    def total(self) -> int:
        return sum(c.count for c in self.classes)


def count_cusps(g, context: FiniteContext | None = None, images=None, degree=None, order=None) -> CuspCensus:
    """One cusp class per ideal vertex subset; count = |W| / |image of the
    affine parabolic|.  (W_C is normal and ideal-point stabilizers in W_0 are
    the standard parabolics, so W_C-orbits on the W_0-orbit have that index.)
    """
    m = _as_matrix(g)
    cm = coxeter_data(diagram_view(m))
    gt = geometric_type(cm)
    if gt.kind != "hyperbolic":
        raise ValueError(f"cusp census requires hyperbolic type, got {gt.kind}")
    if images is None:
        context = context or finite_context(m)
        images, degree, order = context.images, context.degree, context.order
    classes = []
    for subset in ideal_vertex_subsets(cm, gt.dimension):
        stab = subgroup_order([images[i] for i in subset], degree)
        if order % stab:
            raise ArithmeticError(f"stabilizer order {stab} does not divide |W| = {order}")
        classes.append(CuspClass(subset, stab, order // stab))
    return CuspCensus(tuple(classes))


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ExactVolume:
    coeff_num: int
    coeff_den: int
    pi_power: int

    def value(self) -> float:
        from math import pi

        return self.coeff_num / self.coeff_den * pi**self.pi_power


def volume_from_euler(d: int, chi: int) -> ExactVolume | None:
    """Exact volume as a rational multiple of pi^k for d in {2, 4, 6}."""
    if d == 2:
        coeff = Fraction(-2 * chi)
        power = 1
    elif d == 4:
        coeff = Fraction(4 * chi, 3)
        power = 2
    elif d == 6:
        coeff = Fraction(-8 * chi, 15)
        power = 3
    else:
        return None
    return ExactVolume(coeff.numerator, coeff.denominator, power)


@dataclass(frozen=True)
class ManifoldReport:
    geometric: GeometricType
    weyl_label: str | None
    group_order: int | None
    chi_orb: Fraction
    chi: int | None  # |W| * chi_orb, reported when the certificate passes
    cusps: CuspCensus | None
    compact: bool | None
    volume: ExactVolume | None
    genus: int | None
    torsion: TorsionCertificate


def _assemble_report(cm, weyl_label, order, images, degree) -> ManifoldReport:
    gt = geometric_type(cm)
    chi_orb = orbifold_euler(cm)
    cert = _certificate_from_orders(
        cm, lambda subset: subgroup_order([images[i] for i in subset], degree)
    )
    chi = None
    if cert.torsion_free:
        value = order * chi_orb
        if value.denominator != 1:
            raise ArithmeticError(f"|W| * chi_orb = {value} is not an integer")
        chi = int(value)

    cusps = None
    compact = None
    volume = None
    genus = None
    if gt.kind == "hyperbolic":
        classes = []
        for subset in ideal_vertex_subsets(cm, gt.dimension):
            stab = subgroup_order([images[i] for i in subset], degree)
            if order % stab:
                raise ArithmeticError(f"stabilizer order {stab} does not divide |W| = {order}")
            classes.append(CuspClass(subset, stab, order // stab))
        cusps = CuspCensus(tuple(classes))
        compact = not cusps.classes
        if chi is not None and gt.dimension in (2, 4, 6):
            volume = volume_from_euler(gt.dimension, chi)
        if gt.dimension == 2 and chi is not None:
            genus = (2 - chi) // 2
    return ManifoldReport(gt, weyl_label, order, chi_orb, chi, cusps, compact, volume, genus, cert)


def manifold_invariants(g) -> ManifoldReport:
    """Full report for a finite-mutation-type diagram."""
    m = _as_matrix(g)
    cm = coxeter_data(diagram_view(m))
    ctx = finite_context(m)
    return _assemble_report(cm, ctx.label, ctx.order, ctx.images, ctx.degree)


def custom_manifold_invariants(cm: CoxeterMatrix, extra_relators, label: str, roots) -> ManifoldReport:
    """Report for a presentation given directly by a Coxeter matrix plus
    extra relators, with generators assigned to roots of W(label) (covers
    systems outside every mutation class, like the complete-graph example)."""
    rep = weyl_permutation_rep(label)
    images = tuple(reflection_permutation(label, tuple(r)) for r in roots)
    powers = tuple(
        (i, j, cm.m[i][j])
        for i in range(cm.n)
        for j in range(i + 1, cm.n)
        if cm.m[i][j] is not None
    )
    pres = Presentation(cm.n, powers, (), tuple((tuple(w), int(x)) for w, x in extra_relators))
    order = todd_coxeter(cm.n, pres.relator_words(include_squares=False))
    return _assemble_report(cm, label, order, images, rep.degree)


# ---------------------------------------------------------------------------
# wall tracking and companion bases


@dataclass(frozen=True)
class WallTracking:
    conjugators: tuple[Word, ...]  # wall of generator i = c_i-image of its mirror
    signs: tuple[int, ...]  # +1 / -1 halfspace marker


def track_walls(m: ExchangeMatrix, seq) -> WallTracking:
    """Compose the per-step wall rules along a mutation sequence: vertices
    with an arrow into the mutated vertex k get their conjugator prefixed by
    the current word of k; the sign flips exactly at k."""
    words: list[Word] = [(i,) for i in range(m.n)]
    cs: list[Word] = [() for _ in range(m.n)]
    signs = [1] * m.n
    cur = m
    for k in seq:
        wk = words[k]
        new_words = list(words)
        for i in range(m.n):
            if cur.b[i][k] > 0:
                new_words[i] = free_reduce(wk + words[i] + wk)
                cs[i] = free_reduce(wk + cs[i])
        signs[k] = -signs[k]
        words = new_words
        cur = mutate(cur, k)
    return WallTracking(tuple(cs), tuple(signs))


@dataclass(frozen=True)
class CompanionBasis:
    label: str
    roots: tuple[tuple[int, ...], ...]


def companion_basis(g) -> CompanionBasis:
    """The positive roots whose reflections realize the diagram's generators
    inside W."""
    m = _as_matrix(g)
    ctx = finite_context(m)
    rep = weyl_permutation_rep(ctx.label)
    out = []
    for perm in ctx.images:
        beta = None
        for p, root in enumerate(rep.roots):
            if rep.roots[perm[p]] == tuple(-x for x in root) and is_positive_root(root):
                beta = root
                break
        if beta is None:
            raise ValueError("generator image is not a reflection")
        out.append(beta)
    return CompanionBasis(ctx.label, tuple(out))


# ---------------------------------------------------------------------------
# euclidean quotients


@dataclass(frozen=True)
class EuclideanQuotientReport:
    affine_label: str
    translations: tuple  # affine elements of the squared cycle words
    all_translations: bool
    commuting: bool
    lattice_rank: int
    quotient_order: int


def euclidean_quotient_report(g, coset_cap: int = 1_000_000) -> EuclideanQuotientReport:
    """Certify the torus quotient for an oriented cycle (Coxeter data of
    affine type ~A_{n-1}): the squared cycle words are commuting translations
    spanning a rank n-1 lattice, and the presented quotient group is finite
    of the classified order."""
    m = _as_matrix(g)
    gd = diagram_view(m)
    cm = coxeter_data(gd)
    gt = geometric_type(cm)
    if gt.kind != "euclidean":
        raise ValueError(f"euclidean quotient requires euclidean type, got {gt.kind}")
    pres = build_presentation(gd)
    if len(pres.cycle_relators) != 1:
        raise ValueError("expected a single oriented cycle")
    n = m.n
    label = f"~A{n - 1}"
    rep = affine_rep(label)
    iso = coxeter_isomorphism(n, cm.entry, n, lambda i, j: rep.coxeter[i][j])
    if iso is None:
        raise ValueError(f"Coxeter data does not match {label}")
    gens = tuple(rep.generators[iso[i]] for i in range(n))

    cyc = pres.cycle_relators[0]
    d = len(cyc.cycle)
    elements = []
    for rot in range(d):
        rotated = tuple(cyc.cycle[(rot + j) % d] for j in range(d))
        word = rotated[:-1] + (rotated[-1],) + rotated[-2:0:-1]
        elements.append(aff_evaluate_word(gens, word * 2))
    all_translations = all(is_translation(e) for e in elements)
    vectors = [e[1] for e in elements]
    rank = lattice_rank(vectors)
    commuting = all_translations  # translations always commute
    order = todd_coxeter(n, pres.relator_words(include_squares=False), max_cosets=coset_cap)
    return EuclideanQuotientReport(label, tuple(elements), all_translations, commuting, rank, order)


# ---------------------------------------------------------------------------
# JSON serialization


def _rational(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def certificate_to_dict(cert: TorsionCertificate) -> dict:
    return {
        "entries": [
            {
                "subset": list(e.subset),
                "classified_order": e.classified_order,
                "image_order": e.image_order,
                "equal": e.equal,
            }
            for e in cert.entries
        ],
        "torsion_free": cert.torsion_free,
        "note": cert.note,
    }


def report_to_dict(r: ManifoldReport) -> dict:
    out = {
        "geometric_type": r.geometric.kind,
        "dimension": r.geometric.dimension,
        "signature": [r.geometric.signature.positive, r.geometric.signature.negative, r.geometric.signature.zero],
        "weyl_label": r.weyl_label,
        "group_order": r.group_order,
        "chi_orb": _rational(r.chi_orb),
        "chi": r.chi,
        "compact": r.compact,
        "genus": r.genus,
        "torsion": certificate_to_dict(r.torsion),
    }
    if r.cusps is not None:
        out["cusps"] = {
            "classes": [
                {"subset": list(c.subset), "stabilizer_order": c.stabilizer_order, "count": c.count}
                for c in r.cusps.classes
            ],
            "total": r.cusps.total,
        }
    else:
        out["cusps"] = None
    out["volume"] = (
        {"coeff_num": r.volume.coeff_num, "coeff_den": r.volume.coeff_den, "pi_power": r.volume.pi_power}
        if r.volume is not None
        else None
    )
    return out
