"""Row-twisted products and the structure decision procedure.

A groupoid ``G`` arises from a base groupoid ``star`` and a self-inverse
automorphism ``f`` of ``star`` when ``G[x][y] == star[f(x)][y]`` — the table
of ``G`` is the table of ``star`` with its rows permuted by ``f``.  This
module tests membership in the twelve derived classes obtained by letting
``star`` range over the classic semigroup classes, and decides — via three
independently evaluated, provably equivalent criteria — whether a groupoid
arises this way from a semilattice of groups with an idempotent-fixed map.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    NotInverse,
    NotInvolution,
    PreconditionViolated,
    TheoremViolation,
)
from .groupoid import (
    VARIETIES,
    Groupoid,
    in_semigroup_class,
    satisfies_variety,
    square_subgroupoid,
)
from .inverses import (
    canonical_twist,
    idempotents_form_semilattice,
    inverse_antihomomorphism_law,
    inverse_table,
    is_completely_inverse,
    is_right_bol,
    strongly_regular_witness,
)
from .mappings import (
    Mapping,
    absorption_law,
    e_fixed_involutive_automorphisms,
    identity_mapping,
    involutions,
    involutive_automorphisms,
    is_homomorphism,
    is_involution,
    shifted_associativity,
)

#: Names of the three decision criteria, in evaluation order.
CRITERIA = (
    "completely_inverse_automorphism",
    "strong_regularity",
    "right_bol_canonical",
)


def _row_permuted(g: Groupoid, f: Mapping) -> Groupoid:
    if len(f) != g.order or not is_involution(f):
        raise NotInvolution(f"{f!r} is not an involution on 0..{g.order - 1}")
    return Groupoid(tuple(g.rows[f[x]] for x in range(g.order)))


def twist(star: Groupoid, f: Mapping) -> Groupoid:
    """The derived product ``x·y = f(x) * y`` as a full table.

    ``f`` must be an involution on the carrier; raises
    :class:`NotInvolution` otherwise.
    """
    return _row_permuted(star, f)


def untwist(g: Groupoid, f: Mapping) -> Groupoid:
    """Invert :func:`twist`: the base product ``x*y = g(f(x), y)``.

    Because ``f`` is self-inverse this is the same row permutation, so
    ``untwist(twist(s, f), f) == s`` and ``twist(untwist(g, f), f) == g``.
    """
    return _row_permuted(g, f)


def is_semilattice_of_groups(g: Groupoid) -> bool:
    """True when ``g`` is associative, every element ``a`` lies in both
    ``S·a²`` and ``a²·S``, and the idempotents commute.

    These conditions make an associative table a union of groups whose
    idempotents commute, i.e. a semilattice of groups.
    """
    if not g.is_associative():
        return False
    rows = g.rows
    n = g.order
    for a in range(n):
        sq = rows[a][a]
        if all(rows[x][sq] != a for x in range(n)):
            return False
        if all(rows[sq][x] != a for x in range(n)):
            return False
    return idempotents_form_semilattice(g)


def ad_membership_direct(g: Groupoid, variety: str) -> Mapping | None:
    """Definition-level membership test for the derived class of ``variety``.

    Searches every involution ``f`` on the carrier in lexicographic order
    and accepts the first one for which the untwisted table is a semigroup
    in the class (associative and satisfying the class identity) and ``f``
    is an automorphism of that table.  Returns the witness ``f`` or
    ``None``.
    """
    if variety not in VARIETIES:
        raise ValueError(f"unknown variety tag {variety!r}")
    for f in involutions(g.order):
        star = _row_permuted(g, f)
        if in_semigroup_class(star, variety) and is_homomorphism(f, star, star):
            return f
    return None


def ad_membership_profile(g: Groupoid) -> dict[str, Mapping | None]:
    """Definition-level membership for all twelve classes in one pass.

    Equivalent to calling :func:`ad_membership_direct` once per tag, but
    each untwisted table is built, associativity-checked and
    automorphism-checked only once.
    """
    found: dict[str, Mapping | None] = {tag: None for tag in VARIETIES}
    missing = set(VARIETIES)
    for f in involutions(g.order):
        if not missing:
            break
        star = _row_permuted(g, f)
        if not star.is_associative() or not is_homomorphism(f, star, star):
            continue
        for tag in sorted(missing):
            if satisfies_variety(star, tag):
                found[tag] = f
                missing.discard(tag)
    return found


def _shift_candidates(g: Groupoid):
    """Involutive automorphisms of ``g`` satisfying the shifted triple law."""
    return (
        f for f in involutive_automorphisms(g) if shifted_associativity(g, f)
    )


def ad_membership_characterized(g: Groupoid, variety: str) -> Mapping | None:
    """Characterization-level membership test for the derived classes.

    Evaluates, per class, an equation list over the input table alone
    (no untwisting): most classes demand a self-inverse automorphism with
    the shifted triple law ``(xy)z = f(x)(yz)`` plus class-specific
    equations; one class quantifies over bare involutions; three need no
    mapping at all.  Returns the first witness in lexicographic order
    (the identity mapping for the three mapping-free classes), or ``None``.
    Provably agrees with :func:`ad_membership_direct` on every table.
    """
    rows = g.rows
    n = g.order

    if variety == "B":
        for f in _shift_candidates(g):
            if absorption_law(g, f):
                return f
        return None

    if variety == "L0":
        # x·y = f(x) for a bare involution f: rows must be constant and the
        # row-constant map self-inverse.
        for f in involutions(n):
            if all(rows[x][y] == f[x] for x in range(n) for y in range(n)):
                return f
        return None

    if variety == "R0":
        return identity_mapping(n) if in_semigroup_class(g, "R0") else None

    if variety == "RB":
        if not satisfies_variety(g, "RB"):
            return None
        for f in _shift_candidates(g):
            if absorption_law(g, f):
                return f
        return None

    if variety == "IB":
        for f in _shift_candidates(g):
            if all(
                rows[x][y] == rows[rows[f[x]][x]][rows[f[y]][y]]
                for x in range(n)
                for y in range(n)
            ):
                return f
        return None

    if variety == "IL0":
        if any(len(set(row)) != 1 for row in rows):
            return None
        for f in _shift_candidates(g):
            return f
        return None

    if variety == "IR0":
        return identity_mapping(n) if in_semigroup_class(g, "IR0") else None

    if variety == "IRB":
        for f in _shift_candidates(g):
            if all(
                rows[rows[x][y]][z] == rows[f[x]][z]
                for x in range(n)
                for y in range(n)
                for z in range(n)
            ):
                return f
        return None

    if variety == "GB":
        for f in _shift_candidates(g):
            if all(
                rows[x][y] == rows[f[rows[x][y]]][rows[x][y]]
                or rows[x][y] == rows[rows[rows[x][y]][x]][y]
                for x in range(n)
                for y in range(n)
            ):
                return f
        return None

    if variety == "GL0":
        for f in _shift_candidates(g):
            if all(
                rows[rows[x][y]][z] == rows[f[x]][f[y]]
                for x in range(n)
                for y in range(n)
                for z in range(n)
            ):
                return f
        return None

    if variety == "GR0":
        return identity_mapping(n) if in_semigroup_class(g, "GR0") else None

    if variety == "GRB":
        for f in _shift_candidates(g):
            if all(
                rows[x][y] == rows[rows[rows[x][y]][f[z]]][rows[x][y]]
                for x in range(n)
                for y in range(n)
                for z in range(n)
            ):
                return f
        return None

    raise ValueError(f"unknown variety tag {variety!r}")


def _require(condition: bool, message: str):
    if not condition:
        raise PreconditionViolated(message)


def check_twisted_semigroup(
    g: Groupoid, star: Groupoid, f: Mapping
) -> dict[str, bool]:
    """Conclusions that hold whenever ``g`` is the ``f``-twist of a semigroup.

    Preconditions (checked): ``star`` is associative, ``f`` is a
    self-inverse automorphism of ``star``, and ``g == twist(star, f)``.
    Returns per-conclusion booleans:

    - ``shifted_associativity``: (xy)z == f(x)(yz) in ``g`` for all triples;
    - ``right_bol``: ((xy)z)w == x((yz)w) in ``g``;
    - ``alpha_isomorphism`` / ``tables_equal``: whether ``f`` maps ``star``
      isomorphically onto ``g``, and whether the two tables coincide;
    - ``isomorphism_iff_equal``: the two previous answers agree (they are
      provably equivalent).
    """
    _require(star.is_associative(), "base table is not associative")
    _require(
        is_involution(f) and is_homomorphism(f, star, star),
        "mapping is not a self-inverse automorphism of the base table",
    )
    _require(twist(star, f) == g, "groupoid is not the twist of the base table")
    alpha_iso = is_homomorphism(f, star, g)
    tables_equal = star.rows == g.rows
    return {
        "shifted_associativity": shifted_associativity(g, f),
        "right_bol": is_right_bol(g),
        "alpha_isomorphism": alpha_iso,
        "tables_equal": tables_equal,
        "isomorphism_iff_equal": alpha_iso == tables_equal,
    }


#: Conclusion names of check_twisted_slg, in report order.
SLG_CONCLUSIONS = (
    "completely_inverse",
    "idempotent_semilattice_match",
    "efixed_involutive_automorphism",
    "canonical_map",
    "inverse_antihomomorphism",
    "shifted_associativity",
    "square_inverse_cancel",
    "inverse_commutes",
    "right_bol",
    "idempotent_left_shift",
    "idempotent_distributive",
    "product_inverse_factorization",
    "inverse_product_match",
)


def check_twisted_slg(g: Groupoid, star: Groupoid, f: Mapping) -> dict[str, bool]:
    """The thirteen conclusions valid when ``g`` is the ``f``-twist of a
    semilattice of groups with ``f`` fixing every idempotent.

    Preconditions (checked): ``is_semilattice_of_groups(star)``, ``f`` is a
    self-inverse automorphism of ``star`` fixing its idempotents, and
    ``g == twist(star, f)``.  Each returned boolean states that the named
    law holds over all element tuples of ``g``; every one is provably true
    under the preconditions, so any ``False`` is an implementation or
    theory alarm.
    """
    _require(
        is_semilattice_of_groups(star),
        "base table is not a semilattice of groups",
    )
    _require(
        is_involution(f) and is_homomorphism(f, star, star),
        "mapping is not a self-inverse automorphism of the base table",
    )
    _require(
        all(f[e] == e for e in star.idempotents()),
        "mapping does not fix every idempotent of the base table",
    )
    _require(twist(star, f) == g, "groupoid is not the twist of the base table")

    rows = g.rows
    n = g.order
    idem = sorted(g.idempotents())

    report: dict[str, bool] = {}
    report["completely_inverse"] = is_completely_inverse(g)
    report["idempotent_semilattice_match"] = (
        g.idempotents() == star.idempotents() and idempotents_form_semilattice(g)
    )
    report["efixed_involutive_automorphism"] = is_homomorphism(f, g, g) and all(
        f[e] == e for e in idem
    )
    try:
        inv = inverse_table(g)
    except NotInverse:
        inv = None
    if inv is None:
        for name in (
            "canonical_map",
            "inverse_antihomomorphism",
            "square_inverse_cancel",
            "inverse_commutes",
            "product_inverse_factorization",
            "inverse_product_match",
        ):
            report[name] = False
    else:
        report["canonical_map"] = all(
            f[a] == rows[a][rows[inv[a]][a]] == rows[a][rows[a][inv[a]]]
            for a in range(n)
        )
        report["inverse_antihomomorphism"] = inverse_antihomomorphism_law(g, f)
        report["square_inverse_cancel"] = all(
            rows[rows[a][a]][inv[a]] == a for a in range(n)
        )
        report["inverse_commutes"] = all(inv[f[a]] == f[inv[a]] for a in range(n))
        report["product_inverse_factorization"] = all(
            rows[p][inv[p]] == rows[rows[a][inv[a]]][rows[b][inv[b]]] == rows[q][inv[q]]
            for a in range(n)
            for b in range(n)
            for p in (rows[a][b],)
            for q in (rows[inv[b]][inv[a]],)
        )
        try:
            star_inv = inverse_table(star)
        except NotInverse:
            report["inverse_product_match"] = False
        else:
            report["inverse_product_match"] = all(
                rows[a][inv[a]] == star.rows[a][star_inv[a]] for a in range(n)
            )
    report["shifted_associativity"] = shifted_associativity(g, f)
    report["right_bol"] = is_right_bol(g)
    report["idempotent_left_shift"] = all(
        rows[e][a] == rows[f[a]][e] for e in idem for a in range(n)
    )
    report["idempotent_distributive"] = all(
        rows[e][rows[a][b]] == rows[rows[e][a]][rows[e][b]]
        for e in idem
        for a in range(n)
        for b in range(n)
    )
    return {name: report[name] for name in SLG_CONCLUSIONS}


#: Classes whose membership alone lets the witness map be promoted to an
#: isomorphism on associative inputs (no surjective-product hypothesis).
ISOMORPHISM_CLASSES = ("B", "L0", "R0", "RB", "IB", "IL0", "IR0", "IRB", "GL0")

#: The four generalized classes with a product-set descent law.
DESCENT_PAIRS = (("B", "IB", "GB"), ("L0", "IL0", "GL0"), ("R0", "IR0", "GR0"), ("RB", "IRB", "GRB"))


def check_class_relations(g: Groupoid) -> dict:
    """Relational laws between the twelve derived classes on one table.

    Returns a report with one boolean per named law (``True`` = the law is
    not violated by ``g``; hypotheses that fail make a law vacuously true):

    - ``inclusion_chain[X]``: membership for base class X implies
      membership for its inflation class, which implies membership for its
      generalized class;
    - ``square_descent[X]``: membership for the generalized class of X
      implies the product-set subtable belongs to the derived class of X;
    - ``semigroup_identity[X]``: an associative member of the derived
      class of X satisfies the X identity itself;
    - ``twist_isomorphism[X]``: on an associative member with surjective
      product set (or for the nine classes where that hypothesis is not
      needed), the witness map is an isomorphism from the untwisted table
      onto ``g``; ``None`` = hypotheses not met, claim skipped.

    ``ok`` aggregates all booleans.
    """
    membership = {tag: ad_membership_direct(g, tag) for tag in VARIETIES}
    report: dict = {
        "membership": {tag: membership[tag] is not None for tag in VARIETIES},
        "inclusion_chain": {},
        "square_descent": {},
        "semigroup_identity": {},
        "twist_isomorphism": {},
    }
    squares, _ = square_subgroupoid(g)
    for base, inflation, generalized in DESCENT_PAIRS:
        chain_ok = True
        if membership[base] is not None and membership[inflation] is None:
            chain_ok = False
        if membership[inflation] is not None and membership[generalized] is None:
            chain_ok = False
        report["inclusion_chain"][base] = chain_ok
        report["square_descent"][base] = (
            membership[generalized] is None
            or ad_membership_direct(squares, base) is not None
        )

    associative = g.is_associative()
    surjective = len(g.products()) == g.order
    for tag in VARIETIES:
        witness = membership[tag]
        if witness is None or not associative:
            report["semigroup_identity"][tag] = True
            report["twist_isomorphism"][tag] = None
            continue
        report["semigroup_identity"][tag] = satisfies_variety(g, tag)
        if surjective or tag in ISOMORPHISM_CLASSES:
            star = _row_permuted(g, witness)
            report["twist_isomorphism"][tag] = is_homomorphism(witness, star, g)
        else:
            report["twist_isomorphism"][tag] = None

    report["ok"] = (
        all(report["inclusion_chain"].values())
        and all(report["square_descent"].values())
        and all(report["semigroup_identity"].values())
        and all(v is not False for v in report["twist_isomorphism"].values())
    )
    return report


@dataclass(frozen=True)
class CriterionVerdict:
    """Outcome of one decision criterion."""

    passed: bool
    alpha: Mapping | None
    failed_conditions: tuple[str, ...]


@dataclass(frozen=True)
class Witness:
    """A verified decomposition: ``twist(star, alpha)`` equals the input."""

    star: Groupoid
    alpha: Mapping
    criterion: str


@dataclass(frozen=True)
class DecisionReport:
    """Joint outcome of the three equivalent decision criteria."""

    determined: bool
    criteria: dict[str, CriterionVerdict]
    witness: Witness | None

    def to_dict(self) -> dict:
        return {
            "schema": "decision_report@1",
            "determined": self.determined,
            "criteria": {
                name: {
                    "passed": verdict.passed,
                    "alpha": list(verdict.alpha) if verdict.alpha else None,
                    "failed_conditions": list(verdict.failed_conditions),
                }
                for name, verdict in self.criteria.items()
            },
            "witness": None
            if self.witness is None
            else {
                "criterion": self.witness.criterion,
                "alpha": list(self.witness.alpha),
                "star": [list(row) for row in self.witness.star.rows],
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _criterion_completely_inverse(g: Groupoid) -> CriterionVerdict:
    failed = []
    if not is_completely_inverse(g):
        failed.append("completely_inverse")
    e_semilattice = idempotents_form_semilattice(g)
    alpha = None
    shift_seen = False
    for f in _shift_candidates(g):
        shift_seen = True
        if e_semilattice or inverse_antihomomorphism_law(g, f):
            alpha = f
            break
    if alpha is None:
        failed.append(
            "shifted_associativity"
            if not shift_seen
            else "idempotent_semilattice_or_inverse_antihomomorphism"
        )
    return CriterionVerdict(not failed, alpha, tuple(failed))


def _criterion_strongly_regular(g: Groupoid) -> CriterionVerdict:
    failed = []
    if strongly_regular_witness(g) is None:
        failed.append("strongly_regular")
    if not idempotents_form_semilattice(g):
        failed.append("idempotent_semilattice")
    alpha = None
    for f in e_fixed_involutive_automorphisms(g):
        if shifted_associativity(g, f):
            alpha = f
            break
    if alpha is None:
        failed.append("shifted_associativity")
    return CriterionVerdict(not failed, alpha, tuple(failed))


def _criterion_right_bol(g: Groupoid) -> CriterionVerdict:
    failed = []
    if not is_completely_inverse(g):
        failed.append("completely_inverse")
    if not is_right_bol(g):
        failed.append("right_bol")
    alpha = None
    try:
        candidate = canonical_twist(g)
    except NotInverse:
        failed.append("canonical_map_undefined")
    else:
        if is_involution(candidate) and is_homomorphism(candidate, g, g):
            alpha = candidate
            if not (
                idempotents_form_semilattice(g)
                or inverse_antihomomorphism_law(g, candidate)
            ):
                failed.append("idempotent_semilattice_or_inverse_antihomomorphism")
        else:
            failed.append("canonical_involutive_automorphism")
    return CriterionVerdict(not failed, alpha, tuple(failed))


def decide(g: Groupoid) -> DecisionReport:
    """Decide whether ``g`` is the twist of a semilattice of groups by an
    idempotent-fixed self-inverse automorphism.

    Three provably equivalent criteria are all evaluated:

    - ``completely_inverse_automorphism``: completely inverse, plus some
      self-inverse automorphism with the shifted triple law for which the
      idempotents form a semilattice or the inverse-antihomomorphism law
      holds;
    - ``strong_regularity``: strongly regular, idempotents form a
      semilattice, plus an idempotent-fixed self-inverse automorphism with
      the shifted triple law;
    - ``right_bol_canonical``: completely inverse and right-Bol, the
      canonical map a ↦ a(aa⁻¹) is a self-inverse automorphism, and the
      semilattice-or-antihomomorphism disjunct holds for it.

    On success the report carries a verified witness: the untwisted table
    (a semilattice of groups), the mapping, and the criterion that supplied
    it.  Any disagreement between criteria, or a witness that fails
    verification, raises :class:`TheoremViolation` — that is an alarm,
    never an expected outcome.
    """
    criteria = {
        "completely_inverse_automorphism": _criterion_completely_inverse(g),
        "strong_regularity": _criterion_strongly_regular(g),
        "right_bol_canonical": _criterion_right_bol(g),
    }
    verdicts = {name: v.passed for name, v in criteria.items()}
    if len(set(verdicts.values())) != 1:
        raise TheoremViolation(
            f"decision criteria disagree: {verdicts} on table {g.rows!r}"
        )
    determined = verdicts["completely_inverse_automorphism"]
    witness = None
    if determined:
        source = "completely_inverse_automorphism"
        alpha = criteria[source].alpha
        star = untwist(g, alpha)
        valid = (
            is_semilattice_of_groups(star)
            and is_homomorphism(alpha, star, star)
            and all(alpha[e] == e for e in star.idempotents())
            and twist(star, alpha) == g
        )
        if not valid:
            raise TheoremViolation(
                f"witness verification failed for table {g.rows!r} "
                f"with mapping {alpha!r}"
            )
        witness = Witness(star=star, alpha=alpha, criterion=source)
    return DecisionReport(determined=determined, criteria=criteria, witness=witness)
