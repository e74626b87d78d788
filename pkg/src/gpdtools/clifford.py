"""Block construction of twisted semilattices of groups, and its inverse.

The construction data is: a finite meet semilattice; one finite group per
semilattice element, each with a self-inverse identity-fixing automorphism;
and a transitive system of connecting maps, one per strictly comparable
pair, applied on the right and compatible with the per-block automorphisms.
From this data the module builds both the combined semilattice-of-groups
table and the twisted table it determines, and — in the other direction —
decomposes any decided-positive groupoid back into such data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidSpec, MalformedInput, NotDetermined, NotInverse
from .groupoid import Groupoid, _numbered_content_lines
from .inverses import inverse_table
from .mappings import Mapping, is_homomorphism, is_involution


@dataclass(frozen=True)
class MeetSemilattice:
    """A meet table over elements ``0..k-1``; ``f >= e`` iff ``meet[e][f] == e``."""

    meet: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.meet)
        for row in self.meet:
            if not isinstance(row, tuple) or len(row) != k:
                raise ValueError(f"expected {k} meet rows of length {k}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < k:
                    raise ValueError(f"meet entry {v!r} outside 0..{k - 1}")

    @property
    def order(self) -> int:
        return len(self.meet)

    def leq(self, e: int, f: int) -> bool:
        """True when ``e <= f`` in the induced order."""
        return self.meet[e][f] == e

    def strict_pairs(self) -> tuple[tuple[int, int], ...]:
        """All pairs ``(f, e)`` with ``f > e``, sorted lexicographically."""
        k = self.order
        return tuple(
            (f, e)
            for f in range(k)
            for e in range(k)
            if f != e and self.meet[e][f] == e
        )


@dataclass(frozen=True)
class GroupSpec:
    """One block: a group table (identity at local index 0) plus its
    self-inverse identity-fixing automorphism."""

    rows: tuple[tuple[int, ...], ...]
    involution: Mapping

    def __post_init__(self):
        m = len(self.rows)
        for row in self.rows:
            if not isinstance(row, tuple) or len(row) != m:
                raise ValueError(f"expected {m} group rows of length {m}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < m:
                    raise ValueError(f"group entry {v!r} outside 0..{m - 1}")
        if len(self.involution) != m or any(
            not isinstance(v, int) or not 0 <= v < m for v in self.involution
        ):
            raise ValueError("involution images must lie in the group carrier")

    @property
    def order(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class ConstructionSpec:
    """Full construction data.

    ``homs`` holds one entry per strictly comparable pair ``(f, e)`` with
    ``f > e``, in lexicographic order: the connecting map from block ``f``
    into block ``e``, given by local images (applied on the right).

    ``carrier`` optionally pins the global numbering: one tuple of global
    ids per block, in local order.  ``None`` means the canonical numbering
    (consecutive ids block by block, identity first).  The carrier never
    appears in the serialized form; it exists so that decompositions of
    arbitrarily numbered tables rebuild to the exact original table.
    """

    semilattice: MeetSemilattice
    groups: tuple[GroupSpec, ...]
    homs: tuple[tuple[tuple[int, int], Mapping], ...]
    carrier: tuple[tuple[int, ...], ...] | None = field(default=None, compare=True)

    def __post_init__(self):
        if len(self.groups) != self.semilattice.order:
            raise ValueError("expected one group per semilattice element")

    def hom_map(self) -> dict[tuple[int, int], Mapping]:
        return dict(self.homs)


def _is_group(rows: tuple[tuple[int, ...], ...]) -> list[str]:
    """Violation messages for the group axioms with identity at index 0."""
    m = len(rows)
    if m == 0:
        return ["group is empty"]
    problems = []
    g = Groupoid(rows)
    if not g.is_associative():
        problems.append("group table is not associative")
    if any(rows[0][x] != x or rows[x][0] != x for x in range(m)):
        problems.append("local index 0 is not a two-sided identity")
    for x in range(m):
        if not any(rows[x][y] == 0 and rows[y][x] == 0 for y in range(m)):
            problems.append(f"local element {x} has no two-sided inverse")
    return problems


def validate_spec(spec: ConstructionSpec) -> list[str]:
    """All invariant violations in the construction data, as messages.

    An empty list means the spec is valid.  Checked: the meet table is a
    semilattice; each block is a group with identity at local 0 whose
    mapping is a self-inverse identity-fixing automorphism; the connecting
    maps cover exactly the strictly comparable pairs in order, are
    homomorphisms of the per-block twisted tables, commute with the block
    mappings, and compose transitively along chains; and the carrier, if
    present, is a block-shaped partition of the combined index range.
    """
    problems: list[str] = []
    sl = spec.semilattice
    meet = sl.meet
    k = sl.order

    for e in range(k):
        if meet[e][e] != e:
            problems.append(f"meet not idempotent at {e}")
    for e in range(k):
        for f in range(e + 1, k):
            if meet[e][f] != meet[f][e]:
                problems.append(f"meet not commutative at ({e},{f})")
    for e in range(k):
        for f in range(k):
            for h in range(k):
                if meet[meet[e][f]][h] != meet[e][meet[f][h]]:
                    problems.append(f"meet not associative at ({e},{f},{h})")

    for e, group in enumerate(spec.groups):
        for msg in _is_group(group.rows):
            problems.append(f"block {e}: {msg}")
        alpha = group.involution
        if not is_involution(alpha):
            problems.append(f"block {e}: mapping is not an involution")
        elif not is_homomorphism(alpha, Groupoid(group.rows), Groupoid(group.rows)):
            problems.append(f"block {e}: mapping is not an automorphism")
        if alpha and alpha[0] != 0:
            problems.append(f"block {e}: mapping does not fix the identity")

    expected_pairs = sl.strict_pairs()
    given_pairs = tuple(pair for pair, _ in spec.homs)
    if given_pairs != expected_pairs:
        problems.append(
            f"connecting maps cover pairs {given_pairs}, expected {expected_pairs}"
        )
        return problems  # hom-indexed checks below would mis-address blocks

    homs = spec.hom_map()
    bad_pairs = set()
    for (f, e), images in homs.items():
        src, dst = spec.groups[f], spec.groups[e]
        if len(images) != src.order or any(
            not 0 <= v < dst.order for v in images
        ):
            problems.append(f"map ({f}>{e}): images do not fit the blocks")
            bad_pairs.add((f, e))
            continue
        # Homomorphism of the twisted block tables: the twisted product in
        # block f is alpha_f(a) + b, in block e it is alpha_e(u) ∘ v.
        srows, drows = src.rows, dst.rows
        sa, da = src.involution, dst.involution
        for a in range(src.order):
            for b in range(src.order):
                if images[srows[sa[a]][b]] != drows[da[images[a]]][images[b]]:
                    problems.append(
                        f"map ({f}>{e}): not a homomorphism of the twisted "
                        f"blocks at ({a},{b})"
                    )
                    break
            else:
                continue
            break
        for b in range(src.order):
            if da[images[b]] != images[sa[b]]:
                problems.append(
                    f"map ({f}>{e}): does not commute with the block mappings "
                    f"at {b}"
                )
                break

    for g in range(k):
        for f in range(k):
            for e in range(k):
                if len({g, f, e}) != 3:
                    continue
                if not (sl.leq(e, f) and sl.leq(f, g)):
                    continue
                if bad_pairs & {(g, f), (f, e), (g, e)}:
                    continue
                upper, lower, direct = homs[(g, f)], homs[(f, e)], homs[(g, e)]
                for a in range(spec.groups[g].order):
                    if lower[upper[a]] != direct[a]:
                        problems.append(
                            f"maps ({g}>{f}>{e}): composition differs from the "
                            f"direct map at {a}"
                        )
                        break

    if spec.carrier is not None:
        sizes = [group.order for group in spec.groups]
        total = sum(sizes)
        if len(spec.carrier) != k or any(
            len(block) != size for block, size in zip(spec.carrier, sizes)
        ):
            problems.append("carrier blocks do not match the group sizes")
        elif sorted(v for block in spec.carrier for v in block) != list(range(total)):
            problems.append("carrier is not a partition of the combined range")

    return problems


class _Layout:
    """Global/local index bookkeeping for one construction spec."""

    def __init__(self, spec: ConstructionSpec):
        sizes = [group.order for group in spec.groups]
        if spec.carrier is not None:
            blocks = spec.carrier
        else:
            blocks, start = [], 0
            for size in sizes:
                blocks.append(tuple(range(start, start + size)))
                start += size
        self.blocks = tuple(tuple(block) for block in blocks)
        self.total = sum(sizes)
        self.home = [None] * self.total
        for e, block in enumerate(self.blocks):
            for i, gid in enumerate(block):
                self.home[gid] = (e, i)


def _products(spec: ConstructionSpec, twisted: bool) -> tuple[Groupoid, Mapping]:
    layout = _Layout(spec)
    meet = spec.semilattice.meet
    homs = spec.hom_map()

    def push(e: int, i: int, m: int) -> int:
        return i if e == m else homs[(e, m)][i]

    n = layout.total
    rows = []
    for a in range(n):
        e, i = layout.home[a]
        row = []
        for b in range(n):
            f, j = layout.home[b]
            m = meet[e][f]
            u = push(e, i, m)
            v = push(f, j, m)
            group = spec.groups[m]
            if twisted:
                u = group.involution[u]
            row.append(layout.blocks[m][group.rows[u][v]])
        rows.append(tuple(row))
    alpha = [0] * n
    for a in range(n):
        e, i = layout.home[a]
        alpha[a] = layout.blocks[e][spec.groups[e].involution[i]]
    return Groupoid(tuple(rows)), tuple(alpha)


def _validated(spec: ConstructionSpec) -> ConstructionSpec:
    problems = validate_spec(spec)
    if problems:
        raise InvalidSpec("; ".join(problems))
    return spec


def build_strong_slg(spec: ConstructionSpec) -> Groupoid:
    """The combined semilattice-of-groups table.

    The product of ``a`` in block ``e`` and ``b`` in block ``f`` pushes
    both operands into the meet block via the connecting maps and
    multiplies there in the group.
    """
    table, _ = _products(_validated(spec), twisted=False)
    return table


def build_determined(spec: ConstructionSpec) -> tuple[Groupoid, Mapping]:
    """The twisted table determined by the construction data, plus the
    glued mapping.

    The product applies the meet block's mapping to the pushed-down left
    operand before multiplying, which makes the result exactly
    ``twist(build_strong_slg(spec), alpha)`` with ``alpha`` the union of
    the block mappings.
    """
    return _products(_validated(spec), twisted=True)


def decompose(g: Groupoid, alpha: Mapping) -> ConstructionSpec:
    """Recover construction data from a determined groupoid and its mapping.

    Requires that ``g`` decides positive with witness mapping ``alpha``
    (see ``determination.decide``); raises :class:`NotDetermined` when the
    structure needed for the recovery is missing or inconsistent.  The
    blocks are the classes of ``a·a⁻¹``; the per-block group tables are
    the untwisted restrictions; the connecting maps are left products by
    the lower idempotent.  The result always rebuilds to exactly
    ``(g, alpha)`` and its carrier is ``None`` whenever the recovered
    numbering is already canonical.
    """
    n = g.order
    rows = g.rows
    if len(alpha) != n or not is_involution(alpha):
        raise NotDetermined("mapping is not an involution on the carrier")
    idem = sorted(g.idempotents())
    if not idem and n:
        raise NotDetermined("no idempotents, so no blocks to recover")
    index_of = {label: e for e, label in enumerate(idem)}

    try:
        inv = inverse_table(g)
    except NotInverse as exc:
        raise NotDetermined(f"no inverse table: {exc}") from None

    meet_rows = []
    for e_label in idem:
        meet_row = []
        for f_label in idem:
            p = rows[e_label][f_label]
            if p not in index_of:
                raise NotDetermined(
                    f"idempotent product {e_label}*{f_label}={p} is not idempotent"
                )
            meet_row.append(index_of[p])
        meet_rows.append(tuple(meet_row))
    semilattice = MeetSemilattice(tuple(meet_rows))

    members: list[list[int]] = [[] for _ in idem]
    for a in range(n):
        e_label = rows[a][inv[a]]
        if e_label not in index_of:
            raise NotDetermined(f"class label {e_label} of {a} is not idempotent")
        if a != e_label:
            members[index_of[e_label]].append(a)
    blocks = tuple(
        (e_label, *sorted(rest)) for e_label, rest in zip(idem, members)
    )

    local: dict[int, tuple[int, int]] = {}
    for e, block in enumerate(blocks):
        for i, gid in enumerate(block):
            local[gid] = (e, i)

    groups = []
    for e, block in enumerate(blocks):
        table = []
        for a in block:
            row = []
            for b in block:
                p = rows[alpha[a]][b]  # untwisted product
                home = local.get(p)
                if home is None or home[0] != e:
                    raise NotDetermined(
                        f"untwisted block {e} is not closed at ({a},{b})"
                    )
                row.append(home[1])
            table.append(tuple(row))
        images = []
        for a in block:
            home = local.get(alpha[a])
            if home is None or home[0] != e:
                raise NotDetermined(f"mapping does not preserve block {e}")
            images.append(home[1])
        groups.append(GroupSpec(tuple(table), tuple(images)))

    homs = []
    for f, e in semilattice.strict_pairs():
        e_label = idem[e]
        images = []
        for b in blocks[f]:
            p = rows[e_label][b]
            home = local.get(p)
            if home is None or home[0] != e:
                raise NotDetermined(
                    f"connecting image {e_label}*{b}={p} misses block {e}"
                )
            images.append(home[1])
        homs.append(((f, e), tuple(images)))

    canonical: list[tuple[int, ...]] = []
    start = 0
    for block in blocks:
        canonical.append(tuple(range(start, start + len(block))))
        start += len(block)
    carrier = None if tuple(canonical) == blocks else blocks

    spec = ConstructionSpec(
        semilattice=semilattice,
        groups=tuple(groups),
        homs=tuple(homs),
        carrier=carrier,
    )
    problems = validate_spec(spec)
    if problems:
        raise NotDetermined("recovered data is invalid: " + "; ".join(problems))
    rebuilt, rebuilt_alpha = _products(spec, twisted=True)
    if rebuilt != g or rebuilt_alpha != tuple(alpha):
        raise NotDetermined("recovered data does not rebuild the input")
    return spec


def serialize_cspec(spec: ConstructionSpec) -> str:
    """Render construction data in the sectioned ``.cspec`` text format.

    The carrier is deliberately not serialized; parsing yields the
    canonical numbering.
    """
    sl = spec.semilattice
    out = [f"semilattice {sl.order}"]
    out.extend(" ".join(map(str, row)) for row in sl.meet)
    for e, group in enumerate(spec.groups):
        out.append(f"group {e} {group.order}")
        out.extend(" ".join(map(str, row)) for row in group.rows)
        out.append(f"alpha {e}")
        out.append(" ".join(map(str, group.involution)))
    for (f, e), images in spec.homs:
        out.append(f"hom {f} {e}")
        out.append(" ".join(map(str, images)))
    return "\n".join(out) + "\n"


def parse_cspec(text: str) -> ConstructionSpec:
    """Parse the sectioned ``.cspec`` format (see :func:`serialize_cspec`).

    The parser is strict: sections must appear in canonical order with
    exactly the expected headers, the connecting-map sections must cover
    exactly the strictly comparable pairs in lexicographic order, and no
    trailing content is allowed.
    """
    lines = _numbered_content_lines(text)
    pos = 0

    def take(what: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise MalformedInput(f"unexpected end of input, expected {what}")
        entry = lines[pos]
        pos += 1
        return entry

    def take_ints(count: int, bound: int, what: str) -> tuple[int, ...]:
        lineno, line = take(what)
        parts = line.split()
        if len(parts) != count:
            raise MalformedInput(
                f"expected {count} entries for {what}, got {len(parts)}", lineno
            )
        values = []
        for part in parts:
            try:
                v = int(part)
            except ValueError:
                raise MalformedInput(f"bad entry {part!r} in {what}", lineno) from None
            if not 0 <= v < bound:
                raise MalformedInput(
                    f"entry {v} outside 0..{bound - 1} in {what}", lineno
                )
            values.append(v)
        return tuple(values)

    def take_header(expected: str):
        lineno, line = take(f"header {expected!r}")
        if line != expected:
            raise MalformedInput(f"expected {expected!r}, got {line!r}", lineno)

    lineno, head = take("semilattice header")
    parts = head.split()
    if len(parts) != 2 or parts[0] != "semilattice":
        raise MalformedInput(f"expected 'semilattice <k>', got {head!r}", lineno)
    try:
        k = int(parts[1])
    except ValueError:
        raise MalformedInput(f"bad semilattice order {parts[1]!r}", lineno) from None
    if k <= 0:
        raise MalformedInput(f"semilattice order must be positive, got {k}", lineno)
    meet = tuple(take_ints(k, k, "meet row") for _ in range(k))
    semilattice = MeetSemilattice(meet)

    groups = []
    for e in range(k):
        lineno, head = take("group header")
        parts = head.split()
        if len(parts) != 3 or parts[0] != "group":
            raise MalformedInput(f"expected 'group {e} <m>', got {head!r}", lineno)
        if parts[1] != str(e):
            raise MalformedInput(
                f"expected group section for block {e}, got {parts[1]!r}", lineno
            )
        try:
            m = int(parts[2])
        except ValueError:
            raise MalformedInput(f"bad group order {parts[2]!r}", lineno) from None
        if m <= 0:
            raise MalformedInput(f"group order must be positive, got {m}", lineno)
        rows = tuple(take_ints(m, m, f"group {e} row") for _ in range(m))
        take_header(f"alpha {e}")
        involution = take_ints(m, m, f"alpha {e} images")
        groups.append(GroupSpec(rows, involution))

    homs = []
    for f, e in semilattice.strict_pairs():
        take_header(f"hom {f} {e}")
        images = take_ints(groups[f].order, groups[e].order, f"hom {f} {e} images")
        homs.append(((f, e), images))

    if pos != len(lines):
        lineno, line = lines[pos]
        raise MalformedInput(f"unexpected trailing content {line!r}", lineno)
    return ConstructionSpec(
        semilattice=semilattice, groups=tuple(groups), homs=tuple(homs)
    )
