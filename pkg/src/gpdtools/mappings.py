"""Self-maps of a finite groupoid: involutions, homomorphisms, translations.

A mapping on ``0..n-1`` is a tuple ``f`` of length ``n`` with ``f[x]`` the
image of ``x``.  Enumeration helpers always yield mappings in lexicographic
order of that tuple, so "first found" results are deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import MalformedInput
from .groupoid import Groupoid

Mapping = tuple[int, ...]


def identity_mapping(n: int) -> Mapping:
    return tuple(range(n))


def is_involution(f: Mapping) -> bool:
    """True when ``f`` is a self-inverse bijection (f(f(x)) == x)."""
    n = len(f)
    return all(0 <= y < n and f[y] == x for x, y in enumerate(f))


@lru_cache(maxsize=64)
def involutions(n: int) -> tuple[Mapping, ...]:
    """All self-inverse bijections of ``0..n-1`` in lexicographic order.

    Built by pairing the smallest unplaced point either with itself or with
    a larger unplaced point; choices are explored in ascending image order,
    which yields the tuples lexicographically sorted.
    """
    result: list[Mapping] = []
    images = [-1] * n

    def place(done: int):
        while done < n and images[done] != -1:
            done += 1
        if done == n:
            result.append(tuple(images))
            return
        # Candidate images for the smallest unplaced point, ascending:
        # itself (a fixed point) comes before every larger partner.
        images[done] = done
        place(done + 1)
        images[done] = -1
        for partner in range(done + 1, n):
            if images[partner] == -1:
                images[done] = partner
                images[partner] = done
                place(done + 1)
                images[done] = -1
                images[partner] = -1

    place(0)
    return tuple(result)


def is_homomorphism(f: Mapping, g: Groupoid, h: Groupoid) -> bool:
    """True when ``f(x *_g y) == f(x) *_h f(y)`` for all x, y."""
    grows = g.rows
    hrows = h.rows
    return all(
        f[grows[x][y]] == hrows[f[x]][f[y]]
        for x in range(g.order)
        for y in range(g.order)
    )


def _isomorphisms(g: Groupoid, h: Groupoid, first_only: bool):
    """Backtracking search for bijective homomorphisms ``g -> h``.

    Images are assigned to 0, 1, 2, ... in ascending candidate order, so the
    complete output is lexicographically sorted.  After assigning the image
    of ``k`` we check every product constraint whose three participants
    (both factors and the product) are all assigned, and that involves ``k``:
    pairs ``(i, k)`` and ``(k, i)`` with ``i <= k`` whose product is ``<= k``,
    plus older pairs ``(i, j)`` with ``i, j < k`` whose product equals ``k``.
    Every pair ``(i, j)`` is thus checked exactly once, at step
    ``max(i, j, i*j)``, which makes accepted full assignments genuine
    homomorphisms.
    """
    n = g.order
    if h.order != n:
        return
    grows = g.rows
    hrows = h.rows
    image = [-1] * n
    used = [False] * n
    # late[k] lists pairs (i, j) with i, j < k and i*j == k.
    late: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            p = grows[i][j]
            if p > max(i, j):
                late[p].append((i, j))

    found: list[Mapping] = []

    def extend(k: int) -> bool:
        if k == n:
            found.append(tuple(image))
            return first_only
        for cand in range(n):
            if used[cand]:
                continue
            image[k] = cand
            used[cand] = True
            ok = True
            for i in range(k + 1):
                p = grows[i][k]
                if p <= k and image[p] != hrows[image[i]][cand]:
                    ok = False
                    break
                q = grows[k][i]
                if q <= k and image[q] != hrows[cand][image[i]]:
                    ok = False
                    break
            if ok:
                for i, j in late[k]:
                    if hrows[image[i]][image[j]] != cand:
                        ok = False
                        break
            if ok and extend(k + 1):
                return True
            used[cand] = False
        image[k] = -1
        return False

    extend(0)
    yield from found


def find_isomorphism(g: Groupoid, h: Groupoid) -> Mapping | None:
    """First isomorphism ``g -> h`` in lexicographic order, or ``None``."""
    for f in _isomorphisms(g, h, first_only=True):
        return f
    return None


@lru_cache(maxsize=4096)
def automorphisms(g: Groupoid) -> tuple[Mapping, ...]:
    """All automorphisms of ``g`` in lexicographic order."""
    return tuple(_isomorphisms(g, g, first_only=False))


@lru_cache(maxsize=4096)
def involutive_automorphisms(g: Groupoid) -> tuple[Mapping, ...]:
    """All self-inverse automorphisms of ``g`` (includes the identity map
    whenever it is an automorphism, i.e. always)."""
    return tuple(f for f in automorphisms(g) if is_involution(f))


def e_fixed_involutive_automorphisms(g: Groupoid) -> tuple[Mapping, ...]:
    """Self-inverse automorphisms fixing every idempotent pointwise."""
    idem = g.idempotents()
    return tuple(
        f for f in involutive_automorphisms(g) if all(f[e] == e for e in idem)
    )


def in_lt(g: Groupoid, f: Mapping) -> bool:
    """Left-translation compatibility: ``f(x*y) == x * f(y)`` for all x, y."""
    rows = g.rows
    return all(
        f[rows[x][y]] == rows[x][f[y]] for x in range(g.order) for y in range(g.order)
    )


def in_rt(g: Groupoid, f: Mapping) -> bool:
    """Right-translation compatibility: ``f(x*y) == f(x) * y`` for all x, y."""
    rows = g.rows
    return all(
        f[rows[x][y]] == rows[f[x]][y] for x in range(g.order) for y in range(g.order)
    )


def absorption_law(g: Groupoid, f: Mapping) -> bool:
    """True when ``x * f(x) == f(x)`` for every x."""
    rows = g.rows
    return all(rows[x][f[x]] == f[x] for x in range(g.order))


def shifted_associativity(g: Groupoid, f: Mapping) -> bool:
    """True when ``(x*y)*z == f(x)*(y*z)`` for all x, y, z."""
    rows = g.rows
    for x, rx in enumerate(rows):
        rfx = rows[f[x]]
        for y, ry in enumerate(rows):
            if rows[rx[y]] != tuple(map(rfx.__getitem__, ry)):
                return False
    return True


def parse_mapping(text: str) -> Mapping:
    """Parse the ``.map`` format: size line, then one line of all images.

    The second content line holds ``n`` whitespace-separated integers in
    ``0..n-1``.  Blank lines and ``#`` comments are ignored.
    """
    from .groupoid import _numbered_content_lines

    lines = _numbered_content_lines(text)
    if not lines:
        raise MalformedInput("empty input, expected a size line")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise MalformedInput(f"expected integer size, got {head!r}", lineno) from None
    if n <= 0:
        raise MalformedInput(f"size must be positive, got {n}", lineno)
    if len(lines) != 2:
        raise MalformedInput(
            f"expected exactly one image line after the size line, got {len(lines) - 1}"
        )
    lineno, line = lines[1]
    parts = line.split()
    if len(parts) != n:
        raise MalformedInput(f"expected {n} images, got {len(parts)}", lineno)
    images = []
    for part in parts:
        try:
            v = int(part)
        except ValueError:
            raise MalformedInput(f"bad image {part!r}", lineno) from None
        if not 0 <= v < n:
            raise MalformedInput(f"image {v} outside 0..{n - 1}", lineno)
        images.append(v)
    return tuple(images)


def serialize_mapping(f: Mapping) -> str:
    """Render a mapping in the ``.map`` format (newline-terminated)."""
    return str(len(f)) + "\n" + " ".join(map(str, f)) + "\n"
