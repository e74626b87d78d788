"""Built-in fixture tables used by the CLI and the golden test suite."""

from __future__ import annotations

from .clifford import ConstructionSpec, GroupSpec, MeetSemilattice
from .groupoid import Groupoid

#: Order-3 band: x*y = y except that products into the third element stay
#: inside {0, 1} (0*2 = 1*2 = 1), and 2*2 = 2.
BAND3 = Groupoid(((0, 1, 1), (0, 1, 1), (0, 1, 2)))
#: Swap of the two absorbing elements, fixing the third.
BAND3_SWAP = (1, 0, 2)

#: Order-2 table with constant rows crossed: 0*x = 1 and 1*x = 0.
FLIP2 = Groupoid(((1, 1), (0, 0)))
#: The swap mapping.
FLIP2_SWAP = (1, 0)

#: Addition modulo 3.
Z3 = Groupoid(((0, 1, 2), (1, 2, 0), (2, 0, 1)))
#: Negation modulo 3.
Z3_NEGATION = (0, 2, 1)
#: The twist of Z3 by negation: x*y = y - x (mod 3).
Z3_TWIST = Groupoid(((0, 1, 2), (2, 0, 1), (1, 2, 0)))

#: Construction data whose determined groupoid is Z3_TWIST.
Z3_TWIST_SPEC = ConstructionSpec(
    semilattice=MeetSemilattice(((0,),)),
    groups=(GroupSpec(Z3.rows, Z3_NEGATION),),
    homs=(),
)

#: name -> (table, mapping, construction spec or None)
FIXTURES: dict[str, tuple[Groupoid, tuple[int, ...], ConstructionSpec | None]] = {
    "band3": (BAND3, BAND3_SWAP, None),
    "flip2": (FLIP2, FLIP2_SWAP, None),
    "z3twist": (Z3_TWIST, Z3_NEGATION, Z3_TWIST_SPEC),
}
