"""Generate the poset and matrix fixtures for the YAML-driven tests.

Run from the repository root:

    python data/fixtures/generate_fixtures.py

Regenerates:
    data/fixtures/chain3.poset
    data/fixtures/vposet.poset
    data/fixtures/s1.poset
    data/fixtures/weakbeat4.poset
    data/fixtures/circle8.poset
    data/fixtures/twocircles8.poset
    data/fixtures/antichain2.pm

The generated files are committed to the repository so tests do not depend on
this script at runtime, but the script is kept so fixtures stay reproducible.

The complexes (``*.cplx``), the action file and ``bad.pm`` are written by hand;
``bad.pm`` cannot come from a poset.
"""

from pathlib import Path

from fspace.families import antichain, chain, circle8, twocircles8, weakbeat4
from fspace.models.poset import Poset
from fspace.order import matrix_from_poset
from fspace.parsers import MatrixParser, PosetParser

OUTPUT_DIR = Path(__file__).parent


def write_poset(name: str, comment: str, p: Poset) -> None:
    text = f"# {comment}\n" + PosetParser().dump(p)
    (OUTPUT_DIR / f"{name}.poset").write_text(text, encoding="utf-8")
    print(f"wrote {name}.poset")


def main() -> None:
    write_poset("chain3", "x1 < x2 < x3", chain(3))
    write_poset("vposet", "x1, x2 < x3", Poset.from_relations(3, [(0, 2), (1, 2)]))
    write_poset(
        "s1",
        "minimal finite model of the circle: a, b < c, d",
        Poset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)], ["a", "b", "c", "d"]),
    )
    write_poset("weakbeat4", "a < b < x and a < c < x", weakbeat4())
    write_poset("circle8", "x1 < x5 > x2 < x6 > x3 < x7 > x4 < x8 > x1", circle8())
    write_poset(
        "twocircles8",
        "two disjoint circles: x1, x2 < x5, x6 and x3, x4 < x7, x8",
        twocircles8(),
    )
    matrix = MatrixParser().dump(matrix_from_poset(antichain(2)))
    (OUTPUT_DIR / "antichain2.pm").write_text(
        "# two incomparable points\n" + matrix, encoding="utf-8"
    )
    print("wrote antichain2.pm")


if __name__ == "__main__":
    main()
