"""
Census models: the invariants of every poset in a batch.
"""

from dataclasses import dataclass, fields
from typing import Any

CSV_COLUMNS = (
    "index",
    "n",
    "absDet",
    "det",
    "rankBar",
    "width",
    "height",
    "reducedEuler",
    "a2",
    "a3",
    "l32",
    "detPlusI",
    "contractible",
    "beatPoints",
)


@dataclass(frozen=True)
class CensusRow:
    """Invariants of one poset. ``index`` is 1-based within its report."""

    index: int
    n: int
    abs_det: int
    det: int
    rank_bar: int
    width: int
    height: int
    reduced_euler: int
    a2: int
    a3: int
    l32: int
    det_plus_i: int
    contractible: bool
    beat_points: int

    @property
    def euler_consistent(self) -> bool:
        return self.abs_det == abs(self.reduced_euler)

    def to_dict(self) -> dict[str, Any]:
        return dict(zip(CSV_COLUMNS, (getattr(self, f.name) for f in fields(self))))


@dataclass(frozen=True)
class CensusReport:
    rows: tuple[CensusRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def contractible_count(self) -> int:
        return sum(1 for row in self.rows if row.contractible)

    @property
    def euler_consistent(self) -> bool:
        return all(row.euler_consistent for row in self.rows)

    def to_dict(self) -> dict[str, Any]:
        return {
            "count": len(self.rows),
            "contractible": self.contractible_count,
            "eulerConsistent": self.euler_consistent,
            "rows": [row.to_dict() for row in self.rows],
        }

    def to_csv_rows(self) -> list[list[Any]]:
        return [
            [int(v) if isinstance(v, bool) else v for v in row.to_dict().values()]
            for row in self.rows
        ]

    def __str__(self) -> str:
        lines = [
            f"Census ({len(self.rows)} posets, {self.contractible_count} contractible)",
            f"  |det| = |reduced Euler| throughout: {'yes' if self.euler_consistent else 'NO'}",
            "",
        ]
        header = (
            f"  {'#':>5} {'n':>2} {'det':>4} {'rank':>4} {'width':>5} "
            f"{'height':>6} {'euler':>5} {'A2':>3} {'A3':>3} {'L32':>3} {'det+I':>5} {'beats':>5}"
        )
        lines.extend([header, "  " + "-" * (len(header) - 2)])
        for row in self.rows:
            lines.append(
                f"  {row.index:>5} {row.n:>2} {row.det:>4} {row.rank_bar:>4} {row.width:>5} "
                f"{row.height:>6} {row.reduced_euler:>5} {row.a2:>3} {row.a3:>3} "
                f"{row.l32:>3} {row.det_plus_i:>5} {row.beat_points:>5}"
            )
        return "\n".join(lines)
