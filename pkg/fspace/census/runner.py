"""
Compute census reports and write them out as ``.poset`` files plus a CSV.
"""

import logging
from collections.abc import Iterable, Sequence
from pathlib import Path

from fspace.census.report import CSV_COLUMNS, CensusReport, CensusRow
from fspace.complexes import reduced_euler_of_poset
from fspace.enumeration import enumerate_posets
from fspace.errors import FspaceError
from fspace.homotopy import find_beat_points, is_contractible
from fspace.linalg import determinant, rank_bar
from fspace.models.poset import Poset
from fspace.order import height, width
from fspace.parsers import PosetParser
from fspace.subposets import count_patterns, det_plus_identity
from fspace.utils.io_utils import write_csv

logger = logging.getLogger(__name__)

CSV_NAME = "invariants.csv"


def census_row(p: Poset, index: int) -> CensusRow:
    det = determinant(p)
    patterns = count_patterns(p)
    return CensusRow(
        index=index,
        n=p.n,
        abs_det=abs(det),
        det=det,
        rank_bar=rank_bar(p),
        width=width(p),
        height=height(p),
        reduced_euler=reduced_euler_of_poset(p),
        a2=patterns.a2,
        a3=patterns.a3,
        l32=patterns.l32,
        det_plus_i=det_plus_identity(p),
        contractible=is_contractible(p),
        beat_points=len(find_beat_points(p)),
    )


def run_census(posets: Iterable[Poset]) -> CensusReport:
    rows = tuple(census_row(p, index) for index, p in enumerate(posets, start=1))
    report = CensusReport(rows)
    logger.info(
        "census of %d posets: %d contractible", len(report), report.contractible_count
    )
    return report


def census_for_size(n: int, limit: int | None = None) -> CensusReport:
    """Census over every n-point poset up to isomorphism, in enumeration order."""
    return run_census(enumerate_posets(n, limit))


def class_file_name(index: int) -> str:
    return f"class_{index:04d}.poset"


def write_census(report: CensusReport, posets: Sequence[Poset], out_dir: str | Path) -> list[Path]:
    """Write ``class_0001.poset``, ... and ``invariants.csv`` into ``out_dir``.

    Returns:
        The written paths, the CSV last.
    """
    if len(posets) != len(report):
        raise FspaceError(f"{len(posets)} posets for a census of {len(report)} rows")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    parser = PosetParser()
    written = []
    for row, p in zip(report.rows, posets):
        path = out / class_file_name(row.index)
        path.write_text(parser.dump(p), encoding="utf-8")
        written.append(path)
    csv_path = out / CSV_NAME
    write_csv(csv_path, CSV_COLUMNS, report.to_csv_rows())
    written.append(csv_path)
    logger.info("wrote %d class files to %s", len(posets), out)
    return written
