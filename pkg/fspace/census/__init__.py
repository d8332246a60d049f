"""
Batch invariants over a set of posets, typically a full enumeration.
"""

from fspace.census.report import CSV_COLUMNS, CensusReport, CensusRow
from fspace.census.runner import census_for_size, census_row, run_census, write_census

__all__ = [
    "CSV_COLUMNS",
    "CensusReport",
    "CensusRow",
    "census_for_size",
    "census_row",
    "run_census",
    "write_census",
]
