from typing import Dict, List, Optional, Union

from models.exceptions import ReferenceTableError
from models.pydantic_models import InertTableRow, SplitTableRow

TableRow = Union[InertTableRow, SplitTableRow]

# (p, genus, deg d, genus - deg d) for the inert primes 7..103
_INERT = [
    (7, 13, 2, 11),
    (13, 55, 4, 51),
    (17, 99, 6, 93),
    (23, 189, 8, 181),
    (37, 511, 14, 497),
    (43, 697, 16, 681),
    (47, 837, 18, 819),
    (53, 1071, 20, 1051),
    (67, 1729, 26, 1703),
    (73, 2059, 28, 2031),
    (83, 2673, 32, 2641),
    (97, 3667, 38, 3629),
    (103, 4141, 40, 4101),
]

# (p, deg d, distinct roots of d in the closure, difference) for split primes 11..439
_SPLIT = [
    (11, 4, 3, 1), (19, 6, 5, 1), (29, 10, 10, 0), (31, 12, 11, 1),
    (41, 16, 16, 0), (59, 22, 21, 1), (61, 24, 22, 2), (71, 28, 25, 3),
    (79, 30, 27, 3), (89, 34, 32, 2), (101, 40, 38, 2), (109, 42, 42, 0),
    (131, 52, 45, 7), (139, 54, 53, 1), (149, 58, 54, 4), (151, 60, 57, 3),
    (179, 70, 69, 1), (181, 72, 68, 4), (191, 76, 75, 1), (199, 78, 75, 3),
    (211, 84, 79, 5), (229, 90, 90, 0), (239, 94, 91, 3), (241, 96, 92, 4),
    (251, 100, 95, 5), (269, 106, 106, 0), (271, 108, 105, 3), (281, 112, 110, 2),
    (311, 124, 123, 1), (331, 132, 129, 3), (349, 138, 134, 4), (359, 142, 139, 3),
    (379, 150, 147, 3), (389, 154, 154, 0), (401, 160, 158, 2), (409, 162, 156, 6),
    (419, 166, 165, 1), (421, 168, 162, 6), (431, 172, 165, 7), (439, 174, 169, 5),
]


class ReferenceTableStore:
    """In-memory store of the published genus/degree tables, keyed by collection and p."""

    def __init__(self):
        self.collections: Dict[str, Dict[int, TableRow]] = {
            "inert": {
                p: InertTableRow(p=p, genus=g, deg_d=deg, genus_minus_degree=diff)
                for p, g, deg, diff in _INERT
            },
            "split": {
                p: SplitTableRow(p=p, deg_d=deg, non_ordinary=count, difference=diff)
                for p, deg, count, diff in _SPLIT
            },
        }

    def _collection(self, which: str) -> Dict[int, TableRow]:
        if which not in self.collections:
            raise ReferenceTableError(f"Unknown reference table: {which}")
        return self.collections[which]

    def get_row(self, which: str, p: int) -> Optional[TableRow]:
        return self._collection(which).get(p)

    def rows(self, which: str, pmax: Optional[int] = None) -> List[TableRow]:
        rows = sorted(self._collection(which).values(), key=lambda r: r.p)
        if pmax is not None:
            rows = [r for r in rows if r.p <= pmax]
        return rows

    def primes(self, which: str) -> List[int]:
        return [r.p for r in self.rows(which)]

    def matches(self, which: str, row: TableRow) -> Optional[bool]:
        """Whether a computed row equals the stored one; None if p is not tabulated."""
        stored = self.get_row(which, row.p)
        if stored is None:
            return None
        return stored.dict() == row.dict()


reference_store = ReferenceTableStore()
