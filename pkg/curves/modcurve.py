"""Genus of the triangular modular curve X0_(5,oo,oo)(P) and the genus-degree relation.

Split p: p + 1 = 5n + m with m = 0 (p = 4 mod 5) or m = 2 (p = 1 mod 5), and
g = 2n - 1. Inert p: g = 2(p^2 + 1)/5 - p, a closed form fitted to the
published inert table and checked against every tabulated row before use.
"""

import logging
from functools import lru_cache

from curves import families
from models.exceptions import ReferenceTableError, SplitClassError
from models.pydantic_models import (
    GenusRecord,
    GenusRelationReport,
    InertTableRow,
    SplitClass,
    SplitTableRow,
)
from store.reference_tables import reference_store

logger = logging.getLogger(__name__)


def inert_genus_closed_form(p: int) -> int:
    return 2 * (p * p + 1) // 5 - p


@lru_cache(maxsize=None)
def validate_inert_closed_form() -> bool:
    """Compare the inert closed form with every tabulated row; raise on a mismatch."""
    for row in reference_store.rows("inert"):
        computed = inert_genus_closed_form(row.p)
        if computed != row.genus:
            raise ReferenceTableError(
                f"Inert genus closed form gives {computed} for p={row.p}, table says {row.genus}"
            )
    return True


def genus(p: int) -> GenusRecord:
    families.check_family_prime(p)
    cls = families.split_class(p)
    if cls is SplitClass.INERT:
        validate_inert_closed_form()
        return GenusRecord(p=p, split_class=cls, genus=inert_genus_closed_form(p))
    if p % 5 == 1:
        m, k = 2, (p - 1) // 5
    else:
        m, k = 0, (p + 1) // 5
    n = (p + 1 - m) // 5
    return GenusRecord(p=p, split_class=cls, genus=2 * n - 1, n=n, m=m, k=k, delta=delta(p))


def delta(p: int) -> int:
    """-1 for p = 1 mod 5, +1 for p = 4 mod 5."""
    if p % 5 == 1:
        return -1
    if p % 5 == 4:
        return 1
    raise SplitClassError(f"delta is defined for split primes only, got p={p}")


def verify_genus_relation(p: int) -> GenusRelationReport:
    """Compare g with deg d(t) + delta, both sides computed independently."""
    families.check_family_prime(p)
    d = delta(p)
    g = genus(p).genus
    deg_d = families.ddt(p).degree
    report = GenusRelationReport(p=p, genus=g, deg_d=deg_d, delta=d, holds=g == deg_d + d)
    if not report.holds:
        logger.warning("Genus relation fails at p=%d: g=%d, deg d=%d, delta=%d", p, g, deg_d, d)
    return report


def inert_table_row(p: int) -> InertTableRow:
    families.check_family_prime(p)
    if families.split_class(p) is not SplitClass.INERT:
        raise SplitClassError(f"p={p} is not inert")
    g = genus(p).genus
    deg_d = families.ddt(p).degree
    return InertTableRow(p=p, genus=g, deg_d=deg_d, genus_minus_degree=g - deg_d)


def split_table_row(p: int) -> SplitTableRow:
    families.check_family_prime(p)
    if families.split_class(p) is not SplitClass.SPLIT:
        raise SplitClassError(f"p={p} is not split")
    report = families.ddt(p)
    return SplitTableRow(
        p=p,
        deg_d=report.degree,
        non_ordinary=report.distinct_roots_closure,
        difference=report.degree - report.distinct_roots_closure,
    )
