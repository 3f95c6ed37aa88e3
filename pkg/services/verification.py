"""Per-prime verification workers.

Workers are top-level functions of p so they can be shipped to a process pool.
"""

from typing import Callable, Dict, List, Optional

from sympy import primerange

from curves import families, modcurve
from models.pydantic_models import (
    CheckResult,
    InertTableRow,
    Sign,
    SplitClass,
    SplitTableRow,
    VanishingPair,
    VerificationSummary,
)
from store.reference_tables import reference_store

MIN_PRIME = 7


def primes_in_range(pmin: int, pmax: int, which: Optional[str] = None) -> List[int]:
    """Primes 7 <= p <= pmax (p >= pmin), optionally restricted to "split" or "inert"."""
    primes = [int(p) for p in primerange(max(pmin, MIN_PRIME), pmax + 1)]
    if which is None:
        return primes
    return [p for p in primes if families.split_class(p).value == which]


def inert_row(p: int) -> InertTableRow:
    return modcurve.inert_table_row(p)


def split_row(p: int) -> SplitTableRow:
    return modcurve.split_table_row(p)


def check_shape(p: int) -> CheckResult:
    minus = families.verify_shape(Sign.MINUS, p)
    plus = families.verify_shape(Sign.PLUS, p)
    passed = minus.holds_identically and minus.corollary_holds is not False
    return CheckResult(
        p=p,
        check="shape",
        passed=passed,
        details={
            "split_class": minus.split_class,
            "claimed_shape": minus.claimed_shape,
            "witness": minus.witness,
            "corollary_holds": minus.corollary_holds,
            "plus_claimed_shape": plus.claimed_shape,
            "plus_holds_in_model_basis": plus.holds_identically,
            "plus_witness": plus.witness,
        },
    )


def check_genus(p: int) -> CheckResult:
    if families.split_class(p) is SplitClass.SPLIT:
        report = modcurve.verify_genus_relation(p)
        return CheckResult(p=p, check="genus", passed=report.holds, details=report.dict())
    stored = reference_store.get_row("inert", p)
    computed = modcurve.genus(p).genus
    return CheckResult(
        p=p,
        check="genus",
        passed=stored is not None and stored.genus == computed,
        details={"genus": computed, "table_genus": stored.genus if stored else None},
    )


def check_lemma(p: int) -> CheckResult:
    report = families.lemma_degrees(p)
    return CheckResult(p=p, check="lemma", passed=report.holds, details=report.dict())


def check_remark(p: int) -> CheckResult:
    report = families.congruence_remark_check(p)
    return CheckResult(
        p=p, check="remark", passed=report.matches_remark_as_printed, details=report.dict()
    )


def check_corollary(p: int) -> CheckResult:
    details = {}
    passed = True
    for sign in Sign:
        scan = families.scan_family(sign, p)
        details[sign.value] = {
            "counts": scan.counts,
            "exceptional_t0": scan.exceptional_t0,
            "dichotomy_holds": scan.dichotomy_holds,
        }
        passed = passed and bool(scan.dichotomy_holds)
    return CheckResult(p=p, check="corollary", passed=passed, details=details)


def check_table(p: int) -> CheckResult:
    which = families.split_class(p).value
    row = split_row(p) if which == "split" else inert_row(p)
    return CheckResult(
        p=p,
        check="table",
        passed=bool(reference_store.matches(which, row)),
        details={"table": which, **row.dict()},
    )


CHECKS: Dict[str, Callable[[int], CheckResult]] = {
    "shape": check_shape,
    "genus": check_genus,
    "lemma": check_lemma,
    "remark": check_remark,
    "corollary": check_corollary,
    "table": check_table,
}


def applicable(check: str, p: int) -> bool:
    cls = families.split_class(p)
    if check == "lemma":
        return cls is SplitClass.SPLIT
    if check == "corollary":
        return cls is SplitClass.INERT
    if check == "genus":
        return cls is SplitClass.SPLIT or reference_store.get_row("inert", p) is not None
    if check == "table":
        return reference_store.get_row(cls.value, p) is not None
    return True


def summarize(check: str, pmin: int, pmax: int, results: List[CheckResult]) -> VerificationSummary:
    """Aggregate per-prime results; the remark check additionally reports its finding."""
    passed = sum(1 for r in results if r.passed)
    findings = {}
    if check == "remark":
        pairs = {
            cls: sorted({r.details["vanishing_pair"] for r in results if r.details["split_class"] == cls}, key=str)
            for cls in (SplitClass.SPLIT.value, SplitClass.INERT.value)
        }
        split_pairs, inert_pairs = pairs["split"], pairs["inert"]
        findings = {
            "split_vanishing_pairs": split_pairs,
            "inert_vanishing_pairs": inert_pairs,
            "consistent": len(split_pairs) <= 1 and len(inert_pairs) <= 1,
            "printed_cases_swapped": (
                split_pairs in ([], [VanishingPair.ANTIDIAGONAL.value])
                and inert_pairs in ([], [VanishingPair.DIAGONAL.value])
                and bool(results)
            ),
        }
    return VerificationSummary(
        check=check,
        pmin=pmin,
        pmax=pmax,
        total=len(results),
        passed=passed,
        failed=len(results) - passed,
        all_passed=passed == len(results),
        findings=findings,
    )
