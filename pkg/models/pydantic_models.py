from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1"


class Sign(str, Enum):
    MINUS = "minus"
    PLUS = "plus"


class SplitClass(str, Enum):
    SPLIT = "split"  # p = 1, 4 mod 5
    INERT = "inert"  # p = 2, 3 mod 5


class CurveType(str, Enum):
    ORDINARY = "Ordinary"
    SUPERSINGULAR = "Supersingular"
    PRODUCT_OF_SUPERSINGULAR_EC = "ProductOfSupersingularEC"
    NON_ORDINARY_OTHER = "NonOrdinaryOther"


class ShapeKind(str, Enum):
    DIAGONAL = "diagonal"
    ANTIDIAGONAL = "antidiagonal"
    UPPER_WITH_TIE = "upper_with_tie"  # [[a, b - a], [0, b]]
    INERT_PLUS = "inert_plus"  # [[a, b], [a, -a]]


class VanishingPair(str, Enum):
    DIAGONAL = "c_{p-1},c_{2p-2}"
    ANTIDIAGONAL = "c_{p-2},c_{2p-1}"


class Record(BaseModel):
    class Config:
        use_enum_values = True


class Classification(Record):
    tag: CurveType
    genus: int
    p_rank_upper_bound: int
    p_rank: int
    supersingular: Optional[bool] = None  # undecided for g > 2 unless N = 0


class FamilySpec(Record):
    sign: Sign
    p: int
    split_class: SplitClass


class DdtReport(Record):
    p: int
    modulus: int
    d: List[int]  # coefficients in t, lowest degree first
    degree: int
    distinct_roots_closure: int
    rational_roots: int
    leading_coeff: int


class ScanEntry(Record):
    t0: int
    degenerate: bool
    tag: Optional[CurveType] = None
    determinant: Optional[int] = None
    p_rank: Optional[int] = None


class ScanReport(Record):
    p: int
    sign: Sign
    split_class: SplitClass
    entries: List[ScanEntry]
    counts: Dict[str, int]
    exceptional_t0: List[int]
    dichotomy_holds: Optional[bool] = None  # inert primes only


class ShapeReport(Record):
    p: int
    sign: Sign
    split_class: SplitClass
    claimed_shape: ShapeKind
    holds_identically: bool
    witness: Optional[int] = None  # index r of a c_r breaking the claimed shape
    asserted: bool = True
    corollary_holds: Optional[bool] = None  # inert primes only


class RemarkReport(Record):
    p: int
    split_class: SplitClass
    vanishing_pair: Optional[VanishingPair] = None
    printed_pair: VanishingPair
    matches_remark_as_printed: bool


class LemmaReport(Record):
    p: int
    k: int
    case: str  # "5k+1" or "5k-1"
    expected_deg_a: int
    observed_deg_a: int
    expected_deg_b: int
    observed_deg_b: int
    deg_d: int
    holds: bool


class GenusRecord(Record):
    p: int
    split_class: SplitClass
    genus: int
    n: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    delta: Optional[int] = None


class GenusRelationReport(Record):
    p: int
    genus: int
    deg_d: int
    delta: int
    holds: bool


class InertTableRow(Record):
    p: int
    genus: int
    deg_d: int
    genus_minus_degree: int


class SplitTableRow(Record):
    p: int
    deg_d: int
    non_ordinary: int
    difference: int


class CheckResult(Record):
    p: int
    check: str
    passed: bool
    details: Dict[str, Any] = {}


class VerificationSummary(Record):
    check: str
    pmin: int
    pmax: int
    total: int
    passed: int
    failed: int
    all_passed: bool
    findings: Dict[str, Any] = {}


class OutputRecord(Record):
    schema_version: str = SCHEMA_VERSION
    command: Dict[str, Any]
    payload: Dict[str, Any]
    timing_ms: float = 0.0


class RunConfig(Record):
    jobs: int = Field(1, ge=1)
    output_format: str = "json"
    verbosity: int = Field(0, ge=0)
