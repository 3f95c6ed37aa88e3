import pytest

from curves import modcurve
from models.exceptions import InvalidPrimeError, ReferenceTableError, SplitClassError
from services.verification import primes_in_range
from store.reference_tables import ReferenceTableStore, reference_store


def slow_above(primes, bound):
    return [pytest.param(p, marks=pytest.mark.slow) if p > bound else p for p in primes]


def test_split_genus_p_11():
    record = modcurve.genus(11)
    assert (record.n, record.m, record.genus) == (2, 2, 3)


@pytest.mark.parametrize("p, expected", [(7, 13), (103, 4141)])
def test_inert_genus(p, expected):
    assert modcurve.genus(p).genus == expected


def test_genus_rejects_small_primes():
    with pytest.raises(InvalidPrimeError):
        modcurve.genus(5)


@pytest.mark.parametrize("p, expected", [(11, -1), (19, 1), (29, 1)])
def test_delta(p, expected):
    assert modcurve.delta(p) == expected


def test_delta_rejects_inert():
    with pytest.raises(SplitClassError):
        modcurve.delta(7)


def test_inert_closed_form_matches_every_tabulated_row():
    assert modcurve.validate_inert_closed_form()
    for row in reference_store.rows("inert"):
        assert modcurve.inert_genus_closed_form(row.p) == row.genus


@pytest.mark.parametrize("p, genus, deg_d", [(11, 3, 4), (19, 7, 6)])
def test_genus_relation_examples(p, genus, deg_d):
    report = modcurve.verify_genus_relation(p)
    assert (report.genus, report.deg_d) == (genus, deg_d)
    assert report.holds


@pytest.mark.parametrize("p", slow_above(primes_in_range(7, 439, "split"), 101))
def test_genus_relation(p):
    assert modcurve.verify_genus_relation(p).holds


@pytest.mark.parametrize("p", slow_above(reference_store.primes("inert"), 53))
def test_inert_table_rows(p):
    assert reference_store.matches("inert", modcurve.inert_table_row(p))


@pytest.mark.parametrize("p", slow_above(reference_store.primes("split"), 101))
def test_split_table_rows(p):
    assert reference_store.matches("split", modcurve.split_table_row(p))


def test_table_row_examples():
    assert modcurve.inert_table_row(7).dict() == {"p": 7, "genus": 13, "deg_d": 2, "genus_minus_degree": 11}
    assert modcurve.split_table_row(11).dict() == {"p": 11, "deg_d": 4, "non_ordinary": 3, "difference": 1}


def test_table_rows_check_split_class():
    with pytest.raises(SplitClassError):
        modcurve.inert_table_row(11)
    with pytest.raises(SplitClassError):
        modcurve.split_table_row(7)


def test_reference_store_contents():
    store = ReferenceTableStore()
    assert len(store.rows("inert")) == 13
    assert len(store.rows("split")) == 40
    assert store.primes("split") == primes_in_range(7, 439, "split")
    assert store.primes("inert") == primes_in_range(7, 103, "inert")
    assert [r.p for r in store.rows("split", pmax=31)] == [11, 19, 29, 31]
    assert store.get_row("split", 13) is None
    with pytest.raises(ReferenceTableError):
        store.rows("ramified")
