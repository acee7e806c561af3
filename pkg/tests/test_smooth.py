import pytest

from lagfib.degeneration import SmoothCaseDatum, analyse, classify_smooth
from lagfib.degeneration.records import PROPER_KERNEL_ROWS
from lagfib.degeneration.resolution import QuotientSingularity as QS
from lagfib.degeneration.smooth import cm_permutation
from lagfib.errors import ExcludedConfiguration, InadmissibleGerm, InconsistentDatum
from lagfib.examples import h1_generator

A1 = QS(2, 1)


def datum(order, kernel, locus, order_h=None, **kw):
    return SmoothCaseDatum(2, order_h or order, order, kernel, tuple(locus), **kw)


def test_documented_examples():
    rec = classify_smooth(datum(2, 2, [(1, A1)] * 4))
    assert (rec.name, str(rec.kodaira_fibre), rec.degree) == ("I*_0-0", "I*_0", 1)
    rec = classify_smooth(datum(3, 1, []))
    assert (rec.name, rec.degree) == ("I_0-3", 3)
    rec = classify_smooth(datum(4, 2, [(2, A1)] * 2, order_h=8))
    assert (rec.name, rec.degree) == ("I*_0-5", 4)


@pytest.mark.parametrize("row", [r for r in PROPER_KERNEL_ROWS if r.excluded], ids=lambda r: r.label)
def test_excluded_configurations(row):
    with pytest.raises(ExcludedConfiguration):
        classify_smooth(datum(row.order, row.order_kernel, row.entries))


def test_trivial_group_gives_smooth_fibre():
    assert classify_smooth(datum(1, 1, [])).name == "I_0"


@pytest.mark.parametrize(
    "kw, error",
    [
        (dict(order=5, kernel=5, locus=[]), InconsistentDatum),
        (dict(order=4, kernel=3, locus=[]), InconsistentDatum),
        (dict(order=2, kernel=1, locus=[(1, A1)]), InconsistentDatum),
        (dict(order=2, kernel=2, locus=[]), InconsistentDatum),
        (dict(order=2, kernel=2, locus=[(1, A1)] * 3), InconsistentDatum),
        (dict(order=3, kernel=3, locus=[(1, A1)] * 4), InconsistentDatum),
    ],
)
def test_inconsistent_data(kw, error):
    with pytest.raises(error):
        classify_smooth(datum(kw["order"], kw["kernel"], kw["locus"]))


def test_generator_gate():
    ok = datum(3, 3, [(1, QS(3, 1))] * 3, h1_generator=h1_generator(2, 3))
    assert classify_smooth(ok).name == "IV-0"
    # rotating both elliptic factors leaves no invariant (0,1)-form
    both = ((0, 0, -1, 0), (0, 0, 0, -1), (1, 0, -1, 0), (0, 1, 0, -1))
    with pytest.raises(InadmissibleGerm):
        classify_smooth(datum(3, 3, [(1, QS(3, 1))] * 3, h1_generator=both))
    with pytest.raises(InconsistentDatum):
        classify_smooth(datum(4, 4, [(1, QS(4, 1))] * 2 + [(1, A1)], h1_generator=h1_generator(2, 2)))


def test_multiplicity_gates():
    cusp = [(1, QS(6, 1)), (1, QS(3, 1)), (1, A1)]
    with pytest.raises(ExcludedConfiguration):
        classify_smooth(datum(6, 6, cusp, base_multiplicity=5))
    with pytest.raises(InadmissibleGerm):
        classify_smooth(datum(2, 2, [(1, A1)] * 4, base_multiplicity=2))
    with pytest.raises(ExcludedConfiguration):
        classify_smooth(datum(6, 3, [(1, QS(3, 1))] * 3, base_multiplicity=2))


def test_cm_permutations():
    assert cm_permutation(4, 2) == (0, 2, 1, 3)
    assert cm_permutation(6, 2) == (0, 2, 3, 1)
    assert cm_permutation(6, 3) == (0, 2, 1)
    with pytest.raises(InconsistentDatum):
        cm_permutation(3, 2)


def test_analysis_carries_provenance():
    res = analyse(datum(6, 2, [(1, A1)] * 4))
    assert res.branch == "smooth" and res.group_order == 6
    assert res.locus_label == "I*_0-3"
    assert res.slice.fibre.family == "I*"
    assert res.global_multiplicity == 3


def test_surface_slice_note():
    d = SmoothCaseDatum(1, 6, 6, 6, ((1, QS(6, 5)), (1, QS(3, 2)), (1, A1)))
    res = analyse(d)
    assert res.record.name == "II*"
    assert "surface slice (n = 1)" in res.notes
