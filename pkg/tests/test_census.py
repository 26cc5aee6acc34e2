import json

import pytest

import trivext
from trivext.census import LatticeRecord


@pytest.mark.parametrize('m, counts', [(1, (1, 1, 1)), (2, (1, 1, 1)),
                                       (4, (2, 2, 2))])
def test_small_census(m, counts):
    report = trivext.run_census(m, workers=1)
    assert report.counts == counts
    assert report.field == 'q'


def test_census_records_sorted():
    report = trivext.run_census(5, workers=1)
    assert report.lattice_count == 3
    forms = [trivext.CanonicalForm.parse(r.canonical_form)
             for r in report.records]
    assert forms == sorted(forms)
    assert all(r.size == 5 for r in report.records)


def test_census_report_is_json():
    data = trivext.run_census(4, workers=1).to_dict()
    text = json.dumps(data)
    assert json.loads(text)['lattice_count'] == 2
    record = data['records'][0]
    assert record['verdict']['kind'] == 'periodic'
    assert record['per_simple_periods'] == record['verdict']['per_simple_periods']


def test_census_over_gf2():
    report = trivext.run_census(3, field=trivext.Field(2), workers=1)
    assert report.field == '2'
    assert report.counts == (1, 1, 1)


def test_census_independent_of_worker_count():
    serial = trivext.run_census(4, workers=1).to_dict()
    pooled = trivext.run_census(4, workers=2).to_dict()
    assert serial == pooled


def test_screened_out_record():
    record = LatticeRecord('2:1', 2, ((0, 1),), 'x^2 - 2*x + 1')
    assert not record.coxeter_periodic
    assert not record.simple_periodic
    assert record.to_dict()['verdict'] is None


@pytest.mark.slow
def test_eleven_element_census():
    report = trivext.run_census(11)
    assert report.counts == (82, 19, 15)
    survivors = [r for r in report.records if r.coxeter_periodic]
    assert all(isinstance(r.verdict, (trivext.Periodic, trivext.Diverging))
               for r in survivors)
    assert sum(isinstance(r.verdict, trivext.Diverging)
               for r in survivors) == 4
